/*
 * gobelin - homological / GSV index of a vector field tangent to an isolated
 * complete intersection singularity, in exact arithmetic.
 *
 * C interface over the C++ core: opaque handles, integer status codes.
 * Status codes double as CLI exit codes:
 *   0 ok, 2 input error, 3 hypothesis violation (NotTangent / InfiniteDimB /
 *   NotIsolatedSingularity), 4 resource cap exceeded, 5 internal
 *   inconsistency.
 */
#ifndef GOBELIN_GOBELIN_H
#define GOBELIN_GOBELIN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gob_status {
  GOB_OK = 0,
  GOB_ERROR_INPUT = 2,
  GOB_ERROR_HYPOTHESIS = 3,
  GOB_ERROR_RESOURCE = 4,
  GOB_ERROR_INTERNAL = 5
} gob_status;

typedef struct gob_job gob_job;
typedef struct gob_report gob_report;

/* Message for the most recent failure on this thread; never NULL. */
const char* gob_last_error(void);
/* Machine-readable tag for the most recent failure, e.g. "NotTangent". */
const char* gob_last_error_code(void);

/*
 * Jobs. The text grammar is line oriented "key = value" with '#' comments:
 *   vars = x, y, z, w
 *   f    = x^2+y^2+z*w; x*y+z^2+w^2
 *   X    = ...; ...; ...; ...          (one entry per variable)
 *   c    = 2*y+w, -2*x; z, y+1/2*w    (optional; rows ';', entries ',')
 *   field = Q | Fp:<prime>            (optional; default Q)
 */
gob_status gob_job_parse(const char* text, gob_job** out);
gob_status gob_job_parse_file(const char* path, gob_job** out);
void gob_job_free(gob_job* job);

gob_status gob_job_set_max_degree(gob_job* job, unsigned cap);
/* formula: "general", "codim1", "codim2", "curve", "surface" */
gob_status gob_job_set_formula(gob_job* job, const char* formula);
gob_status gob_job_set_cross_check(gob_job* job, int enable);
gob_status gob_job_set_dump_dir(gob_job* job, const char* dir);
/* field: "Q" or "Fp:<prime>"; reparses the job's polynomials */
gob_status gob_job_set_field(gob_job* job, const char* field);

/* Full index computation. */
gob_status gob_index(const gob_job* job, gob_report** out);
void gob_report_free(gob_report* report);

/* format: "text" or "json"; result malloc'd, release with gob_string_free. */
gob_status gob_report_render(const gob_report* report, const char* format, char** out);
void gob_string_free(char* s);

long long gob_report_dim_b(const gob_report* report);
long long gob_report_tau_prime(const gob_report* report);
long long gob_report_index_hom(const gob_report* report);
long long gob_report_index_gsv(const gob_report* report);
int gob_report_h_length(const gob_report* report);
long long gob_report_h(const gob_report* report, int i);
int gob_report_warning_count(const gob_report* report);
const char* gob_report_warning(const gob_report* report, int i);

/* One-shot queries. */
gob_status gob_dim_b(const gob_job* job, long long* out);
gob_status gob_tau_prime(const gob_job* job, long long* out);
/* Tangency check/recovery; renders like gob_report_render. */
gob_status gob_tangency(const gob_job* job, const char* format, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GOBELIN_GOBELIN_H */
