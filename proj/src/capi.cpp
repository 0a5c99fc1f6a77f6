#include "gobelin/gobelin.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "pipeline.hpp"

struct gob_job {
  gobelin::Job job;
};

struct gob_report {
  gobelin::IndexReport report;
  gobelin::CrossCheck cross;
  bool has_cross = false;
};

namespace {

thread_local std::string g_last_error = "";
thread_local std::string g_last_code = "";

gob_status fail(const gobelin::Error& e) {
  g_last_error = e.what();
  g_last_code = e.code();
  return static_cast<gob_status>(static_cast<int>(e.kind()));
}

gob_status fail_unknown(const std::exception& e) {
  g_last_error = e.what();
  g_last_code = "Internal";
  return GOB_ERROR_INTERNAL;
}

template <typename Fn>
gob_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    g_last_code.clear();
    return GOB_OK;
  } catch (const gobelin::Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    return fail_unknown(e);
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gob_status require(bool cond, const char* msg) {
  if (cond) return GOB_OK;
  g_last_error = msg;
  g_last_code = "BadArgument";
  return GOB_ERROR_INPUT;
}

}  // namespace

extern "C" {

const char* gob_last_error(void) { return g_last_error.c_str(); }
const char* gob_last_error_code(void) { return g_last_code.c_str(); }

gob_status gob_job_parse(const char* text, gob_job** out) {
  if (require(text && out, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] { *out = new gob_job{gobelin::load_job(text)}; });
}

gob_status gob_job_parse_file(const char* path, gob_job** out) {
  if (require(path && out, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] { *out = new gob_job{gobelin::load_job_file(path)}; });
}

void gob_job_free(gob_job* job) { delete job; }

gob_status gob_job_set_max_degree(gob_job* job, unsigned cap) {
  if (require(job != nullptr, "null job") != GOB_OK) return GOB_ERROR_INPUT;
  if (require(cap > 0, "degree cap must be positive") != GOB_OK) return GOB_ERROR_INPUT;
  job->job.options.max_degree = cap;
  return GOB_OK;
}

gob_status gob_job_set_formula(gob_job* job, const char* formula) {
  if (require(job && formula, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  auto f = gobelin::formula_from_name(formula);
  if (!f) {
    g_last_error = std::string("unknown formula '") + formula +
                   "': expected general|codim1|codim2|curve|surface";
    g_last_code = "BadArgument";
    return GOB_ERROR_INPUT;
  }
  job->job.options.formula = *f;
  return GOB_OK;
}

gob_status gob_job_set_cross_check(gob_job* job, int enable) {
  if (require(job != nullptr, "null job") != GOB_OK) return GOB_ERROR_INPUT;
  job->job.options.cross_check = enable != 0;
  return GOB_OK;
}

gob_status gob_job_set_dump_dir(gob_job* job, const char* dir) {
  if (require(job != nullptr, "null job") != GOB_OK) return GOB_ERROR_INPUT;
  job->job.options.dump_dir = dir ? dir : "";
  return GOB_OK;
}

gob_status gob_job_set_field(gob_job* job, const char* field) {
  if (require(job && field, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] {
    gobelin::FieldSpec spec = gobelin::FieldSpec::rationals();
    std::string fs = field;
    if (fs == "Q") {
      spec = gobelin::FieldSpec::rationals();
    } else if (fs.rfind("Fp:", 0) == 0) {
      spec = gobelin::FieldSpec::prime_field(std::stoull(fs.substr(3)));
    } else {
      gobelin::throw_input("BadField", "field must be Q or Fp:<prime>");
    }
    // reparse through the job grammar so every coefficient lands in the field
    gobelin::Job& j = job->job;
    gobelin::Job rebuilt = j;
    rebuilt.field = spec;
    rebuilt.f.clear();
    rebuilt.X.clear();
    for (const auto& p : j.f)
      rebuilt.f.push_back(gobelin::parse_polynomial(p.str(), j.ctx, spec));
    rebuilt.X.clear();
    for (const auto& p : j.X)
      rebuilt.X.push_back(gobelin::parse_polynomial(p.str(), j.ctx, spec));
    if (j.c) {
      gobelin::PolyMatrix c(j.c->rows(), j.c->cols(), j.ctx, spec);
      for (std::size_t a = 0; a < c.rows(); ++a)
        for (std::size_t b = 0; b < c.cols(); ++b)
          c.at(a, b) = gobelin::parse_polynomial(j.c->at(a, b).str(), j.ctx, spec);
      rebuilt.c = std::move(c);
    }
    j = std::move(rebuilt);
  });
}

gob_status gob_index(const gob_job* job, gob_report** out) {
  if (require(job && out, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] {
    auto rep = std::make_unique<gob_report>();
    rep->report = gobelin::compute_index(job->job);
    if (job->job.options.cross_check) {
      rep->cross = gobelin::cross_check(job->job, rep->report);
      rep->has_cross = true;
      if (!rep->cross.all_ok) {
        std::string detail;
        for (const auto& l : rep->cross.lines)
          if (!l.ok) detail += (detail.empty() ? "" : "; ") + l.text;
        gobelin::throw_internal("cross-check mismatch: " + detail);
      }
    }
    *out = rep.release();
  });
}

void gob_report_free(gob_report* report) { delete report; }

gob_status gob_report_render(const gob_report* report, const char* format, char** out) {
  if (require(report && format && out, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] {
    *out = dup_string(gobelin::emit_report(report->report, format,
                                           report->has_cross ? &report->cross : nullptr));
  });
}

void gob_string_free(char* s) { std::free(s); }

long long gob_report_dim_b(const gob_report* r) { return r ? r->report.dim_b : 0; }
long long gob_report_tau_prime(const gob_report* r) { return r ? r->report.tau : 0; }
long long gob_report_index_hom(const gob_report* r) { return r ? r->report.index_hom : 0; }
long long gob_report_index_gsv(const gob_report* r) { return r ? r->report.index_gsv : 0; }

int gob_report_h_length(const gob_report* r) {
  return r ? static_cast<int>(r->report.h.size()) : 0;
}

long long gob_report_h(const gob_report* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->report.h.size())) return 0;
  return r->report.h[static_cast<std::size_t>(i)];
}

int gob_report_warning_count(const gob_report* r) {
  return r ? static_cast<int>(r->report.warnings.size()) : 0;
}

const char* gob_report_warning(const gob_report* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->report.warnings.size())) return "";
  return r->report.warnings[static_cast<std::size_t>(i)].c_str();
}

gob_status gob_dim_b(const gob_job* job, long long* out) {
  if (require(job && out, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] { *out = gobelin::dim_b_of(job->job); });
}

gob_status gob_tau_prime(const gob_job* job, long long* out) {
  if (require(job && out, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] { *out = gobelin::tau_of(job->job); });
}

gob_status gob_tangency(const gob_job* job, const char* format, char** out) {
  if (require(job && format && out, "null argument") != GOB_OK) return GOB_ERROR_INPUT;
  return guarded([&] {
    *out = dup_string(gobelin::emit_tangency(gobelin::tangency_report(job->job), format));
  });
}

}  // extern "C"
