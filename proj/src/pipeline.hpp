#pragma once

#include "tangency.hpp"
#include "weave.hpp"

namespace gobelin {

enum class Formula { General, Codim1, Codim2, Curve, Surface };

std::string formula_name(Formula f);
std::optional<Formula> formula_from_name(const std::string& s);

struct JobOptions {
  unsigned max_degree = kDefaultDegreeCap;
  bool cross_check = false;
  Formula formula = Formula::General;
  std::string dump_dir;  // empty = no dump
};

// One parsed computation: the variable context, the defining tuple f, the
// vector field X, an optional cofactor matrix c, and the base field.
struct Job {
  Context ctx;
  FieldSpec field;
  std::vector<Polynomial> f;
  std::vector<Polynomial> X;
  std::optional<PolyMatrix> c;
  JobOptions options;

  std::size_t N() const { return ctx.size(); }
  std::size_t k() const { return f.size(); }
  std::size_t n() const { return N() - k(); }
};

// Line-oriented "key = value" job grammar; '#' starts a comment. Keys:
//   vars  comma-separated identifiers
//   f     semicolon-separated polynomial expressions
//   X     semicolon-separated, one per variable
//   c     optional; rows separated by ';', entries by ','
//   field "Q" or "Fp:<prime>"
Job load_job(const std::string& text);
Job load_job_file(const std::string& path);

struct IndexReport {
  long long dim_b = 0;
  long long tau = 0;
  std::vector<long long> h;  // h_0..h_n with h_n = tau'
  long long coker_last = 0;  // dim coker gamma_{n-1}
  long long index_hom = 0;
  long long index_closed = 0;
  long long index_gsv = 0;
  std::string formula_used;
  std::string field_name;
  std::vector<std::string> warnings;
  std::size_t N = 0, k = 0, n = 0;
};

// The full pipeline: tangency, B, tau', the scalarized complex, homology, and
// the index through both the alternating sum and the closed form. The two
// routes must agree or the run aborts with an internal-inconsistency error.
IndexReport compute_index(const Job& job);

struct CrossCheck {
  struct Line {
    std::string text;
    bool ok;
  };
  std::vector<Line> lines;
  bool all_ok = true;
};

// Recomputes the index through every applicable printed specialization and
// compares the shared quantities against the general report.
CrossCheck cross_check(const Job& job, const IndexReport& general);

// format: "text" or "json". JSON keys are exactly dimB, tauPrime, h,
// indexHom, indexGSV, formulaUsed, field, warnings.
std::string emit_report(const IndexReport& r, const std::string& format,
                        const CrossCheck* cc = nullptr);

long long dim_b_of(const Job& job);
long long tau_of(const Job& job);

struct TangencyReport {
  bool c_given = false;
  bool ok = false;     // a valid cofactor exists (given and verified, or computed)
  bool exact = false;  // phi*X == c*f as polynomials for the c below
  PolyMatrix c;
  std::vector<std::string> notes;
};
TangencyReport tangency_report(const Job& job);
std::string emit_tangency(const TangencyReport& r, const std::string& format);

}  // namespace gobelin
