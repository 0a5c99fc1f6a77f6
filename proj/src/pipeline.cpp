#include "pipeline.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gobelin {

namespace {

constexpr const char* kBadPrimeCaveat =
    "prime-field mode is advisory: a bad prime can change dimensions; certify over Q";

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

}  // namespace

std::string formula_name(Formula f) {
  switch (f) {
    case Formula::General: return "general";
    case Formula::Codim1: return "codim1";
    case Formula::Codim2: return "codim2";
    case Formula::Curve: return "curve";
    case Formula::Surface: return "surface";
  }
  return "general";
}

std::optional<Formula> formula_from_name(const std::string& s) {
  if (s == "general") return Formula::General;
  if (s == "codim1") return Formula::Codim1;
  if (s == "codim2") return Formula::Codim2;
  if (s == "curve") return Formula::Curve;
  if (s == "surface") return Formula::Surface;
  return std::nullopt;
}

Job load_job(const std::string& text) {
  std::map<std::string, std::pair<std::string, std::size_t>> kv;  // key -> (value, line)
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw_input("JobSyntax", "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key != "vars" && key != "f" && key != "X" && key != "c" && key != "field")
      throw_input("JobSyntax", "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (kv.count(key))
      throw_input("JobSyntax", "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = {value, lineno};
  }

  auto require = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw_input("JobSyntax", "missing required key '" + key + "'");
    return it->second.first;
  };

  Job job;
  job.field = FieldSpec::rationals();
  if (kv.count("field")) {
    const std::string& fs = kv["field"].first;
    if (fs == "Q") {
      job.field = FieldSpec::rationals();
    } else if (fs.rfind("Fp:", 0) == 0) {
      const std::string digits = fs.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw_input("JobSyntax", "field must be Q or Fp:<prime>, got '" + fs + "'");
      job.field = FieldSpec::prime_field(std::stoull(digits));
    } else {
      throw_input("JobSyntax", "field must be Q or Fp:<prime>, got '" + fs + "'");
    }
  }

  std::vector<std::string> names;
  for (auto& v : split(require("vars"), ',')) {
    std::string nm = trim(v);
    if (!is_identifier(nm)) throw_input("JobSyntax", "bad variable name '" + nm + "'");
    for (const auto& prev : names)
      if (prev == nm) throw_input("JobSyntax", "duplicate variable '" + nm + "'");
    names.push_back(nm);
  }
  job.ctx = Context::make(names);
  const std::size_t N = job.ctx.size();

  for (auto& fs : split(require("f"), ';')) {
    std::string src = trim(fs);
    if (src.empty()) throw_input("JobSyntax", "empty entry in f");
    Polynomial p = parse_polynomial(src, job.ctx, job.field);
    if (p.is_zero()) throw_input("JobSyntax", "zero polynomial in f");
    job.f.push_back(std::move(p));
  }
  const std::size_t k = job.f.size();
  if (N <= k)
    throw_input("JobSyntax",
                "n must be positive: need more variables than defining equations (N = " +
                    std::to_string(N) + ", k = " + std::to_string(k) + ")");

  auto xs = split(require("X"), ';');
  if (xs.size() != N)
    throw_input("JobSyntax", "X must have " + std::to_string(N) + " entries, got " +
                                 std::to_string(xs.size()));
  for (auto& s : xs) {
    std::string src = trim(s);
    if (src.empty()) throw_input("JobSyntax", "empty entry in X");
    job.X.push_back(parse_polynomial(src, job.ctx, job.field));
  }

  if (kv.count("c")) {
    auto rows = split(kv["c"].first, ';');
    if (rows.size() != k)
      throw_input("JobSyntax", "c must have " + std::to_string(k) + " rows, got " +
                                   std::to_string(rows.size()));
    PolyMatrix c(k, k, job.ctx, job.field);
    for (std::size_t a = 0; a < k; ++a) {
      auto entries = split(rows[a], ',');
      if (entries.size() != k)
        throw_input("JobSyntax", "row " + std::to_string(a + 1) + " of c must have " +
                                     std::to_string(k) + " entries, got " +
                                     std::to_string(entries.size()));
      for (std::size_t b = 0; b < k; ++b) {
        std::string src = trim(entries[b]);
        if (src.empty()) throw_input("JobSyntax", "empty entry in c");
        c.at(a, b) = parse_polynomial(src, job.ctx, job.field);
      }
    }
    job.c = std::move(c);
  }
  return job;
}

Job load_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_input("JobSyntax", "cannot open job file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_job(buf.str());
}

namespace {

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (const auto& p : v)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

QuotientAlgebra build_b(const Job& job) {
  std::vector<Polynomial> gens = nonzero(job.X);
  try {
    if (gens.empty()) throw_hypothesis("NotZeroDimensional", "X is identically zero");
    StandardBasis sb = standard_basis(gens, MonomialOrder::local(), job.options.max_degree);
    return QuotientAlgebra(std::move(sb));
  } catch (const Error& e) {
    if (e.code() == "NotZeroDimensional")
      throw_hypothesis("InfiniteDimB",
                       "dim B is infinite: X does not have an isolated zero in the ambient "
                       "space");
    throw;
  }
}

struct ResolvedCofactor {
  PolyMatrix c;
  bool exact;
  bool computed;
};

// Step one of the pipeline: a verified cofactor if given, a computed one
// otherwise (local membership decides NotTangent before anything else runs).
ResolvedCofactor resolve_cofactor(const Job& job) {
  if (job.c) {
    if (!verify_tangency(job.f, job.X, *job.c))
      throw_hypothesis("NotTangent", "the given c does not satisfy phi*X = c*f exactly");
    return {*job.c, true, false};
  }
  try {
    CofactorResult r = compute_cofactor(job.f, job.X, job.options.max_degree);
    return {std::move(r.c), r.exact, true};
  } catch (const Error& e) {
    if (e.code() == "NotZeroDimensional")
      throw_hypothesis("InfiniteDimB",
                       "dim B is infinite: X does not have an isolated zero in the ambient "
                       "space");
    throw;
  }
}

SmallGobelinComplex build_by_formula(Formula formula, const Job& job,
                                     const std::vector<Polynomial>& f, const PolyMatrix& c,
                                     const QuotientAlgebra& B) {
  const int k = static_cast<int>(job.k());
  const int n = static_cast<int>(job.n());
  switch (formula) {
    case Formula::General:
      return build_complex(k, n, f, c, B);
    case Formula::Codim1:
      if (k != 1)
        throw_input("UnsupportedSpecialization", "codim1 formula needs k = 1, job has k = " +
                                                     std::to_string(k));
      return specialized_complex(SpecialKind::Codim1, n, f, c, B);
    case Formula::Codim2:
      if (k != 2)
        throw_input("UnsupportedSpecialization", "codim2 formula needs k = 2, job has k = " +
                                                     std::to_string(k));
      return specialized_complex(SpecialKind::Codim2, n, f, c, B);
    case Formula::Curve:
      if (n != 1)
        throw_input("UnsupportedSpecialization", "curve formula needs n = 1, job has n = " +
                                                     std::to_string(n));
      return specialized_complex(SpecialKind::Curve, n, f, c, B);
    case Formula::Surface:
      if (n != 2)
        throw_input("UnsupportedSpecialization", "surface formula needs n = 2, job has n = " +
                                                     std::to_string(n));
      return specialized_complex(SpecialKind::Surface, n, f, c, B);
  }
  throw_internal("unreachable");
}

long long closed_form_index(Formula formula, const Job& job, const QuotientAlgebra& B,
                            const std::vector<Polynomial>& f, const PolyMatrix& c,
                            long long dim_b, long long tau, long long coker_last) {
  const long long n = static_cast<long long>(job.n());
  const long long k = static_cast<long long>(job.k());
  switch (formula) {
    case Formula::General: {
      long long sum = 0;
      for (long long j = 0; j + 2 <= n; ++j) {
        long long b = static_cast<long long>(
            binomial(static_cast<std::uint64_t>(k - 1 + j), static_cast<std::uint64_t>(j)));
        sum += (j % 2 == 0) ? b : -b;
      }
      long long sgn_n1 = (n - 1) % 2 == 0 ? 1 : -1;
      long long sgn_n = n % 2 == 0 ? 1 : -1;
      return sum * dim_b + sgn_n1 * coker_last + sgn_n * tau;
    }
    case Formula::Codim1: {
      long long rank_c = static_cast<long long>(exact_rank(B.multiplication_matrix(c.at(0, 0))));
      long long rank_f = static_cast<long long>(exact_rank(B.multiplication_matrix(f[0])));
      if (n % 2 == 0) return dim_b - (dim_b - rank_c) + tau;  // dim B - dim B/(c) + tau'
      return (dim_b - rank_f) - tau;                          // dim B/(f) - tau'
    }
    case Formula::Codim2: {
      if (n % 2 == 0) {
        long long i = n / 2;
        return i * dim_b - coker_last + tau;
      }
      long long i = (n + 1) / 2;
      return (1 - i) * dim_b + coker_last - tau;
    }
    case Formula::Curve: {
      // independent route: dim O/((X)+(f)) by standard basis, not by rank
      std::vector<Polynomial> gens = nonzero(job.X);
      for (const auto& p : f) gens.push_back(p);
      long long dim_bf = static_cast<long long>(local_dimension(gens, job.options.max_degree));
      return dim_bf - tau;
    }
    case Formula::Surface:
      return dim_b - coker_last + tau;
  }
  throw_internal("unreachable");
}

void dump_matrices(const std::string& dir, const SmallGobelinComplex& complex) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (std::size_t i = 0; i < complex.differentials.size(); ++i) {
    std::ofstream out(fs::path(dir) / ("gamma_" + std::to_string(i) + ".txt"));
    out << format_bmatrix(complex.differentials[i],
                          "gamma_" + std::to_string(i) + " : term_" + std::to_string(i + 1) +
                              " -> term_" + std::to_string(i));
  }
}

IndexReport compute_with_formula(const Job& job, Formula formula) {
  IndexReport r;
  r.N = job.N();
  r.k = job.k();
  r.n = job.n();
  r.field_name = job.field.name();
  r.formula_used = formula_name(formula);
  if (!job.field.is_rational()) r.warnings.push_back(kBadPrimeCaveat);

  ResolvedCofactor cof = resolve_cofactor(job);
  if (cof.computed && !cof.exact)
    r.warnings.push_back(
        "no exact polynomial cofactor exists; using a representative of c modulo (X), which "
        "is the only part the index computation consumes");

  QuotientAlgebra B = build_b(job);
  r.dim_b = static_cast<long long>(B.dimension());
  r.tau = static_cast<long long>(tau_prime(job.f, job.options.max_degree));

  SmallGobelinComplex complex = build_by_formula(formula, job, job.f, cof.c, B);
  ScalarComplex sc = scalarize_complex(complex, B);  // validates gamma.gamma = 0
  ComplexAnalysis an = analyze_complex(sc);

  const std::size_t n = job.n();
  const std::size_t built = sc.dims.size() - 1;  // differentials available: gamma_0..gamma_{built-1}
  if (built < n) throw_internal("complex too short for the homology range");
  for (std::size_t i = 0; i < n; ++i) {
    // h_i of the truncated complex equals dims[i] - rank(in) - rank(out);
    // for i < n the analysis value is already exactly that
    r.h.push_back(static_cast<long long>(an.h[i]));
  }
  r.h.push_back(r.tau);  // h_n := tau', never a degree-n homology of the weave
  r.coker_last =
      static_cast<long long>(sc.dims[n - 1]) - static_cast<long long>(an.ranks[n - 1]);

  long long idx = 0;
  for (std::size_t i = 0; i <= n; ++i) idx += (i % 2 == 0) ? r.h[i] : -r.h[i];
  r.index_hom = idx;
  r.index_closed =
      closed_form_index(formula, job, B, job.f, cof.c, r.dim_b, r.tau, r.coker_last);
  if (r.index_hom != r.index_closed)
    throw_internal("index routes disagree: alternating sum " + std::to_string(r.index_hom) +
                   " vs closed form " + std::to_string(r.index_closed) +
                   " (sign-convention tripwire)");
  r.index_gsv = r.index_hom;  // the two indices coincide for an ICIS

  if (!job.options.dump_dir.empty()) dump_matrices(job.options.dump_dir, complex);
  return r;
}

}  // namespace

IndexReport compute_index(const Job& job) { return compute_with_formula(job, job.options.formula); }

CrossCheck cross_check(const Job& job, const IndexReport& general) {
  std::vector<Formula> applicable;
  if (job.k() == 1) applicable.push_back(Formula::Codim1);
  if (job.k() == 2) applicable.push_back(Formula::Codim2);
  if (job.n() == 1) applicable.push_back(Formula::Curve);
  if (job.n() == 2) applicable.push_back(Formula::Surface);
  if (applicable.empty())
    throw_input("UnsupportedSpecialization",
                "no printed specialization applies: need k <= 2 or n <= 2 (job has k = " +
                    std::to_string(job.k()) + ", n = " + std::to_string(job.n()) + ")");

  CrossCheck cc;
  for (Formula f : applicable) {
    Job j = job;
    j.options.formula = f;
    j.options.cross_check = false;
    j.options.dump_dir.clear();
    IndexReport r = compute_with_formula(j, f);
    std::ostringstream line;
    bool ok = r.index_hom == general.index_hom && r.dim_b == general.dim_b &&
              r.tau == general.tau && r.h == general.h;
    line << formula_name(f) << ": index " << r.index_hom << (ok ? " == " : " != ")
         << general.index_hom << ", dim B " << r.dim_b << "/" << general.dim_b << ", tau' "
         << r.tau << "/" << general.tau << ", h";
    for (auto v : r.h) line << ' ' << v;
    line << (ok ? " -- ok" : " -- MISMATCH");
    cc.lines.push_back({line.str(), ok});
    cc.all_ok = cc.all_ok && ok;
  }
  return cc;
}

std::string emit_report(const IndexReport& r, const std::string& format, const CrossCheck* cc) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["dimB"] = r.dim_b;
    j["tauPrime"] = r.tau;
    j["h"] = r.h;
    j["indexHom"] = r.index_hom;
    j["indexGSV"] = r.index_gsv;
    j["formulaUsed"] = r.formula_used;
    j["field"] = r.field_name;
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
  }
  if (format != "text") throw_input("BadFormat", "format must be text or json");

  std::ostringstream os;
  os << "homological index report\n";
  os << "  field    : " << r.field_name << "\n";
  os << "  N = " << r.N << "  k = " << r.k << "  n = " << r.n << "\n";
  os << "  dim B    : " << r.dim_b << "\n";
  os << "  tau'     : " << r.tau << "\n";
  os << "  h        :";
  for (auto v : r.h) os << ' ' << v;
  os << "\n";
  os << "  index    : ";
  for (std::size_t i = 0; i < r.h.size(); ++i) {
    if (i) os << (i % 2 == 1 ? " - " : " + ");
    os << r.h[i];
  }
  os << " = " << r.index_hom << "\n";
  os << "  indexHom : " << r.index_hom << "\n";
  os << "  indexGSV : " << r.index_gsv << " (equal to the homological index on an ICIS)\n";
  os << "  formula  : " << r.formula_used << "\n";
  if (r.warnings.empty()) {
    os << "  warnings : (none)\n";
  } else {
    os << "  warnings :\n";
    for (const auto& w : r.warnings) os << "    - " << w << "\n";
  }
  if (cc) {
    os << "cross-check\n";
    for (const auto& line : cc->lines) os << "  " << line.text << "\n";
  }
  return os.str();
}

long long dim_b_of(const Job& job) { return static_cast<long long>(build_b(job).dimension()); }

long long tau_of(const Job& job) {
  return static_cast<long long>(tau_prime(job.f, job.options.max_degree));
}

TangencyReport tangency_report(const Job& job) {
  TangencyReport r;
  r.c_given = job.c.has_value();
  if (job.c) {
    if (!verify_tangency(job.f, job.X, *job.c))
      throw_hypothesis("NotTangent", "the given c does not satisfy phi*X = c*f exactly");
    r.ok = true;
    r.exact = true;
    r.c = *job.c;
    r.notes.push_back("given c verified: phi*X = c*f holds exactly");
    return r;
  }
  CofactorResult cof = compute_cofactor(job.f, job.X, job.options.max_degree);
  r.ok = true;
  r.exact = cof.exact;
  r.c = std::move(cof.c);
  r.notes.push_back(cof.exact ? "computed c satisfies phi*X = c*f exactly"
                              : "computed c is a representative modulo (X); no exact "
                                "polynomial cofactor exists");
  return r;
}

std::string emit_tangency(const TangencyReport& r, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["tangent"] = r.ok;
    j["cGiven"] = r.c_given;
    j["exact"] = r.exact;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t a = 0; a < r.c.rows(); ++a) {
      std::vector<std::string> row;
      for (std::size_t b = 0; b < r.c.cols(); ++b) row.push_back(r.c.at(a, b).str());
      rows.push_back(std::move(row));
    }
    j["c"] = rows;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
  }
  if (format != "text") throw_input("BadFormat", "format must be text or json");
  std::ostringstream os;
  os << "tangency: ok\n";
  for (const auto& n : r.notes) os << "  " << n << "\n";
  os << "  c =\n";
  for (std::size_t a = 0; a < r.c.rows(); ++a) {
    os << "    [ ";
    for (std::size_t b = 0; b < r.c.cols(); ++b) {
      if (b) os << " , ";
      os << r.c.at(a, b).str();
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace gobelin
