#pragma once

#include <fstream>
#include <random>
#include <sstream>

#include "pipeline.hpp"

namespace gobelin::test {

inline Context ctx2() { return Context::make({"x", "y"}); }
inline Context ctx3() { return Context::make({"x", "y", "z"}); }
inline Context ctx4() { return Context::make({"x", "y", "z", "w"}); }

inline FieldSpec QQ() { return FieldSpec::rationals(); }

inline Polynomial P(const std::string& s, const Context& c,
                    const FieldSpec& f = FieldSpec::rationals()) {
  return parse_polynomial(s, c, f);
}

// Deterministic random polynomial: up to max_terms terms of degree <= max_deg
// with small integer coefficients in [-coeff, coeff] \ {0}.
inline Polynomial random_poly(std::mt19937_64& rng, const Context& ctx, const FieldSpec& f,
                              int max_deg, int max_terms, int coeff = 5,
                              bool no_constant = false) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> dd(no_constant ? 1 : 0, max_deg);
  std::uniform_int_distribution<int> cc(-coeff, coeff);
  Polynomial p(ctx, f);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    int d = dd(rng);
    Monomial m(ctx.size());
    for (int j = 0; j < d; ++j) {
      std::uniform_int_distribution<std::size_t> vv(0, ctx.size() - 1);
      m.exp(vv(rng)) += 1;
    }
    int c = cc(rng);
    if (c == 0) c = 1;
    p.add_term(m, Scalar::of_int(c, f));
  }
  return p;
}

// A random zero-dimensional local quotient of dimension <= dim_cap: pure
// powers of every variable plus a few random members, retried until the
// staircase is small enough.
inline QuotientAlgebra random_quotient(std::mt19937_64& rng, const Context& ctx,
                                       const FieldSpec& f, int dim_cap) {
  std::uniform_int_distribution<int> ee(2, 3);
  for (;;) {
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < ctx.size(); ++v) {
      Monomial m(ctx.size());
      m.exp(v) = static_cast<std::uint32_t>(ee(rng));
      Polynomial g = Polynomial::term(ctx, m, Scalar::one(f));
      // perturb by a random higher-order-ish tail without a constant term
      g += random_poly(rng, ctx, f, 3, 2, 3, /*no_constant=*/true);
      if (!g.is_zero()) gens.push_back(g);
    }
    try {
      QuotientAlgebra B = quotient_algebra(standard_basis(gens, MonomialOrder::local()));
      if (B.dimension() >= 1 && B.dimension() <= static_cast<std::size_t>(dim_cap)) return B;
    } catch (const Error&) {
      // not zero-dimensional or capped; retry
    }
  }
}

// Random (f, c) with c*f = 0 exactly: each row of c is a random combination
// of the Koszul syzygies f_q e_p - f_p e_q.
inline PolyMatrix random_syzygy_cofactor(std::mt19937_64& rng, const std::vector<Polynomial>& f) {
  const Context& ctx = f[0].context();
  const FieldSpec& fd = f[0].field();
  const std::size_t k = f.size();
  PolyMatrix c(k, k, ctx, fd);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) {
        Polynomial g = random_poly(rng, ctx, fd, 1, 1, 2);
        c.at(a, p) += g * f[q];
        c.at(a, q) -= g * f[p];
      }
  return c;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace gobelin::test
