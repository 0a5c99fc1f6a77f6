#include "tangency.hpp"

namespace gobelin {

TangencyData make_tangency_data(std::vector<Polynomial> f, std::vector<Polynomial> X,
                                std::optional<PolyMatrix> c) {
  if (f.empty() || X.empty()) throw_input("BadShape", "f and X must be nonempty");
  TangencyData d;
  d.k = f.size();
  d.N = f[0].context().size();
  if (X.size() != d.N)
    throw_input("BadShape", "X must have one entry per variable: expected " +
                                std::to_string(d.N) + ", got " + std::to_string(X.size()));
  if (d.N <= d.k) throw_input("BadShape", "n = N - k must be positive");
  d.n = d.N - d.k;
  d.phi = jacobian(f);
  if (c) {
    if (c->rows() != d.k || c->cols() != d.k)
      throw_input("BadShape", "c must be a " + std::to_string(d.k) + " x " +
                                  std::to_string(d.k) + " matrix");
  }
  d.f = std::move(f);
  d.X = std::move(X);
  d.c = std::move(c);
  return d;
}

bool verify_tangency(const std::vector<Polynomial>& f, const std::vector<Polynomial>& X,
                     const PolyMatrix& c) {
  PolyMatrix phi = jacobian(f);
  if (c.rows() != f.size() || c.cols() != f.size())
    throw_input("BadShape", "cofactor matrix has the wrong shape");
  std::vector<Polynomial> lhs = phi.apply(X);
  std::vector<Polynomial> rhs = c.apply(f);
  for (std::size_t a = 0; a < lhs.size(); ++a)
    if (lhs[a] != rhs[a]) return false;
  return true;
}

CofactorResult compute_cofactor(const std::vector<Polynomial>& f,
                                const std::vector<Polynomial>& X, unsigned degree_cap,
                                const QuotientAlgebra* b_hint) {
  const Context& ctx = f.at(0).context();
  const FieldSpec& field = f[0].field();
  const std::size_t k = f.size();
  PolyMatrix phi = jacobian(f);
  std::vector<Polynomial> phiX = phi.apply(X);

  const MonomialOrder local = MonomialOrder::local();
  std::vector<Lift> lifts;
  lifts.reserve(k);
  auto maybe = lift_membership_many(phiX, f, local, degree_cap);
  for (std::size_t a = 0; a < k; ++a) {
    if (!maybe[a])
      throw_hypothesis("NotTangent", "entry " + std::to_string(a + 1) +
                                         " of phi*X is not in the local ideal (f): the "
                                         "field is not tangent to the germ");
    lifts.push_back(std::move(*maybe[a]));
  }

  CofactorResult out;
  out.c = PolyMatrix(k, k, ctx, field);
  const Polynomial one = Polynomial::constant(ctx, 1, field);

  for (std::size_t a = 0; a < k; ++a) {
    if (lifts[a].unit == one) {
      for (std::size_t b = 0; b < k; ++b) out.c.at(a, b) = lifts[a].quotients[b];
      continue;
    }
    // nontrivial local unit: try for an exact polynomial lift
    if (auto q = global_lift(phiX[a], f, degree_cap)) {
      for (std::size_t b = 0; b < k; ++b) out.c.at(a, b) = (*q)[b];
      continue;
    }
    // no polynomial cofactor exists; correct the representative modulo (X),
    // which is the only part the index computation reads
    out.exact = false;
    std::optional<QuotientAlgebra> own;
    const QuotientAlgebra* B = b_hint;
    if (!B) {
      own.emplace(standard_basis(X, local, degree_cap));
      B = &*own;
    }
    Polynomial inv_unit = B->invert(lifts[a].unit);
    for (std::size_t b = 0; b < k; ++b)
      out.c.at(a, b) = B->reduce(lifts[a].quotients[b] * inv_unit);
  }
  return out;
}

std::size_t tau_prime(const std::vector<Polynomial>& f, unsigned degree_cap) {
  if (f.empty()) throw_input("BadShape", "tau' of an empty tuple");
  const std::size_t k = f.size();
  if (k > f[0].context().size()) throw_input("BadShape", "more equations than variables");
  std::vector<Polynomial> gens = f;
  for (auto& m : k_minors(jacobian(f), k))
    if (!m.is_zero()) gens.push_back(std::move(m));
  try {
    return local_dimension(gens, degree_cap);
  } catch (const Error& e) {
    if (e.code() == "NotZeroDimensional")
      throw_hypothesis("NotIsolatedSingularity",
                       "tau' is infinite: V does not have an isolated singularity");
    throw;
  }
}

}  // namespace gobelin
