#pragma once

#include "local_ring.hpp"
#include "poly_matrix.hpp"

namespace gobelin {

// Data of the tangency identity phi * X = c * f, with phi the k x N Jacobian
// of f and c a k x k cofactor matrix.
struct TangencyData {
  std::vector<Polynomial> f;
  std::vector<Polynomial> X;
  std::optional<PolyMatrix> c;
  PolyMatrix phi;
  std::size_t N = 0, k = 0, n = 0;
};

TangencyData make_tangency_data(std::vector<Polynomial> f, std::vector<Polynomial> X,
                                std::optional<PolyMatrix> c);

// Exact polynomial identity phi*X == c*f.
bool verify_tangency(const std::vector<Polynomial>& f, const std::vector<Polynomial>& X,
                     const PolyMatrix& c);

struct CofactorResult {
  PolyMatrix c;
  // true when phi*X == c*f holds as polynomials; false when c is only a
  // representative of a power-series cofactor modulo (X) (which is all the
  // index computation consumes).
  bool exact = true;
};

// Recovers a cofactor matrix by lifting each entry of phi*X through the local
// ideal (f). Throws NotTangent when some entry is not in the local ideal.
// Lifting is tiered: Mora lift (exact when the division unit is trivial),
// then an exact global polynomial lift, then the quotient-corrected
// representative q * u^{-1} mod (X).
CofactorResult compute_cofactor(const std::vector<Polynomial>& f,
                                const std::vector<Polynomial>& X,
                                unsigned degree_cap = kDefaultDegreeCap,
                                const QuotientAlgebra* b_hint = nullptr);

// Greuel's tau': dim O_0/((f) + I_k(jacobian f)). Finiteness certifies that
// the complete intersection has an isolated singularity; throws
// NotIsolatedSingularity otherwise.
std::size_t tau_prime(const std::vector<Polynomial>& f, unsigned degree_cap = kDefaultDegreeCap);

}  // namespace gobelin
