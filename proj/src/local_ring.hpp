#pragma once

#include <mutex>
#include <optional>

#include "homology.hpp"
#include "polynomial.hpp"

namespace gobelin {

inline constexpr unsigned kDefaultDegreeCap = 64;

// Division record for g against the list G: unit * g = sum(quotients_i * G_i)
// + remainder, with unit a local unit (constant term 1 after normalization).
// For a global ordering the unit is identically 1.
struct DivisionResult {
  Polynomial remainder;
  Polynomial unit;
  std::vector<Polynomial> quotients;
};

// Mora's tangent-cone division with ecart selection (plain division when the
// ordering is global). With tail_reduce the remainder carries no monomial
// divisible by a leading monomial of G; without it only the lead is reduced,
// which is what completion loops want. Throws a resource error when an
// intermediate exceeds the degree cap.
DivisionResult divide(const Polynomial& g, const std::vector<Polynomial>& G,
                      const MonomialOrder& ord, unsigned degree_cap = kDefaultDegreeCap,
                      bool tail_reduce = true);

Polynomial weak_normal_form(const Polynomial& g, const std::vector<Polynomial>& G,
                            const MonomialOrder& ord, unsigned degree_cap = kDefaultDegreeCap);

class StandardBasis {
public:
  StandardBasis(std::vector<Polynomial> gens, MonomialOrder ord);

  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_monomials() const { return lead_; }
  const MonomialOrder& ordering() const { return ord_; }
  const Context& context() const { return gens_[0].context(); }
  const FieldSpec& field() const { return gens_[0].field(); }

  bool leading_ideal_contains(const Monomial& m) const;

private:
  std::vector<Polynomial> gens_;
  std::vector<Monomial> lead_;
  MonomialOrder ord_;
};

// Buchberger completion with Mora normal forms; generators must be nonzero.
// The result is minimal: no leading monomial divides another.
StandardBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                             unsigned degree_cap = kDefaultDegreeCap);

// True iff every variable has a pure power among the leading monomials, i.e.
// the staircase complement is finite.
bool is_zero_dimensional(const StandardBasis& sb);

// Monomials outside the leading ideal, sorted descending by the ordering so
// the unit monomial comes first. Throws NotZeroDimensional otherwise.
std::vector<Monomial> staircase(const StandardBasis& sb);

// dim_K of the local quotient by (gens); throws NotZeroDimensional when
// infinite.
std::size_t local_dimension(const std::vector<Polynomial>& gens,
                            unsigned degree_cap = kDefaultDegreeCap);

// The finite-dimensional local algebra O_0/(gens) with its staircase basis, a
// canonical K-linear reducer onto the basis span, and cached multiplication
// matrices.
//
// The reducer is not the raw Mora normal form: Mora remainders differ from
// the residue class by a local unit, which would break linearity of
// coordinates. Instead we row-reduce the truncated multiples of the standard
// basis over the monomials of degree <= s_max (the top staircase degree);
// every monomial of higher degree is zero in the quotient, so truncation is
// exact and the resulting map is the canonical projection.
class QuotientAlgebra {
public:
  explicit QuotientAlgebra(StandardBasis sb);

  const StandardBasis& reducer() const { return sb_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const Context& context() const { return sb_.context(); }
  const FieldSpec& field() const { return sb_.field(); }

  // Coefficient vector of the residue class of p in the staircase basis;
  // K-linear in p.
  std::vector<Scalar> coordinates(const Polynomial& p) const;
  // Canonical polynomial representative (support inside the staircase).
  Polynomial reduce(const Polynomial& p) const;
  bool is_zero_in_quotient(const Polynomial& p) const;

  // Matrix of multiplication by p on the quotient, columns indexed by the
  // staircase basis. Cached per reduced representative.
  ScalarMatrix multiplication_matrix(const Polynomial& p) const;

  // Inverse of the class of p, when p is a unit in the quotient.
  Polynomial invert(const Polynomial& p) const;

private:
  StandardBasis sb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, MonomialLexLess> basis_index_;
  std::uint32_t s_max_ = 0;
  // pivot monomial -> coordinates of its class in the staircase basis
  std::map<Monomial, std::vector<Scalar>, MonomialLexLess> pivot_tails_;

  mutable std::mutex cache_mu_;
  mutable std::map<Polynomial, ScalarMatrix, PolynomialLess> mult_cache_;
};

inline QuotientAlgebra quotient_algebra(StandardBasis sb) {
  return QuotientAlgebra(std::move(sb));
}

// Division with recorded quotients: on success u * g = sum(q_i * G_i) exactly
// with u a local unit normalized to constant term 1 (u == 1 under a global
// ordering). nullopt when g is not in the ideal generated by G in the local
// ring.
struct Lift {
  std::vector<Polynomial> quotients;
  Polynomial unit;
};
std::optional<Lift> lift_membership(const Polynomial& g, const std::vector<Polynomial>& G,
                                    const MonomialOrder& ord,
                                    unsigned degree_cap = kDefaultDegreeCap);

// Same, but completes the basis of (G) once for several dividends.
std::vector<std::optional<Lift>> lift_membership_many(const std::vector<Polynomial>& gs,
                                                      const std::vector<Polynomial>& G,
                                                      const MonomialOrder& ord,
                                                      unsigned degree_cap = kDefaultDegreeCap);

// Exact polynomial-ring lift: quotients with g = sum(q_i * G_i) as
// polynomials (no unit), via a global Groebner basis with cofactor tracking.
// nullopt when g is not in the polynomial ideal.
std::optional<std::vector<Polynomial>> global_lift(const Polynomial& g,
                                                   const std::vector<Polynomial>& G,
                                                   unsigned degree_cap = kDefaultDegreeCap);

}  // namespace gobelin
