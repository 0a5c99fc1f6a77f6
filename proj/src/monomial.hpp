#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace gobelin {

// Exponent vector over a fixed, ordered variable list. Monomials carry no
// variable names; the owning Polynomial's context supplies them.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars) { return Monomial(nvars); }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& exp(std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  bool is_unit() const { return degree() == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  // Plain lexicographic compare; the canonical order of term maps.
  int lex_cmp(const Monomial& o) const;

private:
  std::vector<std::uint32_t> e_;
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.lex_cmp(b) < 0; }
};

enum class OrderKind {
  NegDegRevLex,  // local: 1 is largest, lower degree compares larger
  DegRevLex,     // global: higher degree compares larger
};

// Total, multiplication-compatible monomial order. Revlex tie-break within a
// degree for both kinds.
class MonomialOrder {
public:
  static MonomialOrder local() { return MonomialOrder(OrderKind::NegDegRevLex); }
  static MonomialOrder global() { return MonomialOrder(OrderKind::DegRevLex); }

  OrderKind kind() const { return kind_; }
  bool is_global() const { return kind_ == OrderKind::DegRevLex; }

  // +1 if a is larger, -1 if smaller, 0 if equal.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

private:
  explicit MonomialOrder(OrderKind k) : kind_(k) {}
  OrderKind kind_;
};

// The spec's local ordering: negative-degree reverse lexicographic.
using LocalOrdering = MonomialOrder;

// All monomials in nvars variables of exact degree d, in lexicographically
// descending order of exponent vectors.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);
// All monomials of degree <= d, ascending by degree, lex descending within.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t d);

}  // namespace gobelin
