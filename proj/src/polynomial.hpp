#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace gobelin {

// Ordered list of variable names shared by all polynomials of one computation.
class Context {
public:
  Context() : names_(std::make_shared<const std::vector<std::string>>()) {}
  static Context make(std::vector<std::string> names) {
    Context c;
    c.names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    return c;
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index(const std::string& v) const;

  bool operator==(const Context& o) const {
    return names_ == o.names_ || *names_ == *o.names_;
  }
  bool operator!=(const Context& o) const { return !(*this == o); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Sparse exact-coefficient multivariate polynomial in canonical form: a term
// map that never stores zero coefficients. Immutable in spirit; arithmetic
// returns new values.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Scalar, MonomialLexLess>;

  Polynomial() = default;  // zero over the empty context
  Polynomial(Context ctx, FieldSpec field) : ctx_(std::move(ctx)), field_(field) {}

  static Polynomial constant(const Context& ctx, const Scalar& c);
  static Polynomial constant(const Context& ctx, long long v, const FieldSpec& f);
  static Polynomial variable(const Context& ctx, std::size_t i, const FieldSpec& f);
  static Polynomial term(const Context& ctx, const Monomial& m, const Scalar& c);

  const Context& context() const { return ctx_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;

  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Scalar& c) const;
  // this * (c * m), the workhorse of division loops.
  Polynomial times_term(const Monomial& m, const Scalar& c) const;

  Polynomial derivative(std::size_t var) const;

  struct LeadTerm {
    Monomial m;
    Scalar c;
  };
  // Largest term under the given order; polynomial must be nonzero.
  LeadTerm lead(const MonomialOrder& ord) const;
  // degree(p) - degree(lead monomial); >= 0 for local orders.
  int ecart(const MonomialOrder& ord) const;

  // Over Q: the scalar multiple with coprime integer coefficients (sign kept
  // on each term, overall sign chosen so the given lead is positive).
  // Over F_p: the monic multiple. Zero stays zero.
  Polynomial content_normalized(const MonomialOrder& ord) const;

  // Canonical text form; parse_polynomial inverts it exactly.
  std::string str() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  // Total order for use as a cache key.
  int cmp(const Polynomial& o) const;

  void add_term(const Monomial& m, const Scalar& c);  // maintains canonical form

private:
  Context ctx_;
  FieldSpec field_;
  TermMap terms_;

  void check_compatible(const Polynomial& o) const;
};

struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return a.cmp(b) < 0; }
};

// Parses the expression grammar:
//   expression := sign? term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := coefficient | variable ('^' uint)?
//   coefficient:= int | int '/' uint
// Whitespace is ignored; implicit multiplication is a syntax error. Errors
// report the 1-based character position.
Polynomial parse_polynomial(const std::string& text, const Context& ctx, const FieldSpec& f);

}  // namespace gobelin
