#pragma once

#include "polynomial.hpp"

namespace gobelin {

// Dense matrix of polynomials over one shared context/field.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, const Context& ctx, const FieldSpec& f);

  static PolyMatrix identity(std::size_t n, const Context& ctx, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Context& context() const { return ctx_; }
  const FieldSpec& field() const { return field_; }

  Polynomial& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  Context ctx_;
  FieldSpec field_;
  std::vector<Polynomial> a_;
};

// k x N Jacobian of a nonempty tuple of polynomials over one context.
PolyMatrix jacobian(const std::vector<Polynomial>& f);

// All k x k minors, outer loop over row index sets and inner loop over column
// index sets, each in lexicographic order; cofactor expansion along the first
// row.
std::vector<Polynomial> k_minors(const PolyMatrix& m, std::size_t k);

}  // namespace gobelin
