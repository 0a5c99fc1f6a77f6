#include "poly_matrix.hpp"

namespace gobelin {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Context& ctx, const FieldSpec& f)
    : rows_(rows), cols_(cols), ctx_(ctx), field_(f) {
  if (rows == 0 || cols == 0) throw_input("BadShape", "matrix dimensions must be positive");
  a_.assign(rows * cols, Polynomial(ctx, f));
}

PolyMatrix PolyMatrix::identity(std::size_t n, const Context& ctx, const FieldSpec& f) {
  PolyMatrix m(n, n, ctx, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ctx, 1, f);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw_input("BadShape", "matrix product shape mismatch");
  PolyMatrix r(rows_, o.cols_, ctx_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& p = at(i, k);
      if (p.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += p * o.at(k, j);
    }
  return r;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_)
    throw_input("BadShape", "matrix-vector shape mismatch: " + std::to_string(cols_) +
                                " columns vs " + std::to_string(v.size()) + " entries");
  std::vector<Polynomial> r(rows_, Polynomial(ctx_, field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

PolyMatrix jacobian(const std::vector<Polynomial>& f) {
  if (f.empty()) throw_input("BadShape", "jacobian of an empty tuple");
  const Context& ctx = f[0].context();
  const FieldSpec& field = f[0].field();
  PolyMatrix m(f.size(), ctx.size(), ctx, field);
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a].context() != ctx) throw_input("BadShape", "jacobian entries over distinct contexts");
    for (std::size_t b = 0; b < ctx.size(); ++b) m.at(a, b) = f[a].derivative(b);
  }
  return m;
}

namespace {

Polynomial det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  Polynomial d(m.context(), m.field());
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    const Polynomial& pivot = m.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Polynomial cof = pivot * det(m, sub_rows, sub_cols);
    if (j % 2 == 0)
      d += cof;
    else
      d -= cof;
  }
  return d;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Polynomial> k_minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > m.rows() || k > m.cols())
    throw_input("BadShape", "minor size exceeds a matrix dimension");
  std::vector<Polynomial> out;
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      out.push_back(det(m, rows, cols));
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return out;
}

}  // namespace gobelin
