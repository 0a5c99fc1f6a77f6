#include "homology.hpp"

namespace gobelin {

ScalarMatrix ScalarMatrix::identity(std::size_t n, const FieldSpec& f) {
  ScalarMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw_internal("scalar matrix product shape mismatch");
  ScalarMatrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& w = o.at(k, j);
        if (!w.is_zero()) r.at(i, j) += v * w;
      }
    }
  return r;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

// Bareiss rank on an integer matrix; division by the previous pivot is exact
// (checked, since a silent rounding would corrupt the rank).
std::size_t bareiss_rank(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  std::size_t r = 0;
  mpz_class prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = at(i, j) * at(r, c) - at(i, c) * at(r, j);
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw_internal("fraction-free elimination: inexact division");
        at(i, j) = q;
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_rational(const ScalarMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    // clear denominators row by row; rank is invariant under row scaling
    mpz_class l(1);
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rat();
      mpz_class d = q.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rat();
      a[i * cols + j] = q.get_num() * (l / q.get_den());
    }
  }
  return bareiss_rank(a, rows, cols);
}

std::size_t rank_prime(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      Scalar v = a.at(i, c);
      if (v.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= v * a.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t exact_rank(const ScalarMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.field().is_rational() ? rank_rational(m) : rank_prime(m);
}

std::size_t cokernel_dimension(const ScalarMatrix& m) { return m.rows() - exact_rank(m); }

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  // Gauss-Jordan over the field; fine at these sizes.
  ScalarMatrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar v = a.at(i, c);
      if (v.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= v * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(f));
    v[c] = Scalar::one(f);
    for (std::size_t t = 0; t < pivot_col.size(); ++t) v[pivot_col[t]] = -a.at(t, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

void ScalarComplex::validate() const {
  if (dims.size() != maps.size() + 1) throw_internal("complex: wrong number of maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].rows() != dims[i] || maps[i].cols() != dims[i + 1])
      throw_internal("complex: map " + std::to_string(i) + " has inconsistent shape");
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!(maps[i] * maps[i + 1]).is_zero())
      throw_internal("complex: consecutive maps " + std::to_string(i) + "," +
                     std::to_string(i + 1) + " do not compose to zero");
  }
}

ComplexAnalysis analyze_complex(const ScalarComplex& c) {
  c.validate();
  ComplexAnalysis out;
  out.ranks.reserve(c.maps.size());
  for (const auto& m : c.maps) out.ranks.push_back(exact_rank(m));
  out.h.resize(c.dims.size());
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    std::size_t in = i < out.ranks.size() ? out.ranks[i] : 0;   // maps[i]: term i+1 -> term i
    std::size_t out_rank = i > 0 ? out.ranks[i - 1] : 0;        // maps[i-1]: term i -> term i-1
    out.h[i] = c.dims[i] - in - out_rank;
  }
  return out;
}

std::vector<std::size_t> homology_dimensions(const ScalarComplex& c) {
  return analyze_complex(c).h;
}

long long euler_characteristic(const std::vector<std::size_t>& h) {
  long long x = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    x += (i % 2 == 0) ? static_cast<long long>(h[i]) : -static_cast<long long>(h[i]);
  return x;
}

}  // namespace gobelin
