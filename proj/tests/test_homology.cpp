#include <doctest.h>

#include "test_util.hpp"

using namespace gobelin;
using namespace gobelin::test;

namespace {

ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                           const FieldSpec& f, int bound = 6) {
  std::uniform_int_distribution<int> cc(-bound, bound);
  ScalarMatrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of_int(cc(rng), f);
  return m;
}

// plain rational Gaussian elimination, the independent rank oracle
std::size_t gauss_rank(ScalarMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      Scalar v = a.at(i, c) * inv;
      if (v.is_zero()) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= v * a.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("exact rank on pinned cases") {
  FieldSpec q = QQ();
  CHECK(exact_rank(ScalarMatrix::identity(3, q)) == 3);
  ScalarMatrix m(2, 2, q);
  m.at(0, 0) = Scalar::of_int(2, q);
  m.at(0, 1) = Scalar::of_int(4, q);
  m.at(1, 0) = Scalar::of_int(1, q);
  m.at(1, 1) = Scalar::of_int(2, q);
  CHECK(exact_rank(m) == 1);
  CHECK(cokernel_dimension(m) == 1);
  ScalarMatrix z(3, 5, q);
  CHECK(exact_rank(z) == 0);
  CHECK(cokernel_dimension(z) == 3);
}

TEST_CASE("Bareiss rank equals plain Gaussian rank, including deficient ones") {
  std::mt19937_64 rng(43);
  FieldSpec q = QQ();
  for (int it = 0; it < 60; ++it) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    std::size_t rows = dim(rng), cols = dim(rng), inner = dim(rng);
    // products are usually rank deficient
    ScalarMatrix m = it % 2 == 0 ? random_matrix(rng, rows, cols, q)
                                 : random_matrix(rng, rows, inner, q) *
                                       random_matrix(rng, inner, cols, q);
    CHECK(exact_rank(m) == gauss_rank(m));
  }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(47);
  FieldSpec q = QQ();
  for (int it = 0; it < 30; ++it) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    ScalarMatrix m = random_matrix(rng, dim(rng), dim(rng), q);
    CHECK(exact_rank(m) + kernel_basis(m).size() == m.cols());
    // kernel vectors are genuine
    for (const auto& v : kernel_basis(m)) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar acc = Scalar::zero(q);
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("prime-field ranks match rational ranks on integer matrices") {
  std::mt19937_64 rng(53);
  FieldSpec q = QQ(), fp = FieldSpec::prime_field(32003);
  for (int it = 0; it < 30; ++it) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t rows = dim(rng), cols = dim(rng);
    ScalarMatrix a(rows, cols, q), b(rows, cols, fp);
    std::uniform_int_distribution<int> cc(-5, 5);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        int v = cc(rng);
        a.at(i, j) = Scalar::of_int(v, q);
        b.at(i, j) = Scalar::of_int(v, fp);
      }
    CHECK(exact_rank(a) == exact_rank(b));  // 32003 is large next to these entries
  }
}

TEST_CASE("homology dimensions: all-zero maps give the term dimensions") {
  FieldSpec q = QQ();
  ScalarComplex c;
  c.dims = {3, 5, 2};
  c.maps = {ScalarMatrix(3, 5, q), ScalarMatrix(5, 2, q)};
  auto h = homology_dimensions(c);
  CHECK(h == std::vector<std::size_t>{3, 5, 2});
}

TEST_CASE("complex validation rejects non-complexes") {
  FieldSpec q = QQ();
  ScalarComplex c;
  c.dims = {1, 1, 1};
  ScalarMatrix one(1, 1, q);
  one.at(0, 0) = Scalar::one(q);
  c.maps = {one, one};
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("Euler characteristic two ways on random complexes") {
  std::mt19937_64 rng(59);
  FieldSpec q = QQ();
  for (int it = 0; it < 20; ++it) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t d0 = dim(rng), d1 = dim(rng), d2 = dim(rng);
    ScalarMatrix m1 = random_matrix(rng, d0, d1, q);
    // build m2 into the kernel of m1 so products vanish
    auto kernel = kernel_basis(m1);
    ScalarMatrix m2(d1, d2, q);
    std::uniform_int_distribution<int> cc(-3, 3);
    for (std::size_t j = 0; j < d2; ++j)
      for (const auto& v : kernel) {
        int s = cc(rng);
        if (s == 0) continue;
        for (std::size_t i = 0; i < d1; ++i)
          m2.at(i, j) += v[i] * Scalar::of_int(s, q);
      }
    ScalarComplex c;
    c.dims = {d0, d1, d2};
    c.maps = {m1, m2};
    auto h = homology_dimensions(c);
    long long lhs = euler_characteristic(h);
    long long rhs = static_cast<long long>(d0) - static_cast<long long>(d1) +
                    static_cast<long long>(d2);
    CHECK(lhs == rhs);
  }
}
