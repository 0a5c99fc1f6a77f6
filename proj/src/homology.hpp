#pragma once

#include <vector>

#include "scalar.hpp"

namespace gobelin {

// Dense matrix over the base field. Small by design: scalarized complexes at
// desk scale stay in the hundreds of rows.
class ScalarMatrix {
public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

  static ScalarMatrix identity(std::size_t n, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  bool is_zero() const;
  bool operator==(const ScalarMatrix& o) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

// Exact rank: fraction-free (Bareiss) elimination on denominator-cleared
// integer rows over Q, plain elimination over F_p.
std::size_t exact_rank(const ScalarMatrix& m);

// rows - rank: the dimension of the cokernel of the map the matrix presents.
std::size_t cokernel_dimension(const ScalarMatrix& m);

// Basis of the right null space, one vector (length cols) per kernel
// dimension.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);

// Chain complex of scalar matrices: maps[i] sends term i+1 into term i, so
// rows(maps[i]) = dims[i] and cols(maps[i]) = dims[i+1]. Consecutive maps
// compose to zero; validate() enforces both.
struct ScalarComplex {
  std::vector<std::size_t> dims;
  std::vector<ScalarMatrix> maps;

  void validate() const;
};

struct ComplexAnalysis {
  std::vector<std::size_t> h;      // h_i = dims[i] - rank(in) - rank(out)
  std::vector<std::size_t> ranks;  // ranks[i] = rank of maps[i]
};

ComplexAnalysis analyze_complex(const ScalarComplex& c);
std::vector<std::size_t> homology_dimensions(const ScalarComplex& c);
long long euler_characteristic(const std::vector<std::size_t>& h);

}  // namespace gobelin
