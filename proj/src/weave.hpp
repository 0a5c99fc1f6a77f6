#pragma once

#include "local_ring.hpp"
#include "poly_matrix.hpp"

namespace gobelin {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

// Basis element of the degree-i term of the total small Gobelin complex:
// alpha is a divided-power multi-exponent in k slots, beta a strictly
// increasing subset of {0,..,k-1} (the wedge factor). Total degree is
// 2|alpha| + |beta|.
struct WeaveBasisElement {
  Monomial alpha;             // k slots
  std::vector<int> beta;      // sorted ascending

  int degree() const { return 2 * static_cast<int>(alpha.degree()) + static_cast<int>(beta.size()); }

  // mu: (alpha, beta) -> monomial with exponent 2*alpha + indicator(beta).
  Monomial mu() const;
  // mu^{-1}: split a monomial by exponent parity.
  static WeaveBasisElement mu_inverse(const Monomial& m);

  bool operator==(const WeaveBasisElement& o) const { return alpha == o.alpha && beta == o.beta; }
};

struct WeaveTerm {
  int degree = 0;
  std::vector<WeaveBasisElement> elements;  // ordered by graded-lex descending mu-images

  std::size_t rank() const { return elements.size(); }
};

// C(k+i-1, i): the rank of the degree-i term over B.
std::uint64_t term_rank(int k, int i);
WeaveTerm term_basis(int k, int i);

// Matrix over B: entries are canonical (staircase-supported) polynomial
// representatives.
struct BMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Polynomial> entries;

  BMatrix() = default;
  BMatrix(std::size_t r, std::size_t c, const Context& ctx, const FieldSpec& f)
      : rows(r), cols(c), entries(r * c, Polynomial(ctx, f)) {}
  Polynomial& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// The differential gamma_{i-1}: term(i) -> term(i-1). On a basis element
// (alpha, beta) it is contraction of the wedge factor with f plus the
// divided-power derivative against the rows of c:
//   d(alpha, beta) = sum_t (-1)^t f_{beta_t} (alpha, beta - beta_t)
//                  + sum_{a,b} (+-) c_{a,b} (alpha - e_a, beta + b)
// with the usual wedge-insertion sign. d*d = 0 over B because c*f = phi*X = 0
// there.
BMatrix weave_differential(int k, int i, const std::vector<Polynomial>& f, const PolyMatrix& c,
                           const QuotientAlgebra& B);

struct SmallGobelinComplex {
  int k = 0;
  int top = 0;                            // highest term degree built
  std::vector<WeaveTerm> terms;           // 0..top (only for weave-built complexes)
  std::vector<std::size_t> term_ranks;    // rank over B of each term
  std::vector<BMatrix> differentials;     // differentials[i] = gamma_i: term(i+1) -> term(i)
};

// Terms 0..n and maps gamma_0..gamma_{n-1}; d*d = 0 is re-checked after
// scalarization.
SmallGobelinComplex build_complex(int k, int n, const std::vector<Polynomial>& f,
                                  const PolyMatrix& c, const QuotientAlgebra& B);

// The classical low-codimension shapes, built verbatim:
//   Codim1   k = 1, any n: alternating multiplication by f and by c.
//   Codim2   k = 2, any n: the banded phi_i / psi_i block family.
//   Curve    n = 1, any k: the single row (f_1 ... f_k).
//   Surface  n = 2, any k: that row plus the pair/column block matrix.
enum class SpecialKind { Codim1, Codim2, Curve, Surface };

SmallGobelinComplex specialized_complex(SpecialKind kind, int n, const std::vector<Polynomial>& f,
                                        const PolyMatrix& c, const QuotientAlgebra& B);

// Block matrix of multiplication operators: block (a,b) is the dim(B) square
// matrix of multiplication by entry (a,b).
ScalarMatrix scalarize(const BMatrix& m, const QuotientAlgebra& B);

// Scalarizes every differential and validates the chain property exactly.
ScalarComplex scalarize_complex(const SmallGobelinComplex& c, const QuotientAlgebra& B);

// Whether P * A * Q = B for signed permutation matrices P, Q.
bool signed_permutation_equivalent(const BMatrix& a, const BMatrix& b);

// Plain-text dump, one matrix per block, entries as polynomial strings.
std::string format_bmatrix(const BMatrix& m, const std::string& name);

}  // namespace gobelin
