#include "weave.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gobelin {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;  // exact at every step
  }
  return acc;
}

Monomial WeaveBasisElement::mu() const {
  std::vector<std::uint32_t> e(alpha.exponents());
  for (auto& v : e) v *= 2;
  for (int b : beta) e[static_cast<std::size_t>(b)] += 1;
  return Monomial(std::move(e));
}

WeaveBasisElement WeaveBasisElement::mu_inverse(const Monomial& m) {
  WeaveBasisElement w;
  std::vector<std::uint32_t> a(m.nvars());
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    a[i] = m[i] / 2;
    if (m[i] % 2 == 1) w.beta.push_back(static_cast<int>(i));
  }
  w.alpha = Monomial(std::move(a));
  return w;
}

std::uint64_t term_rank(int k, int i) {
  if (k < 1 || i < 0) throw_input("BadShape", "term_rank needs k >= 1, i >= 0");
  return binomial(static_cast<std::uint64_t>(k + i - 1), static_cast<std::uint64_t>(i));
}

WeaveTerm term_basis(int k, int i) {
  if (k < 1 || i < 0) throw_input("BadShape", "term_basis needs k >= 1, i >= 0");
  WeaveTerm t;
  t.degree = i;
  // monomials_of_degree already enumerates lex-descending, which for a fixed
  // degree is the graded-lex order of the mu-images
  for (const auto& m : monomials_of_degree(static_cast<std::size_t>(k),
                                           static_cast<std::uint32_t>(i)))
    t.elements.push_back(WeaveBasisElement::mu_inverse(m));
  if (t.elements.size() != term_rank(k, i)) throw_internal("term basis count disagrees with rank");
  return t;
}

namespace {

int wedge_remove_sign(std::size_t pos) { return pos % 2 == 0 ? 1 : -1; }

// sign of e_b ^ e_beta when sorted into e_{beta + b}
int wedge_insert_sign(int b, const std::vector<int>& beta) {
  std::size_t before = 0;
  for (int x : beta) {
    if (x < b) ++before;
  }
  return before % 2 == 0 ? 1 : -1;
}

struct TermIndex {
  std::map<Monomial, std::size_t, MonomialLexLess> by_mu;
  const WeaveTerm* term;
  explicit TermIndex(const WeaveTerm& t) : term(&t) {
    for (std::size_t i = 0; i < t.elements.size(); ++i) by_mu.emplace(t.elements[i].mu(), i);
  }
  std::size_t at(const WeaveBasisElement& w) const { return by_mu.at(w.mu()); }
};

}  // namespace

BMatrix weave_differential(int k, int i, const std::vector<Polynomial>& f, const PolyMatrix& c,
                           const QuotientAlgebra& B) {
  if (i < 1) throw_input("BadShape", "weave_differential needs i >= 1");
  if (static_cast<int>(f.size()) != k) throw_input("BadShape", "f must have k entries");
  if (c.rows() != static_cast<std::size_t>(k) || c.cols() != static_cast<std::size_t>(k))
    throw_input("BadShape", "c must be k x k");

  const Context& ctx = B.context();
  const FieldSpec& field = B.field();
  WeaveTerm src = term_basis(k, i);
  WeaveTerm dst = term_basis(k, i - 1);
  TermIndex dst_index(dst);

  std::vector<Polynomial> f_red(f.size(), Polynomial(ctx, field));
  for (std::size_t a = 0; a < f.size(); ++a) f_red[a] = B.reduce(f[a]);
  std::vector<std::vector<Polynomial>> c_red(c.rows(),
                                             std::vector<Polynomial>(c.cols(), Polynomial(ctx, field)));
  for (std::size_t a = 0; a < c.rows(); ++a)
    for (std::size_t b = 0; b < c.cols(); ++b) c_red[a][b] = B.reduce(c.at(a, b));

  BMatrix m(dst.rank(), src.rank(), ctx, field);
  for (std::size_t j = 0; j < src.elements.size(); ++j) {
    const WeaveBasisElement& w = src.elements[j];
    // contraction of the wedge factor with f
    for (std::size_t t = 0; t < w.beta.size(); ++t) {
      WeaveBasisElement out = w;
      out.beta.erase(out.beta.begin() + static_cast<std::ptrdiff_t>(t));
      int sign = wedge_remove_sign(t);
      Polynomial& cell = m.at(dst_index.at(out), j);
      cell = sign > 0 ? cell + f_red[static_cast<std::size_t>(w.beta[t])]
                      : cell - f_red[static_cast<std::size_t>(w.beta[t])];
    }
    // divided-power derivative against the rows of c, wedging e_b in
    for (std::size_t a = 0; a < static_cast<std::size_t>(k); ++a) {
      if (w.alpha[a] == 0) continue;
      WeaveBasisElement base = w;
      base.alpha.exp(a) -= 1;
      for (int b = 0; b < k; ++b) {
        if (std::find(w.beta.begin(), w.beta.end(), b) != w.beta.end()) continue;
        WeaveBasisElement out = base;
        out.beta.insert(std::upper_bound(out.beta.begin(), out.beta.end(), b), b);
        int sign = wedge_insert_sign(b, base.beta);
        Polynomial& cell = m.at(dst_index.at(out), j);
        cell = sign > 0 ? cell + c_red[a][static_cast<std::size_t>(b)]
                        : cell - c_red[a][static_cast<std::size_t>(b)];
      }
    }
  }
  return m;
}

SmallGobelinComplex build_complex(int k, int n, const std::vector<Polynomial>& f,
                                  const PolyMatrix& c, const QuotientAlgebra& B) {
  if (n < 1) throw_input("BadShape", "build_complex needs n >= 1");
  SmallGobelinComplex out;
  out.k = k;
  out.top = n;
  for (int i = 0; i <= n; ++i) {
    out.terms.push_back(term_basis(k, i));
    out.term_ranks.push_back(out.terms.back().rank());
  }
  for (int i = 1; i <= n; ++i) out.differentials.push_back(weave_differential(k, i, f, c, B));
  return out;
}

namespace {

Polynomial red(const QuotientAlgebra& B, const Polynomial& p) { return B.reduce(p); }

SmallGobelinComplex codim1_complex(int n, const std::vector<Polynomial>& f, const PolyMatrix& c,
                                   const QuotientAlgebra& B) {
  const Context& ctx = B.context();
  const FieldSpec& field = B.field();
  Polynomial fr = red(B, f[0]);
  Polynomial cr = red(B, c.at(0, 0));
  SmallGobelinComplex out;
  out.k = 1;
  out.top = n;
  for (int i = 0; i <= n; ++i) out.term_ranks.push_back(1);
  for (int i = 0; i < n; ++i) {
    BMatrix m(1, 1, ctx, field);
    m.at(0, 0) = (i % 2 == 0) ? fr : cr;  // ... <-f B <-c B <-f B ...
    out.differentials.push_back(std::move(m));
  }
  return out;
}

// The banded k=2 family: gamma_{2i-2} and gamma_{2i-1} have i-fold diagonal
// blocks of f's against staggered columns of c.
SmallGobelinComplex codim2_complex(int n, const std::vector<Polynomial>& f, const PolyMatrix& c,
                                   const QuotientAlgebra& B) {
  const Context& ctx = B.context();
  const FieldSpec& field = B.field();
  Polynomial f1 = red(B, f[0]), f2 = red(B, f[1]);
  Polynomial c11 = red(B, c.at(0, 0)), c21 = red(B, c.at(1, 0));
  Polynomial c12 = red(B, c.at(0, 1)), c22 = red(B, c.at(1, 1));

  auto phi_map = [&](int i) {  // term(2i-1) -> term(2i-2): (2i-1) x 2i
    BMatrix m(static_cast<std::size_t>(2 * i - 1), static_cast<std::size_t>(2 * i), ctx, field);
    for (int r = 0; r < i - 1; ++r) {
      m.at(r, r) = -c12;
      m.at(r, r + 1) = -c22;
      m.at(r, i + r) = c11;
      m.at(r, i + r + 1) = c21;
    }
    for (int r = 0; r < i; ++r) {
      m.at(i - 1 + r, r) = f1;
      m.at(i - 1 + r, i + r) = f2;
    }
    return m;
  };
  auto psi_map = [&](int i) {  // term(2i) -> term(2i-1): 2i x (2i+1)
    BMatrix m(static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i + 1), ctx, field);
    for (int r = 0; r < i; ++r) {
      m.at(r, r) = -f2;
      m.at(r, i + r) = c11;
      m.at(r, i + r + 1) = c21;
      m.at(i + r, r) = f1;
      m.at(i + r, i + r) = c12;
      m.at(i + r, i + r + 1) = c22;
    }
    return m;
  };

  SmallGobelinComplex out;
  out.k = 2;
  out.top = n;
  for (int i = 0; i <= n; ++i) out.term_ranks.push_back(static_cast<std::size_t>(i + 1));
  for (int g = 0; g < n; ++g) {
    // gamma_g : term(g+1) -> term(g); even g is a phi block, odd g a psi block
    int i = g / 2 + 1;
    out.differentials.push_back(g % 2 == 0 ? phi_map(i) : psi_map(i));
  }
  return out;
}

BMatrix curve_row(const std::vector<Polynomial>& f, const QuotientAlgebra& B) {
  BMatrix m(1, f.size(), B.context(), B.field());
  for (std::size_t b = 0; b < f.size(); ++b) m.at(0, b) = red(B, f[b]);
  return m;
}

// k x (C(k,2) + k): pair columns (f_q in row p, -f_p in row q, pairs in lex
// order), then the k columns of c transposed.
BMatrix surface_gamma1(const std::vector<Polynomial>& f, const PolyMatrix& c,
                       const QuotientAlgebra& B) {
  const std::size_t k = f.size();
  const std::size_t pairs = k * (k - 1) / 2;
  BMatrix m(k, pairs + k, B.context(), B.field());
  std::size_t col = 0;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q) {
      m.at(p, col) = red(B, f[q]);
      m.at(q, col) = red(B, -f[p]);
      ++col;
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m.at(b, pairs + a) = red(B, c.at(a, b));
  return m;
}

}  // namespace

SmallGobelinComplex specialized_complex(SpecialKind kind, int n, const std::vector<Polynomial>& f,
                                        const PolyMatrix& c, const QuotientAlgebra& B) {
  const std::size_t k = f.size();
  if (c.rows() != k || c.cols() != k) throw_input("BadShape", "c must be k x k");
  switch (kind) {
    case SpecialKind::Codim1:
      if (k != 1) throw_input("UnsupportedSpecialization", "codim1 needs k = 1");
      return codim1_complex(n, f, c, B);
    case SpecialKind::Codim2:
      if (k != 2) throw_input("UnsupportedSpecialization", "codim2 needs k = 2");
      return codim2_complex(n, f, c, B);
    case SpecialKind::Curve: {
      if (n != 1) throw_input("UnsupportedSpecialization", "the curve shape needs n = 1");
      SmallGobelinComplex out;
      out.k = static_cast<int>(k);
      out.top = 1;
      out.term_ranks = {1, k};
      out.differentials.push_back(curve_row(f, B));
      return out;
    }
    case SpecialKind::Surface: {
      if (n != 2) throw_input("UnsupportedSpecialization", "the surface shape needs n = 2");
      if (k < 2) throw_input("UnsupportedSpecialization", "the surface shape needs k >= 2");
      SmallGobelinComplex out;
      out.k = static_cast<int>(k);
      out.top = 2;
      out.term_ranks = {1, k, k * (k - 1) / 2 + k};
      out.differentials.push_back(curve_row(f, B));
      out.differentials.push_back(surface_gamma1(f, c, B));
      return out;
    }
  }
  throw_internal("unreachable");
}

ScalarMatrix scalarize(const BMatrix& m, const QuotientAlgebra& B) {
  const std::size_t d = B.dimension();
  ScalarMatrix out(m.rows * d, m.cols * d, B.field());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero()) continue;
      ScalarMatrix block = B.multiplication_matrix(m.at(i, j));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) out.at(i * d + r, j * d + s) = block.at(r, s);
    }
  return out;
}

ScalarComplex scalarize_complex(const SmallGobelinComplex& c, const QuotientAlgebra& B) {
  ScalarComplex out;
  const std::size_t d = B.dimension();
  for (auto r : c.term_ranks) out.dims.push_back(r * d);
  for (const auto& m : c.differentials) out.maps.push_back(scalarize(m, B));
  out.validate();  // shapes + gamma_i . gamma_{i+1} = 0, exactly
  return out;
}

bool signed_permutation_equivalent(const BMatrix& a, const BMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  const std::size_t R = a.rows, C = a.cols;

  // row permutation rho with signs delta, then a column matching
  std::vector<std::size_t> rho(R);
  for (std::size_t i = 0; i < R; ++i) rho[i] = i;
  std::vector<int> delta(R, 1);

  auto columns_match = [&]() {
    // bipartite perfect matching between columns of A (transformed) and B
    std::vector<std::vector<std::size_t>> cand(C);
    for (std::size_t j = 0; j < C; ++j) {
      for (std::size_t j2 = 0; j2 < C; ++j2) {
        bool plus = true, minus = true;
        for (std::size_t i = 0; i < R && (plus || minus); ++i) {
          Polynomial lhs = delta[i] > 0 ? a.at(i, j) : -a.at(i, j);
          const Polynomial& rhs = b.at(rho[i], j2);
          if (lhs != rhs) plus = false;
          if (-lhs != rhs) minus = false;
        }
        if (plus || minus) cand[j].push_back(j2);
      }
      if (cand[j].empty()) return false;
    }
    std::vector<std::size_t> match_b(C, C);
    std::vector<bool> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t j) {
      for (std::size_t j2 : cand[j]) {
        if (seen[j2]) continue;
        seen[j2] = true;
        if (match_b[j2] == C || augment(match_b[j2])) {
          match_b[j2] = j;
          return true;
        }
      }
      return false;
    };
    for (std::size_t j = 0; j < C; ++j) {
      seen.assign(C, false);
      if (!augment(j)) return false;
    }
    return true;
  };

  // exhaust row permutations and signs; these matrices are small (rows <= 5)
  std::sort(rho.begin(), rho.end());
  do {
    const std::size_t sign_states = std::size_t{1} << R;
    for (std::size_t s = 0; s < sign_states; ++s) {
      for (std::size_t i = 0; i < R; ++i) delta[i] = (s >> i) & 1 ? -1 : 1;
      if (columns_match()) return true;
    }
  } while (std::next_permutation(rho.begin(), rho.end()));
  return false;
}

std::string format_bmatrix(const BMatrix& m, const std::string& name) {
  std::ostringstream os;
  os << "# " << name << " : " << m.rows << " x " << m.cols << "\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) os << " , ";
      os << m.at(i, j).str();
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace gobelin
