#include "local_ring.hpp"

#include <algorithm>
#include <set>

namespace gobelin {

namespace {

void check_gens(const std::vector<Polynomial>& G) {
  if (G.empty()) throw_input("BadGenerators", "empty generator list");
  for (const auto& g : G) {
    if (g.is_zero()) throw_input("BadGenerators", "zero polynomial among generators");
    if (g.context() != G[0].context() || g.field() != G[0].field())
      throw_input("BadGenerators", "generators over distinct contexts or fields");
  }
}

void check_degree(const Polynomial& p, unsigned cap) {
  if (p.degree() > static_cast<int>(cap))
    throw_resource("DegreeCapExceeded",
                   "reduction exceeded the degree cap " + std::to_string(cap) +
                       " (raise --max-degree if the input is expected to be this deep)");
}

struct Tracked {
  Polynomial p;
  Polynomial u;                  // p = u*g + sum(s_i * G_i)
  std::vector<Polynomial> s;
  Monomial lead;
  int ecart;
};

}  // namespace

DivisionResult divide(const Polynomial& g, const std::vector<Polynomial>& G,
                      const MonomialOrder& ord, unsigned degree_cap, bool tail_reduce) {
  check_gens(G);
  const Context& ctx = G[0].context();
  const FieldSpec& field = G[0].field();
  if (g.context() != ctx || g.field() != field)
    throw_input("BadGenerators", "dividend over a different context or field");

  auto make_tracked = [&](const Polynomial& p, const Polynomial& u,
                          const std::vector<Polynomial>& s) {
    Tracked t{p, u, s, p.lead(ord).m, p.ecart(ord)};
    return t;
  };

  std::vector<Tracked> reducers;
  reducers.reserve(G.size() + 8);
  const Polynomial zero(ctx, field);
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<Polynomial> s(G.size(), zero);
    s[i] = Polynomial::constant(ctx, 1, field);
    reducers.push_back(make_tracked(G[i], zero, s));
  }

  Polynomial p = g;
  Polynomial u = Polynomial::constant(ctx, 1, field);
  std::vector<Polynomial> s(G.size(), zero);
  Polynomial remainder(ctx, field);

  while (!p.is_zero()) {
    check_degree(p, degree_cap);
    auto lt = p.lead(ord);
    int p_ecart = p.degree() - static_cast<int>(lt.m.degree());

    // minimal-ecart reducer whose lead divides lt.m; ties go to the earliest
    std::size_t pick = reducers.size();
    for (std::size_t t = 0; t < reducers.size(); ++t) {
      if (!reducers[t].lead.divides(lt.m)) continue;
      if (pick == reducers.size() || reducers[t].ecart < reducers[pick].ecart) pick = t;
    }

    if (pick == reducers.size()) {
      if (!tail_reduce) {
        remainder += p;
        break;
      }
      // lt survives into the remainder; keep reducing the tail
      remainder.add_term(lt.m, lt.c);
      p.add_term(lt.m, -lt.c);
      continue;
    }

    if (reducers[pick].ecart > p_ecart) reducers.push_back(make_tracked(p, u, s));

    const Tracked& t = reducers[pick];
    Monomial m = lt.m.divided_by(t.lead);
    Scalar c = lt.c / t.p.coefficient(t.lead);
    p -= t.p.times_term(m, c);
    u -= t.u.times_term(m, c);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!t.s[i].is_zero()) s[i] -= t.s[i].times_term(m, c);
  }

  DivisionResult out;
  out.remainder = std::move(remainder);
  out.unit = std::move(u);
  out.quotients.reserve(s.size());
  for (auto& si : s) out.quotients.push_back(-si);
  return out;
}

Polynomial weak_normal_form(const Polynomial& g, const std::vector<Polynomial>& G,
                            const MonomialOrder& ord, unsigned degree_cap) {
  return divide(g, G, ord, degree_cap).remainder;
}

namespace {

// Completion-loop normal form: top reduction only, no quotient tracking, and
// content normalization after every step to keep coefficients small.
Polynomial nf_top(const Polynomial& g, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord, unsigned degree_cap) {
  struct Reducer {
    Polynomial poly;
    Monomial lead;
    int ecart;
  };
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size() + 8);
  for (const auto& b : basis) reducers.push_back(Reducer{b, b.lead(ord).m, b.ecart(ord)});

  Polynomial p = g;
  while (!p.is_zero()) {
    check_degree(p, degree_cap);
    auto lt = p.lead(ord);
    int p_ecart = p.degree() - static_cast<int>(lt.m.degree());
    std::size_t pick = reducers.size();
    for (std::size_t t = 0; t < reducers.size(); ++t) {
      if (!reducers[t].lead.divides(lt.m)) continue;
      if (pick == reducers.size() || reducers[t].ecart < reducers[pick].ecart) pick = t;
    }
    if (pick == reducers.size()) return p;
    if (reducers[pick].ecart > p_ecart) reducers.push_back(Reducer{p, lt.m, p_ecart});
    const Reducer& t = reducers[pick];
    Monomial m = lt.m.divided_by(t.lead);
    Scalar c = lt.c / t.poly.coefficient(t.lead);
    p -= t.poly.times_term(m, c);
    p = p.content_normalized(ord);
  }
  return p;
}

}  // namespace

StandardBasis::StandardBasis(std::vector<Polynomial> gens, MonomialOrder ord)
    : gens_(std::move(gens)), ord_(ord) {
  check_gens(gens_);
  lead_.reserve(gens_.size());
  for (const auto& g : gens_) lead_.push_back(g.lead(ord_).m);
}

bool StandardBasis::leading_ideal_contains(const Monomial& m) const {
  for (const auto& l : lead_)
    if (l.divides(m)) return true;
  return false;
}

namespace {

Polynomial spoly(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  auto la = a.lead(ord), lb = b.lead(ord);
  Monomial l = Monomial::lcm(la.m, lb.m);
  return a.times_term(l.divided_by(la.m), la.c.inverse()) -
         b.times_term(l.divided_by(lb.m), lb.c.inverse());
}

}  // namespace

StandardBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                             unsigned degree_cap) {
  check_gens(gens);
  std::vector<Polynomial> basis;
  basis.reserve(gens.size());
  for (const auto& g : gens) basis.push_back(g.content_normalized(ord));

  using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::set<PairKey> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].lead(ord).m, basis[j].lead(ord).m);
      pairs.emplace(l.degree(), i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    // product criterion: coprime leads reduce to zero
    Monomial li = basis[i].lead(ord).m, lj = basis[j].lead(ord).m;
    if (Monomial::lcm(li, lj).degree() == li.degree() + lj.degree()) continue;
    Polynomial s = spoly(basis[i], basis[j], ord);
    if (s.is_zero()) continue;
    Polynomial h = nf_top(s, basis, ord, degree_cap);
    if (h.is_zero()) continue;
    basis.push_back(h.content_normalized(ord));
    push_pairs(basis.size() - 1);
  }

  // minimalize: keep only generators whose lead is not divisible by a kept one
  std::vector<std::size_t> order_idx(basis.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    return basis[a].lead(ord).m.degree() < basis[b].lead(ord).m.degree();
  });
  std::vector<Polynomial> kept;
  std::vector<Monomial> kept_leads;
  for (std::size_t idx : order_idx) {
    Monomial l = basis[idx].lead(ord).m;
    bool redundant = false;
    for (const auto& kl : kept_leads)
      if (kl.divides(l)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      kept.push_back(basis[idx]);
      kept_leads.push_back(l);
    }
  }
  return StandardBasis(std::move(kept), ord);
}

bool is_zero_dimensional(const StandardBasis& sb) {
  const std::size_t n = sb.context().size();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& l : sb.leading_monomials()) {
      bool pure = true;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && l[w] != 0) {
          pure = false;
          break;
        }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> staircase(const StandardBasis& sb) {
  const std::size_t n = sb.context().size();

  // a unit leading monomial means the whole ring is the ideal
  for (const auto& l : sb.leading_monomials())
    if (l.is_unit()) return {};

  // bound[v]: smallest pure power of variable v in the leading ideal
  std::vector<std::uint64_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& l : sb.leading_monomials()) {
      bool pure = l[v] > 0;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && l[w] != 0) pure = false;
      if (pure && (bound[v] == 0 || l[v] < bound[v])) bound[v] = l[v];
    }
    if (bound[v] == 0)
      throw_hypothesis("NotZeroDimensional",
                       "the quotient is not finite dimensional: no pure power of '" +
                           sb.context().name(v) + "' in the leading ideal");
  }

  std::uint64_t box = 1;
  for (auto b : bound) {
    box *= b;
    if (box > 10'000'000ull) throw_resource("StaircaseTooLarge", "staircase bound exceeds 10^7");
  }

  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  // enumerate the box below the pure-power bounds, keep the undivided ones
  while (true) {
    Monomial m{std::vector<std::uint32_t>(e)};
    if (!sb.leading_ideal_contains(m)) out.push_back(m);
    std::size_t v = 0;
    while (v < n) {
      if (e[v] + 1 < bound[v]) {
        ++e[v];
        break;
      }
      e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  const MonomialOrder& ord = sb.ordering();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

std::size_t local_dimension(const std::vector<Polynomial>& gens, unsigned degree_cap) {
  StandardBasis sb = standard_basis(gens, MonomialOrder::local(), degree_cap);
  return staircase(sb).size();
}

// ---------------------------------------------------------------------------
// QuotientAlgebra

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by index

void row_add_scaled(SparseRow& dst, const SparseRow& src, const Scalar& c) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Scalar v = src[j].second * c;
      if (!v.is_zero()) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      Scalar v = dst[i].second + src[j].second * c;
      if (!v.is_zero()) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

Polynomial truncate(const Polynomial& p, std::uint64_t max_degree) {
  Polynomial r(p.context(), p.field());
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= max_degree) r.add_term(m, c);
  return r;
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(StandardBasis sb) : sb_(std::move(sb)) {
  basis_ = staircase(sb_);
  for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_.emplace(basis_[i], i);
  s_max_ = 0;
  for (const auto& m : basis_) s_max_ = std::max<std::uint32_t>(s_max_, m.degree());
  if (basis_.empty()) return;  // the zero ring; nothing to reduce onto

  const Context& ctx = sb_.context();
  const FieldSpec& field = sb_.field();
  const MonomialOrder& ord = sb_.ordering();

  // monomial universe of degree <= s_max, descending by the local order
  std::vector<Monomial> universe = monomials_up_to_degree(ctx.size(), s_max_);
  std::sort(universe.begin(), universe.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  std::map<Monomial, std::size_t, MonomialLexLess> uidx;
  for (std::size_t i = 0; i < universe.size(); ++i) uidx.emplace(universe[i], i);

  // online reduced row echelon over the universe; pivot = largest monomial
  std::map<std::size_t, SparseRow> pivots;
  auto insert_row = [&](SparseRow row) {
    bool changed = true;
    while (changed && !row.empty()) {
      changed = false;
      for (const auto& [idx, c] : row) {
        auto it = pivots.find(idx);
        if (it != pivots.end()) {
          row_add_scaled(row, it->second, -c);
          changed = true;
          break;
        }
      }
    }
    if (row.empty()) return;
    Scalar inv = row[0].second.inverse();
    for (auto& [idx, c] : row) c *= inv;
    std::size_t piv = row[0].first;
    for (auto& [pidx, prow] : pivots) {
      for (std::size_t t = 1; t < prow.size(); ++t) {
        if (prow[t].first == piv) {
          row_add_scaled(prow, row, -prow[t].second);
          break;
        }
        if (prow[t].first > piv) break;
      }
    }
    pivots.emplace(piv, std::move(row));
  };

  // relation rows: truncated multiples of the standard basis
  const std::vector<Monomial> multipliers = monomials_up_to_degree(ctx.size(), s_max_);
  for (const auto& g : sb_.generators()) {
    for (const auto& m : multipliers) {
      Polynomial prod = truncate(g.times_term(m, Scalar::one(field)), s_max_);
      if (prod.is_zero()) continue;
      SparseRow row;
      for (const auto& [mm, c] : prod.terms()) row.emplace_back(uidx.at(mm), c);
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      insert_row(std::move(row));
    }
  }

  // non-pivots must be exactly the staircase
  for (std::size_t i = 0; i < universe.size(); ++i) {
    bool is_pivot = pivots.count(i) > 0;
    bool is_basis = basis_index_.count(universe[i]) > 0;
    if (is_pivot == is_basis)
      throw_internal("quotient reducer disagrees with the staircase at monomial " +
                     Polynomial::term(ctx, universe[i], Scalar::one(field)).str());
  }

  for (const auto& [piv, row] : pivots) {
    std::vector<Scalar> coords(basis_.size(), Scalar::zero(field));
    for (std::size_t t = 1; t < row.size(); ++t) {
      auto bit = basis_index_.find(universe[row[t].first]);
      if (bit == basis_index_.end()) throw_internal("reducer tail escaped the staircase");
      coords[bit->second] = -row[t].second;
    }
    pivot_tails_.emplace(universe[piv], std::move(coords));
  }
}

std::vector<Scalar> QuotientAlgebra::coordinates(const Polynomial& p) const {
  if (p.context() != context() || p.field() != field())
    throw_internal("coordinates() across contexts or fields");
  std::vector<Scalar> coords(basis_.size(), Scalar::zero(field()));
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() > s_max_) continue;  // provably zero in the local quotient
    auto bit = basis_index_.find(m);
    if (bit != basis_index_.end()) {
      coords[bit->second] += c;
      continue;
    }
    auto pit = pivot_tails_.find(m);
    if (pit == pivot_tails_.end()) throw_internal("monomial missing from the reducer");
    const auto& tail = pit->second;
    for (std::size_t i = 0; i < tail.size(); ++i)
      if (!tail[i].is_zero()) coords[i] += c * tail[i];
  }
  return coords;
}

Polynomial QuotientAlgebra::reduce(const Polynomial& p) const {
  auto coords = coordinates(p);
  Polynomial r(context(), field());
  for (std::size_t i = 0; i < coords.size(); ++i) r.add_term(basis_[i], coords[i]);
  return r;
}

bool QuotientAlgebra::is_zero_in_quotient(const Polynomial& p) const {
  for (const auto& c : coordinates(p))
    if (!c.is_zero()) return false;
  return true;
}

ScalarMatrix QuotientAlgebra::multiplication_matrix(const Polynomial& p) const {
  Polynomial key = reduce(p);
  {
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto it = mult_cache_.find(key);
    if (it != mult_cache_.end()) return it->second;
  }
  const std::size_t d = basis_.size();
  ScalarMatrix m(d, d, field());
  for (std::size_t j = 0; j < d; ++j) {
    auto col = coordinates(key.times_term(basis_[j], Scalar::one(field())));
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col[i];
  }
  std::lock_guard<std::mutex> lk(cache_mu_);
  return mult_cache_.emplace(std::move(key), std::move(m)).first->second;
}

Polynomial QuotientAlgebra::invert(const Polynomial& p) const {
  if (basis_.empty()) throw_internal("invert() in the zero ring");
  ScalarMatrix m = multiplication_matrix(p);
  const std::size_t d = dimension();
  // solve m * x = e_unit by Gauss-Jordan on the augmented system
  ScalarMatrix a(d, d + 1, field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.at(i, j) = m.at(i, j);
  if (!(basis_[0].is_unit())) throw_internal("staircase does not start at the unit monomial");
  a.at(0, d) = Scalar::one(field());
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < d && r < d; ++c) {
    std::size_t piv = d;
    for (std::size_t i = r; i < d; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == d) continue;
    if (piv != r)
      for (std::size_t j = 0; j <= d; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = 0; j <= d; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r) continue;
      Scalar v = a.at(i, c);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j <= d; ++j) a.at(i, j) -= v * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != d) throw_hypothesis("NotAUnit", "element is not invertible in the quotient");
  std::vector<Scalar> x(d, Scalar::zero(field()));
  for (std::size_t t = 0; t < d; ++t) x[pivot_col[t]] = a.at(t, d);
  Polynomial out(context(), field());
  for (std::size_t i = 0; i < d; ++i) out.add_term(basis_[i], x[i]);
  return out;
}

// ---------------------------------------------------------------------------
// lifts

namespace {

// Completed basis with exact polynomial expressions of every element in the
// original generators: basis[t] = sum_i lifts[t][i] * G[i]. Division units
// multiply into the lifts, so the expressions stay exact for local orderings
// too.
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> lifts;
};

TrackedBasis tracked_basis(const std::vector<Polynomial>& G, const MonomialOrder& ord,
                           unsigned degree_cap) {
  check_gens(G);
  const Context& ctx = G[0].context();
  const FieldSpec& field = G[0].field();
  const Polynomial zero(ctx, field);

  TrackedBasis tb;
  for (std::size_t i = 0; i < G.size(); ++i) {
    tb.basis.push_back(G[i]);
    std::vector<Polynomial> l(G.size(), zero);
    l[i] = Polynomial::constant(ctx, 1, field);
    tb.lifts.push_back(std::move(l));
  }

  using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::set<PairKey> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(tb.basis[i].lead(ord).m, tb.basis[j].lead(ord).m);
      pairs.emplace(l.degree(), i, j);
    }
  };
  for (std::size_t j = 1; j < tb.basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    auto la = tb.basis[i].lead(ord), lb = tb.basis[j].lead(ord);
    Monomial l = Monomial::lcm(la.m, lb.m);
    if (l.degree() == la.m.degree() + lb.m.degree()) continue;  // product criterion
    Monomial ma = l.divided_by(la.m), mb = l.divided_by(lb.m);
    Scalar ca = la.c.inverse(), cb = lb.c.inverse();
    Polynomial s = tb.basis[i].times_term(ma, ca) - tb.basis[j].times_term(mb, cb);
    if (s.is_zero()) continue;
    DivisionResult d = divide(s, tb.basis, ord, degree_cap, /*tail_reduce=*/false);
    if (d.remainder.is_zero()) continue;
    // remainder = unit*s - sum quotients[t]*basis[t], all exact polynomials
    std::vector<Polynomial> lift(G.size(), zero);
    for (std::size_t t = 0; t < G.size(); ++t) {
      Polynomial s_lift = tb.lifts[i][t].times_term(ma, ca) - tb.lifts[j][t].times_term(mb, cb);
      lift[t] = d.unit * s_lift;
      for (std::size_t b = 0; b < tb.basis.size(); ++b)
        if (!d.quotients[b].is_zero() && !tb.lifts[b][t].is_zero())
          lift[t] -= d.quotients[b] * tb.lifts[b][t];
    }
    tb.basis.push_back(std::move(d.remainder));
    tb.lifts.push_back(std::move(lift));
    push_pairs(tb.basis.size() - 1);
  }
  return tb;
}

std::optional<Lift> lift_through(const Polynomial& g, const std::vector<Polynomial>& G,
                                 const TrackedBasis& tb, const MonomialOrder& ord,
                                 unsigned degree_cap) {
  const Context& ctx = G[0].context();
  const FieldSpec& field = G[0].field();
  DivisionResult d = divide(g, tb.basis, ord, degree_cap, /*tail_reduce=*/false);
  if (!d.remainder.is_zero()) return std::nullopt;
  Lift out;
  out.unit = d.unit;
  out.quotients.assign(G.size(), Polynomial(ctx, field));
  for (std::size_t b = 0; b < tb.basis.size(); ++b) {
    if (d.quotients[b].is_zero()) continue;
    for (std::size_t t = 0; t < G.size(); ++t)
      if (!tb.lifts[b][t].is_zero()) out.quotients[t] += d.quotients[b] * tb.lifts[b][t];
  }
  Scalar c0 = out.unit.constant_term();
  if (c0.is_zero()) throw_internal("division produced a non-unit factor");
  Scalar inv = c0.inverse();
  out.unit = out.unit.scaled(inv);
  for (auto& q : out.quotients) q = q.scaled(inv);
  // exactness certified by re-multiplication
  Polynomial check = out.unit * g;
  for (std::size_t t = 0; t < G.size(); ++t) check -= out.quotients[t] * G[t];
  if (!check.is_zero()) throw_internal("lift identity failed re-multiplication");
  return out;
}

}  // namespace

std::optional<Lift> lift_membership(const Polynomial& g, const std::vector<Polynomial>& G,
                                    const MonomialOrder& ord, unsigned degree_cap) {
  TrackedBasis tb = tracked_basis(G, ord, degree_cap);
  return lift_through(g, G, tb, ord, degree_cap);
}

std::vector<std::optional<Lift>> lift_membership_many(const std::vector<Polynomial>& gs,
                                                      const std::vector<Polynomial>& G,
                                                      const MonomialOrder& ord,
                                                      unsigned degree_cap) {
  TrackedBasis tb = tracked_basis(G, ord, degree_cap);
  std::vector<std::optional<Lift>> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(lift_through(g, G, tb, ord, degree_cap));
  return out;
}

std::optional<std::vector<Polynomial>> global_lift(const Polynomial& g,
                                                   const std::vector<Polynomial>& G,
                                                   unsigned degree_cap) {
  const MonomialOrder ord = MonomialOrder::global();
  TrackedBasis tb = tracked_basis(G, ord, degree_cap);
  auto lift = lift_through(g, G, tb, ord, degree_cap);
  if (!lift) return std::nullopt;
  if (!lift->unit.is_constant() || !lift->unit.constant_term().is_one())
    throw_internal("global division produced a nontrivial unit");
  return lift->quotients;
}

}  // namespace gobelin
