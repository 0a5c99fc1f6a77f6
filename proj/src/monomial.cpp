#include "monomial.hpp"

namespace gobelin {

Monomial Monomial::times(const Monomial& o) const {
  if (nvars() != o.nvars()) throw_internal("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars()) throw_internal("monomial arity mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  if (!o.divides(*this)) throw_internal("monomial division not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw_internal("monomial arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i)
    if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
  return r;
}

int Monomial::lex_cmp(const Monomial& o) const {
  if (nvars() != o.nvars()) return nvars() < o.nvars() ? -1 : 1;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != o.e_[i]) return e_[i] < o.e_[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) {
    bool a_larger = (kind_ == OrderKind::NegDegRevLex) ? da < db : da > db;
    return a_larger ? 1 : -1;
  }
  // revlex: the one with the smaller exponent in the last differing slot wins
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void enumerate_degree(std::size_t nvars, std::uint32_t d, std::size_t pos, Monomial& cur,
                      std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur.exp(pos) = d;
    out.push_back(cur);
    cur.exp(pos) = 0;
    return;
  }
  for (std::uint32_t e = d;; --e) {
    cur.exp(pos) = e;
    enumerate_degree(nvars, d - e, pos + 1, cur, out);
    cur.exp(pos) = 0;
    if (e == 0) break;
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(std::size_t{0});
    return out;
  }
  Monomial cur(nvars);
  enumerate_degree(nvars, d, 0, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  for (std::uint32_t k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(nvars, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace gobelin
