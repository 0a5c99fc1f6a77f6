#include "polynomial.hpp"

#include <sstream>

namespace gobelin {

std::optional<std::size_t> Context::index(const std::string& v) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == v) return i;
  return std::nullopt;
}

Polynomial Polynomial::constant(const Context& ctx, const Scalar& c) {
  Polynomial p(ctx, c.field());
  p.add_term(Monomial::unit(ctx.size()), c);
  return p;
}

Polynomial Polynomial::constant(const Context& ctx, long long v, const FieldSpec& f) {
  return constant(ctx, Scalar::of_int(v, f));
}

Polynomial Polynomial::variable(const Context& ctx, std::size_t i, const FieldSpec& f) {
  if (i >= ctx.size()) throw_internal("variable index out of range");
  Monomial m(ctx.size());
  m.exp(i) = 1;
  return term(ctx, m, Scalar::one(f));
}

Polynomial Polynomial::term(const Context& ctx, const Monomial& m, const Scalar& c) {
  Polynomial p(ctx, c.field());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Scalar Polynomial::constant_term() const {
  return coefficient(Monomial::unit(ctx_.size()));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.degree()));
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ctx_ != o.ctx_ || field_ != o.field_)
    throw_internal("polynomial operands over distinct contexts or fields");
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (m.nvars() != ctx_.size()) throw_internal("term arity mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_, field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(ctx_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ctx_, field_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ctx_, field_);
  if (c.is_zero()) return r;
  for (const auto& [mm, a] : terms_) r.terms_.emplace(mm.times(m), a * c);
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ctx_.size()) throw_internal("derivative variable out of range");
  Polynomial r(ctx_, field_);
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m[var];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exp(var) = e - 1;
    r.add_term(dm, c * Scalar::of_int(e, field_));
  }
  return r;
}

Polynomial Polynomial::content_normalized(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  if (!field_.is_rational()) return scaled(lead(ord).c.inverse());
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    const mpq_class& q = c.rat();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    den_lcm = den_lcm / g * q.get_den();
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  Polynomial out = scaled(Scalar::of_mpq(factor, field_));
  if (out.lead(ord).c.is_negative()) out = -out;
  return out;
}

Polynomial::LeadTerm Polynomial::lead(const MonomialOrder& ord) const {
  if (terms_.empty()) throw_internal("lead() of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

int Polynomial::ecart(const MonomialOrder& ord) const {
  return degree() - static_cast<int>(lead(ord).m.degree());
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ctx_ == o.ctx_ && field_ == o.field_ && terms_ == o.terms_;
}

int Polynomial::cmp(const Polynomial& o) const {
  if (field_.p != o.field_.p) return field_.p < o.field_.p ? -1 : 1;
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    int c = a->first.lex_cmp(b->first);
    if (c != 0) return c;
    c = a->second.cmp(b->second);
    if (c != 0) return c;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

namespace {

// One monomial without its coefficient, e.g. "x^2*w".
std::string monomial_str(const Monomial& m, const Context& ctx) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ctx.name(i);
    if (m[i] > 1) os << '^' << m[i];
  }
  return os.str();
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // reverse map order = lexicographically descending monomials
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Scalar c = it->second;
    bool neg = c.is_negative();
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    first = false;
    if (m.is_unit()) {
      os << c.str();
    } else if (c.is_one()) {
      os << monomial_str(m, ctx_);
    } else {
      os << c.str() << '*' << monomial_str(m, ctx_);
    }
  }
  return os.str();
}

}  // namespace gobelin
