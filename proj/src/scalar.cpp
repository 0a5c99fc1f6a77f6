#include "scalar.hpp"

namespace gobelin {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((u128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a mod p (p prime, a != 0 mod p), extended Euclid.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw_internal("invmod: argument not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw_input("BadField", "field modulus must be an odd prime, got " + std::to_string(p));
  if (p >= (1ull << 62))
    throw_input("BadField", "field modulus too large");
  FieldSpec f;
  f.p = p;
  return f;
}

namespace {

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class pm(std::to_string(p));
  mpz_class m = v % pm;
  if (m < 0) m += pm;
  return static_cast<std::uint64_t>(m.get_ui());
}

}  // namespace

Scalar Scalar::of_int(long long v, const FieldSpec& f) {
  Scalar s;
  s.f_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(mpz_class(std::to_string(v)));
  } else {
    s.r_ = reduce_mpz(mpz_class(std::to_string(v)), f.p);
  }
  return s;
}

Scalar Scalar::of_mpz(const mpz_class& v, const FieldSpec& f) {
  Scalar s;
  s.f_ = f;
  if (f.is_rational())
    s.q_ = mpq_class(v);
  else
    s.r_ = reduce_mpz(v, f.p);
  return s;
}

Scalar Scalar::of_ratio(const mpz_class& num, const mpz_class& den, const FieldSpec& f) {
  if (den == 0) throw_input("BadCoefficient", "zero denominator in rational coefficient");
  Scalar s;
  s.f_ = f;
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    s.q_ = q;
  } else {
    std::uint64_t d = reduce_mpz(den, f.p);
    if (d == 0)
      throw_input("BadCoefficient",
                  "denominator divisible by the field characteristic " + std::to_string(f.p));
    s.r_ = mulmod(reduce_mpz(num, f.p), invmod(d, f.p), f.p);
  }
  return s;
}

Scalar Scalar::of_mpq(const mpq_class& q, const FieldSpec& f) {
  return of_ratio(q.get_num(), q.get_den(), f);
}

bool Scalar::is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }
bool Scalar::is_negative() const { return f_.is_rational() && q_ < 0; }

void Scalar::check_same_field(const Scalar& o) const {
  if (f_ != o.f_) throw_internal("scalar arithmetic across distinct fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (f_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : f_.p - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (f_.is_rational()) {
    s.q_ = q_ + o.q_;
  } else {
    std::uint64_t v = r_ + o.r_;
    if (v >= f_.p) v -= f_.p;
    s.r_ = v;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (f_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mulmod(r_, o.r_, f_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw_internal("inverse of zero");
  Scalar s = *this;
  if (f_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = invmod(r_, f_.p);
  return s;
}

int Scalar::cmp(const Scalar& o) const {
  if (f_.p != o.f_.p) return f_.p < o.f_.p ? -1 : 1;
  if (f_.is_rational()) {
    int c = ::cmp(q_, o.q_);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string Scalar::str() const {
  if (f_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

const mpq_class& Scalar::rat() const {
  if (!f_.is_rational()) throw_internal("rat() on a prime-field element");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (f_.is_rational()) throw_internal("residue() on a rational");
  return r_;
}

}  // namespace gobelin
