#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace gobelin {

// Base field of a computation: the rationals (p == 0) or a prime field F_p
// with p an odd prime. Everything downstream is exact; no floating point
// exists anywhere in this library.
struct FieldSpec {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const FieldSpec& o) const { return p == o.p; }
  bool operator!=(const FieldSpec& o) const { return p != o.p; }

  std::string name() const;

  static FieldSpec rationals() { return FieldSpec{}; }
  // Validates that p is an odd prime (throws an input error otherwise).
  static FieldSpec prime_field(std::uint64_t p);
};

bool is_prime_u64(std::uint64_t n);

// Exact field element: a rational in lowest terms with positive denominator,
// or a canonical residue in [0, p). Immutable value semantics.
class Scalar {
public:
  Scalar() : f_(), q_(0), r_(0) {}

  static Scalar zero(const FieldSpec& f) { return of_int(0, f); }
  static Scalar one(const FieldSpec& f) { return of_int(1, f); }
  static Scalar of_int(long long v, const FieldSpec& f);
  static Scalar of_mpz(const mpz_class& v, const FieldSpec& f);
  // num/den with den != 0; reduced on construction. In F_p mode den must be
  // invertible mod p (throws an input error otherwise: "bad prime").
  static Scalar of_ratio(const mpz_class& num, const mpz_class& den, const FieldSpec& f);
  static Scalar of_mpq(const mpq_class& q, const FieldSpec& f);

  const FieldSpec& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  // Sign of a rational; residues have no sign and report false.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return cmp(o) == 0; }
  bool operator!=(const Scalar& o) const { return cmp(o) != 0; }
  // Total order used for canonical containers; field first, then value.
  int cmp(const Scalar& o) const;

  // Canonical text: "3", "-1/4" over Q; the residue digits over F_p.
  std::string str() const;

  const mpq_class& rat() const;
  std::uint64_t residue() const;

private:
  FieldSpec f_;
  mpq_class q_;      // valid iff f_.is_rational()
  std::uint64_t r_;  // valid otherwise

  void check_same_field(const Scalar& o) const;
};

}  // namespace gobelin
