#include <doctest.h>

#include "test_util.hpp"

using namespace gobelin;
using namespace gobelin::test;

TEST_CASE("rational scalars are canonical") {
  FieldSpec q = QQ();
  Scalar a = Scalar::of_ratio(2, -4, q);
  CHECK(a.str() == "-1/2");
  CHECK((a + a).str() == "-1");
  CHECK((a * Scalar::of_int(-2, q)).is_one());
  CHECK(Scalar::of_ratio(6, 3, q).str() == "2");
  CHECK(Scalar::of_int(0, q).is_zero());
  CHECK_THROWS_AS(Scalar::of_int(1, q) / Scalar::of_int(0, q), Error);
}

TEST_CASE("prime field scalars are canonical residues") {
  FieldSpec f = FieldSpec::prime_field(32003);
  Scalar a = Scalar::of_int(-1, f);
  CHECK(a.residue() == 32002);
  CHECK((a * a).is_one());
  Scalar half = Scalar::of_ratio(1, 2, f);
  CHECK((half + half).is_one());
  CHECK_THROWS_AS(FieldSpec::prime_field(32004), Error);
  CHECK_THROWS_AS(FieldSpec::prime_field(2), Error);
  // denominator divisible by p is a bad-prime input
  CHECK_THROWS_AS(Scalar::of_ratio(1, 32003, f), Error);
}

TEST_CASE("monomial orders are total and multiplication compatible") {
  std::mt19937_64 rng(7);
  MonomialOrder local = MonomialOrder::local();
  MonomialOrder global = MonomialOrder::global();
  std::uniform_int_distribution<std::uint32_t> e(0, 4);
  for (int it = 0; it < 400; ++it) {
    Monomial a({e(rng), e(rng), e(rng)});
    Monomial b({e(rng), e(rng), e(rng)});
    Monomial m({e(rng), e(rng), e(rng)});
    for (const auto& ord : {local, global}) {
      int ab = ord.cmp(a, b);
      CHECK(ab == -ord.cmp(b, a));
      if (ab == 0) CHECK(a == b);
      if (ab > 0) CHECK(ord.cmp(a.times(m), b.times(m)) > 0);
    }
  }
  // 1 is the largest monomial locally; lower degree compares larger
  Monomial unit({0, 0, 0}), x({1, 0, 0}), x2({2, 0, 0});
  CHECK(local.greater(unit, x));
  CHECK(local.greater(x, x2));
  CHECK(global.greater(x2, x));
}

TEST_CASE("parser handles the worked polynomials") {
  Context c4 = ctx4();
  Polynomial f1 = P("x^2+y^2+z*w", c4);
  CHECK(f1.term_count() == 3);
  CHECK(f1.degree() == 2);
  CHECK(P("0", c4).is_zero());
  Polynomial x4 = P("y*w+1/4*w^2", c4);
  Monomial w2({0, 0, 0, 2});
  CHECK(x4.coefficient(w2) == Scalar::of_ratio(1, 4, QQ()));
  // whitespace is ignored
  CHECK(P("  y * w + 1/4 * w ^ 2 ", c4) == x4);
}

TEST_CASE("parser reports positions and rejects bad input") {
  Context c2 = ctx2();
  auto fails_with = [&](const std::string& src, const std::string& code) {
    try {
      P(src, c2);
      FAIL("expected a parse error for: ", src);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Input);
      CHECK(e.code() == code);
    }
  };
  fails_with("x + q", "UnknownVariable");
  fails_with("x ++ y", "SyntaxError");
  fails_with("2x", "SyntaxError");   // implicit multiplication
  fails_with("x y", "SyntaxError");  // implicit multiplication
  fails_with("1/0", "SyntaxError");
  fails_with("x^", "SyntaxError");
  fails_with("", "SyntaxError");
  fails_with("x^2 *", "SyntaxError");
  try {
    P("x * q", c2);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("print-then-parse is the identity") {
  std::mt19937_64 rng(11);
  Context c = ctx3();
  for (const FieldSpec& f : {QQ(), FieldSpec::prime_field(32003)}) {
    for (int it = 0; it < 80; ++it) {
      Polynomial p = random_poly(rng, c, f, 4, 6);
      CHECK(parse_polynomial(p.str(), c, f) == p);
    }
    CHECK(parse_polynomial(Polynomial(c, f).str(), c, f).is_zero());
  }
  // leading negative term round-trips
  Polynomial m = P("-x^3-y^2", c);
  CHECK(parse_polynomial(m.str(), c, QQ()) == m);
  CHECK(P("-1/4*x+y", c).str() == "-1/4*x+y");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(13);
  Context c = ctx4();
  for (int it = 0; it < 60; ++it) {
    Polynomial p = random_poly(rng, c, QQ(), 4, 4);
    Polynomial q = random_poly(rng, c, QQ(), 4, 4);
    Polynomial r = random_poly(rng, c, QQ(), 4, 4);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("Leibniz rule for the formal derivative") {
  std::mt19937_64 rng(17);
  Context c = ctx3();
  for (int it = 0; it < 40; ++it) {
    Polynomial p = random_poly(rng, c, QQ(), 4, 4);
    Polynomial q = random_poly(rng, c, QQ(), 4, 4);
    for (std::size_t v = 0; v < c.size(); ++v)
      CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
  }
}

TEST_CASE("jacobian of the worked tuples") {
  Context c4 = ctx4();
  std::vector<Polynomial> f{P("x^2+y^2+z*w", c4), P("x*y+z^2+w^2", c4)};
  PolyMatrix phi = jacobian(f);
  REQUIRE(phi.rows() == 2);
  REQUIRE(phi.cols() == 4);
  CHECK(phi.at(0, 0) == P("2*x", c4));
  CHECK(phi.at(0, 1) == P("2*y", c4));
  CHECK(phi.at(0, 2) == P("w", c4));
  CHECK(phi.at(0, 3) == P("z", c4));
  CHECK(phi.at(1, 0) == P("y", c4));
  CHECK(phi.at(1, 1) == P("x", c4));
  CHECK(phi.at(1, 2) == P("2*z", c4));
  CHECK(phi.at(1, 3) == P("2*w", c4));

  // first row for the cubic variant
  PolyMatrix phi2 = jacobian({P("x^3+y^2+z*w", c4)});
  CHECK(phi2.at(0, 0) == P("3*x^2", c4));
  CHECK(phi2.at(0, 1) == P("2*y", c4));
  CHECK(phi2.at(0, 2) == P("w", c4));
  CHECK(phi2.at(0, 3) == P("z", c4));

  // derivative of a constant tuple is a zero row
  PolyMatrix phi3 = jacobian({P("5", c4)});
  CHECK(phi3.is_zero());
}

TEST_CASE("matrix apply: identity, zero, and the tangency identity") {
  Context c4 = ctx4();
  FieldSpec q = QQ();
  std::vector<Polynomial> v{P("x^2", c4), P("y", c4), P("z*w", c4), P("1", c4)};
  CHECK(PolyMatrix::identity(4, c4, q).apply(v) == v);
  PolyMatrix zero(4, 4, c4, q);
  for (const auto& p : zero.apply(v)) CHECK(p.is_zero());

  std::vector<Polynomial> f{P("x^2+y^2+z*w", c4), P("x*y+z^2+w^2", c4)};
  std::vector<Polynomial> X{P("y*z-z^2-w^2", c4), P("y^2-x*z+1/2*y*w", c4),
                            P("x^2+y*z+3/4*z*w", c4), P("y*w+1/4*w^2", c4)};
  PolyMatrix c(2, 2, c4, q);
  c.at(0, 0) = P("2*y+w", c4);
  c.at(0, 1) = P("-2*x", c4);
  c.at(1, 0) = P("z", c4);
  c.at(1, 1) = P("y+1/2*w", c4);
  CHECK(jacobian(f).apply(X) == c.apply(f));

  CHECK_THROWS_AS(c.apply(X), Error);  // shape mismatch
}

TEST_CASE("k_minors: order, values, and degenerate cases") {
  Context c4 = ctx4();
  FieldSpec q = QQ();
  auto id2 = PolyMatrix::identity(2, ctx2(), q);
  auto dets = k_minors(id2, 2);
  REQUIRE(dets.size() == 1);
  CHECK(dets[0] == Polynomial::constant(ctx2(), 1, q));

  std::vector<Polynomial> f{P("x^2+y^2+z*w", c4), P("x*y+z^2+w^2", c4)};
  auto minors = k_minors(jacobian(f), 2);
  REQUIRE(minors.size() == 6);  // C(2,2) * C(4,2), column sets in lex order
  CHECK(minors[0] == P("2*x^2-2*y^2", c4));  // columns {1,2}

  // k = 1 returns the entries row-major
  auto ones = k_minors(id2, 1);
  REQUIRE(ones.size() == 4);
  CHECK(ones[1].is_zero());

  CHECK_THROWS_AS(k_minors(id2, 3), Error);
}

TEST_CASE("minors with two equal rows vanish for k >= 2") {
  std::mt19937_64 rng(19);
  Context c = ctx3();
  for (int it = 0; it < 20; ++it) {
    PolyMatrix m(3, 3, c, QQ());
    for (std::size_t j = 0; j < 3; ++j) {
      m.at(0, j) = random_poly(rng, c, QQ(), 2, 3);
      m.at(2, j) = m.at(0, j);
      m.at(1, j) = random_poly(rng, c, QQ(), 2, 3);
    }
    for (std::size_t k = 2; k <= 3; ++k) {
      // every k x k minor using both copies is zero; the 3 x 3 ones all do
      if (k == 3) {
        for (const auto& d : k_minors(m, 3)) CHECK(d.is_zero());
      } else {
        auto dets = k_minors(m, 2);
        // row sets in lex order: {0,1}, {0,2}, {1,2}; the middle block uses rows 0 and 2
        for (std::size_t i = 3; i < 6; ++i) CHECK(dets[i].is_zero());
      }
    }
  }
}
