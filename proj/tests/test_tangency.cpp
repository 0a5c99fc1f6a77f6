#include <doctest.h>

#include "test_util.hpp"

using namespace gobelin;
using namespace gobelin::test;

namespace {

struct Ex1 {
  Context c4 = ctx4();
  std::vector<Polynomial> f{P("x^2+y^2+z*w", c4), P("x*y+z^2+w^2", c4)};
  std::vector<Polynomial> X{P("y*z-z^2-w^2", c4), P("y^2-x*z+1/2*y*w", c4),
                            P("x^2+y*z+3/4*z*w", c4), P("y*w+1/4*w^2", c4)};
  PolyMatrix c = [this] {
    PolyMatrix m(2, 2, c4, QQ());
    m.at(0, 0) = P("2*y+w", c4);
    m.at(0, 1) = P("-2*x", c4);
    m.at(1, 0) = P("z", c4);
    m.at(1, 1) = P("y+1/2*w", c4);
    return m;
  }();
};

struct Ex2 {
  Context c4 = ctx4();
  std::vector<Polynomial> f{P("x^3+y^2+z*w", c4), P("x*y+z^2+w^2", c4)};
  std::vector<Polynomial> X{
      P("768*x*z*w-192*x*w^2+4*x^2-4*x*y-16*z*w+4*w^2", c4),
      P("24*x*z*w+1152*y*z*w-96*x*w^2-288*y*w^2+8*x*y-6*y^2-2*z^2+2*w^2", c4),
      P("-12*x^2*w+960*z^2*w-288*z*w^2-192*w^3+x*y+7*x*z-5*y*z+z^2+w^2", c4),
      P("48*x^2*w-48*x*y*w+1152*z*w^2-288*w^3-x*y+8*y*z-z^2+5*x*w-7*y*w-w^2", c4)};
  PolyMatrix c = [this] {
    PolyMatrix m(2, 2, c4, QQ());
    m.at(0, 0) = P("2304*z*w-576*w^2+12*x-12*y", c4);
    m.at(0, 1) = P("-192*w^2+4*y-z+w", c4);
    m.at(1, 0) = P("0", c4);
    m.at(1, 1) = P("1920*z*w-576*w^2+12*x-10*y+2*z-2*w", c4);
    return m;
  }();
};

}  // namespace

TEST_CASE("verify_tangency on the worked surfaces") {
  Ex1 e1;
  CHECK(verify_tangency(e1.f, e1.X, e1.c));
  Ex2 e2;
  CHECK(verify_tangency(e2.f, e2.X, e2.c));

  // perturbing one entry breaks the exact identity
  PolyMatrix bad = e1.c;
  bad.at(0, 0) += Polynomial::constant(e1.c4, 1, QQ());
  CHECK_FALSE(verify_tangency(e1.f, e1.X, bad));
}

TEST_CASE("compute_cofactor on trivial germs") {
  Context c2 = ctx2();
  // f = (x), X = (x, y): phi*X = x = 1*f
  auto r = compute_cofactor({P("x", c2)}, {P("x", c2), P("y", c2)});
  CHECK(r.exact);
  CHECK(verify_tangency({P("x", c2)}, {P("x", c2), P("y", c2)}, r.c));
  CHECK(r.c.at(0, 0) == P("1", c2));

  // f = (x), X = (1, 0): phi*X = 1, a unit, not in (x)
  CHECK_THROWS_AS(compute_cofactor({P("x", c2)}, {P("1", c2), P("0", c2)}), Error);
}

TEST_CASE("compute_cofactor recovers a valid cofactor for the worked surface") {
  Ex1 e;
  auto r = compute_cofactor(e.f, e.X);
  CHECK(r.exact);
  CHECK(verify_tangency(e.f, e.X, r.c));
}

TEST_CASE("compute_cofactor falls back to a quotient representative") {
  // f = x^2 - x^3, X = x dx: phi*X = 2x^2 - 3x^3 = (2-3x)/(1-x) * f locally,
  // and no polynomial cofactor exists
  Context c2 = ctx2();
  std::vector<Polynomial> f{P("x^2-x^3", c2)};
  std::vector<Polynomial> X{P("x", c2), P("y", c2)};
  auto r = compute_cofactor(f, X);
  CHECK_FALSE(r.exact);
  // the representative matches (2-3x)/(1-x) = 2 - x - x^2 - ... modulo (x, y)
  QuotientAlgebra B = quotient_algebra(standard_basis(X, MonomialOrder::local()));
  Polynomial expect = B.reduce(P("2", c2));  // dim B = 1 here
  CHECK(B.reduce(r.c.at(0, 0)) == expect);
}

TEST_CASE("tau' of the worked examples and a smooth germ") {
  Ex1 e1;
  CHECK(tau_prime(e1.f) == 7);
  Ex2 e2;
  CHECK(tau_prime(e2.f) == 8);

  Context c2 = ctx2();
  CHECK(tau_prime({P("x", c2)}) == 0);  // I_1(phi) contains 1

  // x^2 y: not an isolated singularity
  CHECK_THROWS_AS(tau_prime({P("x^2*y", c2)}), Error);
}

TEST_CASE("tau' is invariant under invertible linear changes of the f tuple") {
  std::mt19937_64 rng(61);
  Ex1 e;
  std::uniform_int_distribution<int> cc(-3, 3);
  for (int it = 0; it < 5; ++it) {
    // random invertible 2x2 integer matrix A; f' = A f
    int a, b, c, d;
    do {
      a = cc(rng), b = cc(rng), c = cc(rng), d = cc(rng);
    } while (a * d - b * c == 0);
    std::vector<Polynomial> f2{
        e.f[0].scaled(Scalar::of_int(a, QQ())) + e.f[1].scaled(Scalar::of_int(b, QQ())),
        e.f[0].scaled(Scalar::of_int(c, QQ())) + e.f[1].scaled(Scalar::of_int(d, QQ()))};
    CHECK(tau_prime(f2) == 7);
  }
}
