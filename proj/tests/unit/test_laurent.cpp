#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "pentagram/laurent.hpp"

using namespace pentagram;

namespace {

LaurentPoly random_laurent(oracle::Gen& g) {
  LaurentPoly p;
  const int terms = static_cast<int>(g.integer(0, 4));
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(g.rational(6), static_cast<int>(g.integer(-4, 4)));
  return p;
}

Poly random_poly(oracle::Gen& g, int max_degree) {
  std::vector<Scalar> c;
  const int deg = static_cast<int>(g.integer(0, max_degree));
  for (int i = 0; i <= deg; ++i) c.push_back(g.integer(0, 2) == 0 ? Scalar(0) : g.rational(5));
  return Poly(c);
}

const std::vector<Scalar> kPoints{Scalar(1, 2), Scalar(-3), Scalar(7, 5), Scalar(2)};

}  // namespace

TEST(Laurent, EvaluationIsARingMap) {
  oracle::Gen g(41);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_laurent(g), b = random_laurent(g);
    for (const auto& x : kPoints) {
      EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
      EXPECT_EQ((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x));
      EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
      EXPECT_EQ(a.shifted(3).evaluate(x), a.evaluate(x) * x * x * x);
    }
  }
}

TEST(Laurent, NoZeroCoefficientIsStored) {
  const LaurentPoly a = LaurentPoly::monomial(2, 3) + LaurentPoly::lambda(-1);
  const LaurentPoly z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_TRUE(LaurentPoly::monomial(0, 5).is_zero());
  EXPECT_EQ(a.min_exponent(), -1);
  EXPECT_EQ(a.max_exponent(), 3);
  EXPECT_THROW(z.min_exponent(), std::logic_error);
}

TEST(Laurent, MonomialInverse) {
  const LaurentPoly m = LaurentPoly::monomial(Scalar(-2, 3), 4);
  EXPECT_EQ(m * m.monomial_inverse(), LaurentPoly(1));
  EXPECT_EQ(code_of([] { (LaurentPoly(1) + LaurentPoly::lambda()).monomial_inverse(); }), ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([] { LaurentPoly().monomial_inverse(); }), ErrorCode::kDivisionByZero);
}

TEST(Poly, DivisionIdentity) {
  oracle::Gen g(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(g, 6), b = random_poly(g, 3);
    if (b.is_zero()) {
      EXPECT_EQ(code_of([&] { divmod(a, b); }), ErrorCode::kDivisionByZero);
      continue;
    }
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_EQ(divexact(a * b, b), a);
  }
  EXPECT_THROW(divexact(Poly(std::vector<Scalar>{1, 0, 1}), Poly(std::vector<Scalar>{1, 1})), std::logic_error);
}

TEST(Poly, GcdDividesBothAndIsMonic) {
  oracle::Gen g(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly common = random_poly(g, 2);
    const Poly a = random_poly(g, 3) * common, b = random_poly(g, 3) * common;
    const Poly h = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      EXPECT_TRUE(h.is_zero());
      continue;
    }
    EXPECT_EQ(h.leading(), 1);
    EXPECT_TRUE(divmod(a, h).second.is_zero());
    EXPECT_TRUE(divmod(b, h).second.is_zero());
    if (!common.is_zero()) EXPECT_TRUE(divmod(h, common.monic()).second.is_zero());
  }
}

TEST(Poly, DerivativeAndOrder) {
  const Poly p(std::vector<Scalar>{0, 0, 3, 0, 5});  // 3x^2 + 5x^4
  EXPECT_EQ(p.derivative(), Poly(std::vector<Scalar>{0, 6, 0, 20}));
  EXPECT_EQ(p.order_at_zero(), 2);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_EQ(p.evaluate(2), 92);
  EXPECT_EQ(Poly(std::vector<Scalar>{1, 0, 0}).degree(), 0);
}

TEST(Bivariate, KeyedByKAndLambda) {
  const LaurentBivariate r({LaurentPoly::lambda(-2), LaurentPoly(0), LaurentPoly::monomial(3, 1) + LaurentPoly(1)});
  EXPECT_EQ(r.k_degree(), 2);
  EXPECT_EQ(r.coeff(2, 1), 3);
  EXPECT_EQ(r.coeff(1, 0), 0);
  EXPECT_EQ(r.evaluate(2, Scalar(1, 2)), Scalar(4) + 4 * (Scalar(3, 2) + 1));
  const LaurentBivariate dr = r.k_derivative();
  EXPECT_EQ(dr.k_degree(), 1);
  EXPECT_EQ(dr.coeff(1, 1), 6);
  EXPECT_EQ(dr.coeff(0, 0), 0);
  EXPECT_EQ(LaurentBivariate(r.by_k()), r);
}
