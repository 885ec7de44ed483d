#include <gtest/gtest.h>

#include "prelie/series.hpp"
#include "prelie/smodule.hpp"

using namespace prelie;

TEST(Series, Generators) {
  const Series2 w = fW(6), x = fX(6);
  EXPECT_EQ(w[1], Poly(1));
  EXPECT_EQ(w[4], Poly(64));
  EXPECT_EQ(x[1], Poly(1));
  EXPECT_EQ(x[3], Poly(4));
  EXPECT_EQ(x[5], Poly(256));
  EXPECT_EQ(w[0], Poly());
}

TEST(Series, ExpLogInverse) {
  const Series2 w = fW(8);
  EXPECT_EQ(log_series(exp_series(w)), w);
  EXPECT_EQ(exp_series(Series2(5)), Series2::constant(Poly(1), 5));
  EXPECT_EQ(exp_series(-w), Series2::constant(Poly(1), 8) - fX(8));
  EXPECT_THROW(exp_series(Series2::constant(Poly(1), 3)), std::invalid_argument);
}

TEST(Series, ExpOfXByHand) {
  // e^x = sum x^n/n!, so every stored coefficient is 1.
  const Series2 e = exp_series(Series2::x(6));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(e[n], Poly(1));
}

TEST(Series, ProductIsBinomialConvolution) {
  // (x)(x) = x^2 = 2 * x^2/2!
  const Series2 sq = Series2::x(4) * Series2::x(4);
  EXPECT_EQ(sq[2], Poly(2));
  EXPECT_EQ(sq[3], Poly());
}

TEST(Series, BicomplexIdentityLowOrder) {
  const Poly st = Poly::s() - Poly::t();
  const Series2 lhs = exp_series(st * fW(4));
  EXPECT_EQ(lhs[1], st);
  EXPECT_EQ(lhs[2], st * (Poly(2) + st));
  EXPECT_TRUE(bicomplex_series_identity(10).ok);
}

TEST(Series, BicomplexIdentityAtOneOneIsTrivial) {
  const Series2 e = exp_series((Poly::s() - Poly::t()) * fW(8)).substitute_s(1).substitute_t(1);
  EXPECT_EQ(e, Series2::constant(Poly(1), 8));
}

TEST(Series, EulerSeries) {
  EXPECT_TRUE(euler_characteristic_series(12).ok);
  const Series2 e = exp_series((Poly::s() - Poly(1)) * fW(4));
  EXPECT_EQ(e[1], Poly::s() - Poly(1));
  EXPECT_EQ(e[4].coeff_s(2), Poly(18));
  EXPECT_EQ(e[4].coeff_s(0), Poly(-27));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(euler_row_prediction(n, 0), -power(Rational(n - 1), n - 1));
  EXPECT_EQ(euler_row_prediction(4, 2), 18);
  EXPECT_EQ(euler_row_prediction(4, 3), 8);
  EXPECT_EQ(euler_row_prediction(4, 4), 1);
}

TEST(Series, SpecializationOrderCommutes) {
  const Series2 e = exp_series((Poly::s() - Poly::t()) * fW(7));
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(e.substitute_t(1).coeff_s(k), e.coeff_s(k).substitute_t(1));
}

TEST(Series, Cayley) {
  for (int n = 1; n <= 15; ++n) EXPECT_TRUE(cayley_identity_check(n)) << n;
  EXPECT_THROW(cayley_identity_check(16), std::invalid_argument);
  // n = 4: 27 = 0 + 18 + 8 + 1
  Rational sum = 0;
  for (int p = 1; p <= 4; ++p) sum += euler_row_prediction(4, p);
  EXPECT_EQ(sum, 27);
}

TEST(Series, FreenessAndLambert) {
  EXPECT_TRUE(freeness_series_check(15).ok);
  EXPECT_TRUE(lambert_functional_equation_check(15).ok);
  const Series2 w = fW(10);
  EXPECT_EQ(-log_series(Series2::constant(Poly(1), 10) - fX(10)), w);
}

TEST(Series, FailureNamesDegree) {
  CheckReport r{"probe", 3};
  Series2 a = fW(3), b = fW(3);
  b[2] = Poly(3);
  compare_series(r, a, b, 3);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.first_discrepancy->degree, 2);
  EXPECT_EQ(r.first_discrepancy->lhs, "2");
}

TEST(Series, EgfOfCycleIndices) {
  EXPECT_EQ(eg_series(zW(7), 7), fW(7));
  EXPECT_EQ(eg_series(zX_formula(7), 7), fX(7));
}

TEST(Series, PrintFormat) {
  EXPECT_EQ(fX(3).to_string(), "0: 0\n1: 1\n2: 1\n3: 4\n");
  const auto j = fW(2).to_json();
  EXPECT_EQ(j["coefficients"][2]["coeff"], "2");
}
