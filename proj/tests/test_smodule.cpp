#include <gtest/gtest.h>

#include "prelie/smodule.hpp"

using namespace prelie;

namespace {

SymF sf(const char* text, int n) { return parse_symf(text, n); }

Rational dimension(const SymF& f, int n) {
  return Rational(factorial(static_cast<unsigned>(n))) * f.coeff(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

}  // namespace

TEST(SModule, ClassicalCycleIndices) {
  EXPECT_EQ(zS(2).homogeneous(2), sf("1/2*p[1,1] + 1/2*p[2]", 2));
  EXPECT_EQ(zT(3).homogeneous(3), sf("p[1,1,1]", 3));
  const SymFT l2 = zLambda(2).homogeneous(2);
  EXPECT_EQ(l2.coeff(Partition({2})).substitute_t(1).as_rational(), Rational(-1, 2));
  EXPECT_EQ(l2.coeff(Partition({1, 1})), Poly::t().pow(2) * Poly(Rational(1, 2)));
  EXPECT_EQ(zLambda(1).coeff(Partition({1})), Poly(-1) * Poly::t());
}

TEST(SModule, LieCycleIndex) {
  EXPECT_EQ(zLie(1), sf("p[1]", 1));
  EXPECT_EQ(zLie(2).homogeneous(2), sf("1/2*p[1,1] - 1/2*p[2]", 2));
  const Series2 e = eg_series(zLie(8), 8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(e[n], Poly(Rational(factorial(static_cast<unsigned>(n - 1)))));
  EXPECT_TRUE(pbw_check(8).ok);
}

TEST(SModule, TreeCycleIndexFrozen) {
  EXPECT_EQ(zW(1), sf("p[1]", 1));
  EXPECT_EQ(zW(2).homogeneous(2), sf("p[1,1]", 2));
  EXPECT_EQ(zW(3).homogeneous(3), sf("3/2*p[1,1,1] + 1/2*p[2,1]", 3));
  EXPECT_THROW(zW(9), std::invalid_argument);
}

TEST(SModule, TreeCycleIndexMatchesBurnside) {
  EXPECT_EQ(zW(7), zW_burnside(7));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(dimension(zW(8), n), power(Rational(n), n - 1));
}

TEST(SModule, ZXFrozen) {
  EXPECT_EQ(zX_formula(1), sf("p[1]", 1));
  EXPECT_EQ(zX_formula(2).homogeneous(2), sf("1/2*p[1,1] + 1/2*p[2]", 2));
  EXPECT_EQ(zX_formula(3).homogeneous(3), sf("2/3*p[1,1,1] + 1/3*p[3]", 3));
  EXPECT_EQ(zX_from_inversion(1), sf("p[1]", 1));
}

TEST(SModule, ZXProvenancesAgree) {
  EXPECT_EQ(zX_formula(7), zX_from_inversion(7));
  const Series2 e = eg_series(zX_from_inversion(5), 5);
  const long dims[] = {0, 1, 1, 4, 27, 256};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(e[n], Poly(dims[n]));
}

TEST(SModule, ZWhatFrozen) {
  EXPECT_EQ(zWhat(2).homogeneous(2), sf("1/2*p[1,1] - 1/2*p[2]", 2));
  const SymF z = zWhat(8);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(dimension(z, n), power(Rational(n - 1), n - 2)) << n;
  // Partitions with exactly one fixed point never appear.
  for (const auto& [l, c] : z.terms()) EXPECT_NE(l.multiplicity(1), 1) << l.to_string();
}

TEST(SModule, SummandConventions) {
  // λ = (2,1): f_2 = 3 = 2·1 + 1, so the k = 2 factor is 2 - 2 = 0.
  EXPECT_EQ(Partition({2, 1}).fixed_points_of_power(2), 3);
  EXPECT_EQ(zX_summand(Partition({2, 1})), 0);
  EXPECT_EQ(zX_summand(Partition({1})), 1);
  // λ = (2): (λ1 - 1)^(λ1 - 1) = (-1)^(-1) = -1 and the k = 2 factor is 1 - 2.
  EXPECT_EQ(zX_summand(Partition({2})), 1);
  for (int n = 2; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      if (l.multiplicity(1) == 1) {
        EXPECT_EQ(zX_summand(l), 0) << l.to_string();
      }
    }
}

TEST(SModule, LambdaW) {
  const SymFT z = zLambdaW(4);
  EXPECT_EQ(z.coeff(Partition{}), Poly(1));
  EXPECT_EQ(z.coeff(Partition({1})), Poly(-1) * Poly::t());
  EXPECT_TRUE(lambda_w_formula_check(6).ok);
  EXPECT_TRUE(lambda_w_specialization_check(7, zX_formula(7)).ok);
}

TEST(SModule, TheoremChecks) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_TRUE(theorem_reflection_check(n).ok) << n;
    EXPECT_TRUE(main_theorem_check(n).ok) << n;
  }
  EXPECT_THROW(main_theorem_check(8), std::invalid_argument);
}

TEST(SModule, ReflectionDegreeTwoByHand) {
  // Both sides equal (p1^2 + p2)/2 in degree 2.
  const SymF lhs = (zX_formula(2) - SymF::p(1, 2)).homogeneous(2);
  const SymF rhs = p1_partial_operator(zWhat(2)).homogeneous(2);
  EXPECT_EQ(lhs, sf("1/2*p[1,1] + 1/2*p[2]", 2));
  EXPECT_EQ(rhs, lhs);
}

TEST(SModule, MainTheoremDegreeTwoByHand) {
  const SymF lhs = plethysm(zLie(2), zX_formula(2), 2).homogeneous(2);
  EXPECT_EQ(lhs, sf("p[1,1]", 2));
}

TEST(SModule, TamperedInputIsReported) {
  SymF zx = zX_formula(5);
  zx.add(Partition({3, 1}), Rational(1, 7));
  const CheckReport r = main_theorem_check(5, zx);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.first_discrepancy->degree, 4);
  EXPECT_EQ(r.first_discrepancy->partition, (std::vector<int>{3, 1}));
  const auto j = to_json(r);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["first_discrepancy"]["degree"], 4);
  EXPECT_TRUE(to_json(main_theorem_check(3))["first_discrepancy"].is_null());
}

TEST(SModule, SchurPositivity) {
  for (int n = 1; n <= 7; ++n)
    for (const SymF& f : {zW(7), zX_formula(7), zWhat(7)})
      for (const auto& [mu, m] : schur_decompose(f, n)) {
        EXPECT_GE(m, 0);
        EXPECT_EQ(m.get_den(), 1);
      }
}

TEST(SModule, Tables) {
  const CycleIndexTable a = make_table("zw", 5), b = make_table("zw_burnside", 5);
  EXPECT_EQ(a.value, b.value);
  EXPECT_NE(a.provenance, b.provenance);
  EXPECT_THROW(make_table("nope", 3), std::invalid_argument);
}
