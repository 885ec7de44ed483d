#include <gtest/gtest.h>

#include <random>

#include "prelie/lincomb.hpp"
#include "prelie/partition.hpp"
#include "prelie/permutation.hpp"
#include "prelie/poly.hpp"
#include "prelie/rational.hpp"

using namespace prelie;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(Rational(-2, 3)), "-2/3");
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, PowerConventions) {
  EXPECT_EQ(power(0, 0), 1);
  EXPECT_EQ(power(-1, -1), -1);
  EXPECT_EQ(power(-1, -2), 1);
  EXPECT_EQ(power(3, -2), Rational(1, 9));
  EXPECT_THROW(power(0, -1), std::domain_error);
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
}

TEST(Poly, ArithmeticAndPrinting) {
  const Poly s = Poly::s(), t = Poly::t();
  const Poly p = (s - t) * (s + t);
  EXPECT_EQ(p.coeff(2, 0), 1);
  EXPECT_EQ(p.coeff(0, 2), -1);
  EXPECT_EQ(p.coeff(1, 1), 0);
  EXPECT_EQ(Poly().to_string(), "0");
  EXPECT_EQ((Poly(1) - s).pow(2).to_string(), "1 - 2*s + s^2");
  EXPECT_EQ(p.substitute_t(1), s * s - Poly(1));
  EXPECT_EQ(p.adams(2).coeff(4, 0), 1);
  EXPECT_EQ((s * s * t + s).coeff_s(2), t);
}

TEST(Partition, Statistics) {
  const Partition l{2, 2, 1};
  EXPECT_EQ(l.size(), 5);
  EXPECT_EQ(l.multiplicity(2), 2);
  EXPECT_EQ(l.z(), 8);  // 2^2 * 2! * 1^1 * 1!
  EXPECT_EQ(Partition({1, 1, 1}).z(), 6);
  EXPECT_EQ(Partition({3}).z(), 3);
  // f_2([2,1]) = 1 + 2 = 3, f_4([4,2,1]) = 1 + 2 + 4
  EXPECT_EQ(Partition({2, 1}).fixed_points_of_power(2), 3);
  EXPECT_EQ(Partition({4, 2, 1}).fixed_points_of_power(4), 7);
  EXPECT_EQ(Partition({4, 2, 1}).fixed_points_of_power(3), 1);
  EXPECT_EQ(l.to_string(), "[2,2,1]");
  EXPECT_EQ(Partition({1, 2}), Partition({2, 1}));
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Partition, CountsAndOrder) {
  const int p_n[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), static_cast<std::size_t>(p_n[n]));
  const auto three = partitions_of(3);
  EXPECT_EQ(three[0], Partition({1, 1, 1}));
  EXPECT_EQ(three[2], Partition({3}));
}

TEST(Partition, ClassSizesSumToFactorial) {
  for (int n = 1; n <= 8; ++n) {
    Rational total = 0;
    for (const auto& l : partitions_of(n)) total += Rational(factorial(n)) / Rational(l.z());
    EXPECT_EQ(total, Rational(factorial(n)));
  }
}

TEST(Partition, FixedPointsMatchPermutationPowers) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      const Permutation sigma = Permutation::of_cycle_type(l);
      Permutation power = Permutation::identity(n);
      for (int k = 1; k <= 6; ++k) {
        power = sigma * power;
        int fixed = 0;
        for (int i = 1; i <= n; ++i) fixed += power(i) == i;
        EXPECT_EQ(l.fixed_points_of_power(k), fixed) << l.to_string() << " k=" << k;
      }
    }
}

TEST(Permutation, Basics) {
  const auto c = Permutation::from_cycles(4, {{1, 2, 3}});
  EXPECT_EQ(c(1), 2);
  EXPECT_EQ(c(3), 1);
  EXPECT_EQ(c(4), 4);
  EXPECT_EQ(c.cycle_type(), Partition({3, 1}));
  EXPECT_EQ(c.sign(), 1);
  EXPECT_EQ(Permutation::from_cycles(3, {{1, 2}}).sign(), -1);
  EXPECT_EQ(c * c.inverse(), Permutation::identity(4));
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_EQ(sorting_sign(std::vector<int>{3, 1, 2}), 1);
  EXPECT_EQ(sorting_sign(std::vector<int>{2, 1, 3}), -1);
}

TEST(Permutation, SignIsMultiplicative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> a(6), b(6);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation pa(a), pb(b);
    EXPECT_EQ((pa * pb).sign(), pa.sign() * pb.sign());
    EXPECT_EQ(pa.sign(), sorting_sign(a));
  }
}

TEST(LinComb, DropsZerosAndPrints) {
  LinComb<int> a;
  a.add(1, Rational(1, 2));
  a.add(2, -1);
  a.add(1, Rational(-1, 2));
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.coeff(2), -1);
  EXPECT_TRUE((a - a).is_zero());
}
