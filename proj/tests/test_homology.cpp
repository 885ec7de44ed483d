#include <gtest/gtest.h>

#include <random>

#include "prelie/homology.hpp"
#include "prelie/series.hpp"
#include "prelie/smodule.hpp"

using namespace prelie;

namespace {

ChainElt elt(const char* forest, const char* wedge) { return ChainElt(parse_forest(forest), parse_forest(wedge)); }

ChainLinComb apply_perm(const Permutation& sigma, const ChainLinComb& a) {
  ChainLinComb out;
  for (const auto& [e, c] : a) {
    const auto [image, sign] = prelie::apply_perm(sigma, e);
    out.add(image, c * sign);
  }
  return out;
}

// Number of rooted forests on n labels with k components: C(n-1,k-1) n^(n-k).
Integer forests_with_components(int n, int k) {
  return binomial(n - 1, k - 1) * Integer(power(Rational(n), n - k).get_num());
}

const ChainElt& random_element(const Bicomplex& b, std::mt19937& rng) {
  for (;;) {
    const int p = static_cast<int>(rng() % (b.n() + 1));
    const int q = static_cast<int>(rng() % (b.n() + 1 - p));
    const ChainSpace& s = b.space(p, q);
    if (s.size() > 0) return s.basis()[rng() % s.size()];
  }
}

}  // namespace

TEST(Homology, ChainSpaceExamples) {
  EXPECT_EQ(build_chain_space(1, 1, 0).size(), 1);
  EXPECT_EQ(build_chain_space(1, 0, 1).size(), 1);
  EXPECT_EQ(build_chain_space(2, 0, 1).size(), 2);
  EXPECT_EQ(build_chain_space(2, 0, 2).size(), 1);
  EXPECT_EQ(build_chain_space(2, 0, 2).basis()[0], elt("{}", "{1;2}"));
  EXPECT_EQ(build_chain_space(3, 2, 2).size(), 0);
}

TEST(Homology, ChainSpaceDimensionsMatchForestCountsAndSeries) {
  for (int n = 1; n <= 6; ++n) {
    const Bicomplex b(n);
    const Series2 e = exp_series((Poly::s() - Poly::t()) * fW(n));
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) {
        const int k = p + q;
        const Integer want = k == 0 ? Integer(0) : binomial(k, q) * forests_with_components(n, k);
        EXPECT_EQ(b.space(p, q).size(), want.get_si()) << n << "," << p << "," << q;
        const Rational from_series = e[n].coeff(p, q) * Rational(q % 2 ? -1 : 1);
        EXPECT_EQ(Rational(b.space(p, q).size()), from_series);
      }
  }
}

TEST(Homology, ElementFormat) {
  const ChainElt e = elt("{1(2)}", "{3;4(5)}");
  EXPECT_EQ(e.to_string(), "{1(2)}|3^4(5)");
  EXPECT_EQ(e.grading(), (Grading{5, 1, 2}));
  EXPECT_THROW(elt("{1}", "{1}"), std::invalid_argument);
}

TEST(Homology, OrientationSign) {
  const auto [e, sign] = ChainElt::from_ordered(Forest(), {parse_tree("2"), parse_tree("1")});
  EXPECT_EQ(e, elt("{}", "{1;2}"));
  EXPECT_EQ(sign, -1);
}

TEST(Homology, DifferentialExamples) {
  ChainLinComb want;
  // (i, j) = (1, 2) carries (-1)^(i+j), so the bracket enters with a minus.
  want.add(elt("{}", "{1(2)}"), -1);
  want.add(elt("{}", "{2(1)}"), 1);
  EXPECT_EQ(d_pl(elt("{}", "{1;2}")), want);
  EXPECT_EQ(d_pl(elt("{1}", "{2}")), ChainLinComb(elt("{1(2)}", "{}")));
  EXPECT_EQ(d_k(elt("{}", "{1}")), ChainLinComb(elt("{1}", "{}")));
  ChainLinComb k2;
  k2.add(elt("{1}", "{2}"), 1);
  k2.add(elt("{2}", "{1}"), -1);
  EXPECT_EQ(d_k(elt("{}", "{1;2}")), k2);
  EXPECT_TRUE(d_pl(elt("{1;2}", "{}")).is_zero());
}

TEST(Homology, SquaresVanishOnRandomElements) {
  std::mt19937 rng(41);
  for (int n = 2; n <= 5; ++n) {
    const Bicomplex b(n);
    for (int i = 0; i < 200; ++i) {
      const ChainElt& e = random_element(b, rng);
      EXPECT_TRUE(apply_linear(d_pl(e), d_pl).is_zero()) << e.to_string();
      EXPECT_TRUE(apply_linear(d_k(e), d_k).is_zero()) << e.to_string();
      EXPECT_TRUE(apply_linear(d_total(e), d_total).is_zero()) << e.to_string();
    }
  }
}

TEST(Homology, DifferentialsAreEquivariant) {
  std::mt19937 rng(42);
  const Bicomplex b(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<int> img(5);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation sigma(img);
    const ChainElt& e = random_element(b, rng);
    const auto [image, sign] = prelie::apply_perm(sigma, e);
    EXPECT_EQ(Rational(sign) * d_pl(image), apply_perm(sigma, d_pl(e)));
    EXPECT_EQ(Rational(sign) * d_k(image), apply_perm(sigma, d_k(e)));
  }
}

TEST(Homology, MatrixExamples) {
  const Bicomplex b1(1), b2(2);
  const SparseMatQ k = assemble_matrix(b1, 0, 1, Differential::k);
  EXPECT_EQ(k.dump(), "1 1 1\n0 0 1\n");
  const SparseMatQ pl = assemble_matrix(b2, 0, 2, Differential::pl);
  EXPECT_EQ(pl.dump(), "2 1 2\n0 0 -1\n1 0 1\n");
  EXPECT_EQ(rank(pl), 1);
  const SparseMatQ empty = assemble_matrix(b2, 1, 2, Differential::pl);
  EXPECT_EQ(empty.cols(), 0);
  const SparseMatQ total = assemble_matrix(b2, 0, 2, Differential::total);
  EXPECT_EQ(total.rows(), 2 + 2);
}

TEST(Homology, BicomplexAxioms) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(bicomplex_axioms(Bicomplex(n)), "") << n;
}

TEST(Homology, RowHomologyFrozen) {
  EXPECT_EQ(row_homology(2, 0).dims_by_q, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(row_homology(2, 0).concentration(), 1);
  EXPECT_EQ(row_homology(4, 2).dims_by_q, (std::vector<int>{18, 0, 0}));
  EXPECT_EQ(row_homology(4, 3).dims_by_q, (std::vector<int>{8, 0}));
  EXPECT_EQ(row_homology(4, 4).dims_by_q, (std::vector<int>{1}));
  EXPECT_EQ(row_homology(3, 1).concentration(), -1);
  EXPECT_THROW(row_homology(7, 1), std::invalid_argument);
}

TEST(Homology, RowsAgreeWithDimensionFormulas) {
  for (int n = 1; n <= 5; ++n) {
    const Bicomplex b(n);
    long bottom = 0, sum = 0;
    for (int p = 0; p <= n; ++p) {
      const RowHomology r = row_homology(b, p, RankMode::exact);
      long euler = 0;
      long chain_euler = 0;
      for (int q = 0; q < static_cast<int>(r.dims_by_q.size()); ++q) {
        euler += (q % 2 ? -1 : 1) * r.dims_by_q[q];
        chain_euler += (q % 2 ? -1 : 1) * b.space(p, q).size();
      }
      EXPECT_EQ(euler, chain_euler);
      EXPECT_EQ(Rational(euler), euler_row_prediction(n, p));
      if (p == 0 && n >= 2) {
        EXPECT_EQ(r.concentration(), 1);
        bottom = r.dims_by_q[1];
      } else if (p >= 1 && expected_row_dimension(n, p) != 0) {
        EXPECT_EQ(r.concentration(), 0);
      }
      if (p >= 1) sum += r.dims_by_q[0];
    }
    if (n >= 2) {
      EXPECT_EQ(bottom, sum);
    }
  }
}

TEST(Homology, CertifiedModeAgreesWithExact) {
  for (int n = 1; n <= 5; ++n) {
    const Bicomplex b(n);
    for (int p = 0; p <= n; ++p) {
      EXPECT_EQ(row_homology(b, p, RankMode::certified).dims_by_q, row_homology(b, p, RankMode::exact).dims_by_q);
    }
    EXPECT_EQ(total_homology(b, RankMode::certified), total_homology(b, RankMode::exact));
  }
}

TEST(Homology, KoszulColumnsAndTotalComplexAreAcyclic) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(column_homology_k(n).acyclic()) << n;
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(total_acyclicity(n)) << n;
  EXPECT_THROW(total_acyclicity(6), std::invalid_argument);
}

TEST(Homology, TableJson) {
  const HomologyTable t = homology_table(2);
  EXPECT_EQ(t.to_json().dump(), R"({"n":2,"rows":[{"p":0,"dims_by_q":[0,1,0]},{"p":1,"dims_by_q":[0,0]},{"p":2,"dims_by_q":[1]}]})");
}

TEST(Homology, EquivariantEulerCharacteristic) {
  const EquivariantEuler e2 = equivariant_euler_bottom(2);
  EXPECT_EQ(e2.chi(Partition({1, 1})), 1);
  EXPECT_EQ(e2.chi(Partition({2})), 1);
  const EquivariantEuler e3 = equivariant_euler_bottom(3);
  EXPECT_EQ(e3.chi(Partition({1, 1, 1})), 4);
  EXPECT_EQ(e3.chi(Partition({2, 1})), 0);
  EXPECT_EQ(e3.chi(Partition({3})), 1);
  for (int n = 1; n <= 5; ++n) {
    const EquivariantEuler e = equivariant_euler_bottom(n);
    EXPECT_EQ(e.normalization, -1) << n;
    EXPECT_EQ(e.chi.dimension(), power(Rational(n - 1), n - 1));
    EXPECT_EQ(characteristic(e.chi, n), zX_formula(n).homogeneous(n));
  }
}
