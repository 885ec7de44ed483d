#ifndef PRELIE_VERIFY_HPP
#define PRELIE_VERIFY_HPP

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "prelie/homology.hpp"
#include "prelie/report.hpp"
#include "prelie/series.hpp"
#include "prelie/smodule.hpp"
#include "prelie/trees.hpp"

namespace prelie {

inline constexpr const char* kSuiteVersion = "1.0";

struct VerifyOptions {
  std::string profile = "quick";
  int max_n = 4;
  int max_degree = 5;
  bool unsafe = false;  // lift the profile caps
  bool tamper = false;  // flip one Z_X coefficient; every dependent check must fail
  unsigned seed = 20240601;
  int random_instances = 500;

  static VerifyOptions for_profile(const std::string& name) {
    VerifyOptions o;
    o.profile = name;
    if (name == "quick") {
      o.max_n = 4;
      o.max_degree = 5;
    } else if (name == "full") {
      o.max_n = 6;
      o.max_degree = 7;
    } else {
      throw std::invalid_argument("unknown profile: " + name + " (expected quick or full)");
    }
    return o;
  }

  /// Throws std::invalid_argument when a bound exceeds what the profile allows.
  void validate() const {
    const VerifyOptions caps = for_profile(profile);
    if (max_n < 1 || max_degree < 1) throw std::invalid_argument("max_n and degree must be positive");
    if (!unsafe && max_n > caps.max_n)
      throw std::invalid_argument("max_n " + std::to_string(max_n) + " exceeds the " + profile + " cap of " +
                                  std::to_string(caps.max_n) + " (use --unsafe-max)");
    if (!unsafe && max_degree > caps.max_degree)
      throw std::invalid_argument("degree " + std::to_string(max_degree) + " exceeds the " + profile +
                                  " cap of " + std::to_string(caps.max_degree) + " (use --unsafe-max)");
    if (max_n > 6) throw std::invalid_argument("max_n is limited to 6 by the bicomplex engine");
    if (max_degree > 7) throw std::invalid_argument("degree is limited to 7 by the plethysm engine");
  }

  int tree_max() const { return profile == "full" ? 8 : 6; }
};

struct CheckRecord {
  std::string name;
  nlohmann::ordered_json parameters;
  CheckReport report;
  long elapsed_ms = 0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckRecord> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.report.ok; });
  }

  const CheckRecord* first_failure() const {
    for (const auto& c : checks)
      if (!c.report.ok) return &c;
    return nullptr;
  }

  nlohmann::ordered_json to_json(bool timing = false) const {
    nlohmann::ordered_json j;
    j["suite_version"] = kSuiteVersion;
    j["profile"] = options.profile;
    j["max_n"] = options.max_n;
    j["max_degree"] = options.max_degree;
    j["status"] = ok() ? "ok" : "fail";
    auto& cs = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["parameters"] = c.parameters;
      e["status"] = c.report.ok ? "ok" : "fail";
      e["details"] = c.report.details;
      e["first_discrepancy"] =
          c.report.first_discrepancy ? prelie::to_json(*c.report.first_discrepancy) : nlohmann::ordered_json(nullptr);
      if (timing) e["elapsed_ms"] = c.elapsed_ms;
      cs.push_back(std::move(e));
    }
    return j;
  }

  std::string to_text(bool timing = false) const {
    std::string s;
    for (const auto& c : checks) {
      s += (c.report.ok ? "PASS " : "FAIL ") + c.name;
      if (timing) s += " (" + std::to_string(c.elapsed_ms) + " ms)";
      if (!c.report.details.empty()) s += ": " + c.report.details;
      if (const auto& d = c.report.first_discrepancy) {
        std::string part;
        for (std::size_t i = 0; i < d->partition.size(); ++i) part += (i ? "," : "") + std::to_string(d->partition[i]);
        s += " [degree " + std::to_string(d->degree) + ", partition [" + part + "], lhs " + d->lhs + ", rhs " + d->rhs +
             "]";
      }
      s += '\n';
    }
    s += ok() ? "all checks passed\n" : "verification FAILED\n";
    return s;
  }
};

namespace detail {

inline void absorb(CheckReport& into, const CheckReport& sub) {
  if (sub.ok || !into.ok) return;
  into.ok = false;
  into.first_discrepancy = sub.first_discrepancy;
  into.details = sub.check + (sub.details.empty() ? "" : ": " + sub.details);
}

/// Bicomplexes shared between checks of one run.
class BicomplexCache {
 public:
  const Bicomplex& get(int n) {
    auto& slot = cache_[n];
    if (!slot) slot = std::make_unique<Bicomplex>(n);
    return *slot;
  }

 private:
  std::map<int, std::unique_ptr<Bicomplex>> cache_;
};

inline SymF tampered(SymF zx) {
  zx.add(Partition({2, 1}), 1);
  return zx;
}

/// Random split of {1..m} into `parts` nonempty blocks.
template <class Rng>
std::vector<LabelMask> random_blocks(int m, int parts, Rng& rng) {
  std::vector<Label> ls(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) ls[i] = i + 1;
  std::shuffle(ls.begin(), ls.end(), rng);
  std::vector<int> cuts(static_cast<std::size_t>(m - 1));
  for (int i = 0; i < m - 1; ++i) cuts[i] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(m);
  std::vector<LabelMask> out;
  int start = 0;
  for (int c : cuts) {
    LabelMask mask = 0;
    for (int i = start; i < c; ++i) mask |= label_bit(ls[i]);
    out.push_back(mask);
    start = c;
  }
  return out;
}

template <class Rng>
Forest random_forest(LabelMask labels, Rng& rng) {
  const int m = popcount(labels);
  if (m == 0) return Forest();
  std::uniform_int_distribution<int> k_dist(1, m);
  const auto ls = labels_of(labels);
  std::vector<Label> shuffled(ls.begin(), ls.end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const int k = k_dist(rng);
  Forest f;
  for (int b = 0; b < k; ++b) {
    LabelMask block = 0;
    for (int i = b; i < m; i += k) block |= label_bit(shuffled[i]);
    f = f | random_tree(block, rng).as_forest();
  }
  return f;
}

/// F ◁ t computed componentwise: F·t plus t grafted inside one component.
inline ForestLinComb forest_action_by_components(const Forest& f, const RootedTree& t) {
  ForestLinComb out(f | t.as_forest());
  const auto comps = f.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    ForestLinComb rest(Forest{});
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i) rest = forest_product(rest, ForestLinComb(comps[j].as_forest()));
    ForestLinComb grafted;
    for (const auto& [g, c] : graft(comps[i], t)) grafted.add(g.as_forest(), c);
    out += forest_product(rest, grafted);
  }
  return out;
}

inline std::vector<int> block_sizes(const std::vector<LabelMask>& blocks) {
  std::vector<int> out;
  for (LabelMask b : blocks) out.push_back(popcount(b));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Acceptance checks

inline CheckReport check_tree_counts(int max_n) {
  CheckReport r{"A01_tree_counts", max_n};
  for (int n = 1; n <= max_n; ++n) {
    const auto trees = enumerate_trees(first_labels(n));
    const long want = to_long(power(Rational(n), n - 1));
    const bool distinct = std::adjacent_find(trees.begin(), trees.end()) == trees.end();
    if (static_cast<long>(trees.size()) != want || !distinct) {
      r.fail({n, {}, std::to_string(trees.size()) + (distinct ? "" : " (with repeats)"), std::to_string(want)});
      return r;
    }
  }
  r.details = "n^(n-1) trees for n = 1.." + std::to_string(max_n);
  return r;
}

inline CheckReport check_algebraic_axioms(int instances, unsigned seed) {
  CheckReport r{"A02_algebraic_axioms", 7};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size3(3, 7), size2(2, 7);
  auto single = [](const RootedTree& t) { return TreeLinComb(t); };
  auto fail = [&](const std::string& law, const std::vector<LabelMask>& blocks, const auto& lhs, const auto& rhs) {
    r.fail({popcount(blocks[0] | blocks[1] | (blocks.size() > 2 ? blocks[2] : 0)), detail::block_sizes(blocks),
            lhs.to_string(), rhs.to_string()});
    r.details = law + " violated";
  };
  for (int i = 0; i < instances && r.ok; ++i) {
    const auto blocks = detail::random_blocks(size3(rng), 3, rng);
    const auto x = single(random_tree(blocks[0], rng));
    const auto y = single(random_tree(blocks[1], rng));
    const auto z = single(random_tree(blocks[2], rng));
    const auto lhs = graft(graft(x, y), z) - graft(x, graft(y, z));
    const auto rhs = graft(graft(x, z), y) - graft(x, graft(z, y));
    if (!(lhs == rhs)) fail("pre-Lie identity", blocks, lhs, rhs);
  }
  for (int i = 0; i < instances && r.ok; ++i) {
    const auto blocks = detail::random_blocks(size3(rng), 3, rng);
    const auto x = single(random_tree(blocks[0], rng));
    const auto y = single(random_tree(blocks[1], rng));
    const auto z = single(random_tree(blocks[2], rng));
    const auto jac = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
    if (!jac.is_zero()) fail("Jacobi identity", blocks, jac, TreeLinComb());
  }
  for (int i = 0; i < instances && r.ok; ++i) {
    const auto blocks = detail::random_blocks(size2(rng), 2, rng);
    const Forest f = detail::random_forest(blocks[0], rng);
    const RootedTree t = random_tree(blocks[1], rng);
    const auto lhs = forest_act_total(f, t);
    const auto rhs = detail::forest_action_by_components(f, t);
    if (!(lhs == rhs)) fail("decomposition of the forest action", blocks, lhs, rhs);
  }
  for (int i = 0; i < instances && r.ok; ++i) {
    const auto blocks = detail::random_blocks(size3(rng), 3, rng);
    const ForestLinComb f(detail::random_forest(blocks[0], rng));
    const auto s = single(random_tree(blocks[1], rng));
    const auto t = single(random_tree(blocks[2], rng));
    const auto lhs = forest_act_total(f, bracket(s, t));
    const auto rhs = forest_act_total(forest_act_total(f, s), t) - forest_act_total(forest_act_total(f, t), s);
    if (!(lhs == rhs)) fail("right Lie-module law", blocks, lhs, rhs);
  }
  if (r.ok)
    r.details = std::to_string(instances) + " random instances per law (pre-Lie, Jacobi, decomposition, module law)";
  return r;
}

inline CheckReport check_homology(int max_n, detail::BicomplexCache& cache) {
  CheckReport r{"A03_homology", max_n};
  for (int n = 1; n <= max_n && r.ok; ++n) {
    const Bicomplex& b = cache.get(n);
    long filtration_sum = 0, bottom = 0;
    for (int p = 0; p <= n; ++p) {
      const RowHomology row = row_homology(b, p, RankMode::exact);
      const int q_want = p == 0 ? 1 : 0;
      const long dim_want = expected_row_dimension(n, p);
      for (int q = 0; q < static_cast<int>(row.dims_by_q.size()); ++q) {
        const long want = q == q_want ? dim_want : 0;
        if (row.dims_by_q[q] != want) {
          r.fail({n, {p, q}, std::to_string(row.dims_by_q[q]), std::to_string(want)});
          r.details = "H(n,p,q) mismatch (partition field holds p,q)";
          return r;
        }
      }
      long euler = 0;
      for (int q = 0; q < static_cast<int>(row.dims_by_q.size()); ++q)
        euler += (q % 2 == 0 ? 1 : -1) * row.dims_by_q[q];
      if (Rational(euler) != euler_row_prediction(n, p)) {
        r.fail({n, {p}, std::to_string(euler), euler_row_prediction(n, p).get_str()});
        r.details = "row Euler characteristic differs from the series coefficient";
        return r;
      }
      if (p == 0 && n >= 2) bottom = row.dims_by_q[1];
      if (p >= 1) filtration_sum += row.dims_by_q[0];
    }
    if (n >= 2 && bottom != filtration_sum) {
      r.fail({n, {}, std::to_string(bottom), std::to_string(filtration_sum)});
      r.details = "dim H(n,0,1) differs from the sum of the rows p >= 1";
      return r;
    }
    const ColumnHomology col = column_homology_k(b, RankMode::exact);
    for (const auto& [pq, d] : col.dims)
      if (d != 0) {
        r.fail({n, {pq.first, pq.second}, std::to_string(d), "0"});
        r.details = "Koszul column complex not acyclic";
        return r;
      }
    if (n <= 5) {
      const auto total = total_homology(b, RankMode::exact);
      for (int q = 0; q < static_cast<int>(total.size()); ++q)
        if (total[q] != 0) {
          r.fail({n, {q}, std::to_string(total[q]), "0"});
          r.details = "total complex not acyclic";
          return r;
        }
    }
  }
  r.details = "rows concentrated as predicted for n <= " + std::to_string(max_n) + "; total complex acyclic for n <= " +
              std::to_string(std::min(max_n, 5)) + "; Koszul columns acyclic";
  return r;
}

inline CheckReport check_character_formulas(int max_degree, int max_n, const SymF& zx,
                                            detail::BicomplexCache& cache) {
  CheckReport r{"A04_character_formulas", max_degree};
  compare_symf(r, zx, zX_from_inversion(max_degree), max_degree);
  if (!r.ok) {
    r.details = "closed formula differs from plethystic inversion";
    return r;
  }
  std::string signs;
  for (int n = 1; n <= max_n; ++n) {
    const EquivariantEuler e = equivariant_euler_bottom(cache.get(n));
    signs += (n > 1 ? "," : "") + std::to_string(e.normalization);
    const ClassFunction want = character_values(zx, n);
    for (const Partition& l : partitions_of(n))
      if (e.chi(l) != want(l)) {
        r.fail({n, l.parts(), e.chi(l).get_str(), want(l).get_str()});
        r.details = "equivariant Euler characteristic of the bottom row differs from the closed formula";
        return r;
      }
  }
  r.details = "formula = inversion to degree " + std::to_string(max_degree) + "; bottom-row Euler character = Z_X for n <= " +
              std::to_string(max_n) + " (normalization signs " + signs + ")";
  return r;
}

inline CheckReport check_main_theorem(int max_degree, const SymF& zx) {
  CheckReport r{"A05_main_theorem", max_degree};
  detail::absorb(r, main_theorem_check(max_degree, zx));
  if (r.ok) r.details = "Z_Lie o Z_X = Z_W to degree " + std::to_string(max_degree);
  return r;
}

inline CheckReport check_reflection(int max_degree, const SymF& zx) {
  CheckReport r{"A06_reflection_theorem", max_degree};
  detail::absorb(r, theorem_reflection_check(max_degree, zx));
  if (r.ok) r.details = "Z_X - p1 = (p1 d/dp1 - Id) Z_What to degree " + std::to_string(max_degree);
  return r;
}

inline CheckReport check_lambda_w(int max_degree) {
  const int d = std::min(max_degree, 6);
  CheckReport r{"A07_lambda_w_formula", d};
  detail::absorb(r, lambda_w_formula_check(d));
  if (r.ok) r.details = "closed formula = Z_Lambda o Z_W in s,t to degree " + std::to_string(d);
  return r;
}

inline CheckReport check_series() {
  CheckReport r{"A08_series_identities", 15};
  detail::absorb(r, lambert_functional_equation_check(15));
  detail::absorb(r, bicomplex_series_identity(10));
  detail::absorb(r, freeness_series_check(15));
  for (int n = 2; n <= 12 && r.ok; ++n)
    if (!cayley_identity_check(n)) {
      r.fail({n, {}, "false", "true"});
      r.details = "Cayley identity";
    }
  if (r.ok) r.details = "Lambert, exp((s-t)f_W), freeness relations, Cayley identity";
  return r;
}

inline CheckReport check_positivity(int max_degree, const SymF& zx) {
  CheckReport r{"A09_schur_positivity", max_degree};
  const std::vector<std::pair<std::string, SymF>> fs = {
      {"Z_W", zW(max_degree)}, {"Z_X", zx}, {"Z_What", zWhat(max_degree)}};
  for (const auto& [name, f] : fs)
    for (int n = 1; n <= max_degree; ++n)
      for (const auto& [mu, m] : schur_decompose(f, n))
        if (m < 0 || m.get_den() != 1) {
          r.fail({n, mu.parts(), m.get_str(), "nonnegative integer"});
          r.details = name + " has a non-integral or negative Schur multiplicity";
          return r;
        }
  r.details = "Z_W, Z_X, Z_What Schur positive to degree " + std::to_string(max_degree);
  return r;
}

inline CheckReport check_linear_algebra(int max_n, detail::BicomplexCache& cache) {
  CheckReport r{"A10_linear_algebra", max_n};
  const int axiom_n = std::min(max_n, 5), rank_n = std::min(max_n, 4);
  for (int n = 1; n <= axiom_n; ++n) {
    const std::string bad = bicomplex_axioms(cache.get(n));
    if (!bad.empty()) {
      r.fail_with(bad);
      return r;
    }
  }
  int matrices = 0;
  auto compare = [&](int n, std::vector<int> where, const SparseMatQ& m) {
    const MultiModularRank mm = rank_multimodular(m);
    const int exact = rank(m);
    ++matrices;
    if (!mm.agreed || mm.rank != exact || rank(m.transpose()) != exact) {
      r.fail({n, std::move(where), std::to_string(mm.rank), std::to_string(exact)});
      r.details = "multi-modular rank differs from fraction-free rank";
      return false;
    }
    return true;
  };
  for (int n = 1; n <= rank_n; ++n) {
    const Bicomplex& b = cache.get(n);
    for (int p = 0; p <= n; ++p)
      for (int q = 1; p + q <= n; ++q) {
        if (!compare(n, {p, q}, assemble_matrix(b, p, q, Differential::pl))) return r;
        if (!compare(n, {p, q}, assemble_matrix(b, p, q, Differential::k))) return r;
      }
    for (int q = 1; q <= n; ++q)
      if (!compare(n, {q}, total_matrix(b, q))) return r;
  }
  r.details = "d^2 = 0 and anticommutation for n <= " + std::to_string(axiom_n) + "; " + std::to_string(matrices) +
              " matrices with agreeing ranks for n <= " + std::to_string(rank_n);
  return r;
}

/// Runs every acceptance check; the result is ordered by check name.
inline VerifyReport run_verify(const VerifyOptions& opts) {
  opts.validate();
  VerifyReport report{opts, {}};
  detail::BicomplexCache cache;
  SymF zx = zX_formula(opts.max_degree);
  if (opts.tamper) zx = detail::tampered(std::move(zx));

  using Params = nlohmann::ordered_json;
  auto run = [&](const std::string& name, Params params, const std::function<CheckReport()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
      rep = f();
    } catch (const std::exception& e) {
      rep = CheckReport{name, 0};
      rep.fail_with(std::string("exception: ") + e.what());
    }
    rep.check = name;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back({name, std::move(params), std::move(rep), static_cast<long>(ms)});
  };

  const int deg = opts.max_degree, n = opts.max_n;
  run("A01_tree_counts", Params{{"max_n", opts.tree_max()}}, [&] { return check_tree_counts(opts.tree_max()); });
  run("A02_algebraic_axioms", Params{{"instances", opts.random_instances}, {"max_labels", 7}, {"seed", opts.seed}},
      [&] { return check_algebraic_axioms(opts.random_instances, opts.seed); });
  run("A03_homology", Params{{"max_n", n}}, [&] { return check_homology(n, cache); });
  run("A04_character_formulas", Params{{"max_degree", deg}, {"max_n", n}},
      [&] { return check_character_formulas(deg, n, zx, cache); });
  run("A05_main_theorem", Params{{"max_degree", deg}}, [&] { return check_main_theorem(deg, zx); });
  run("A06_reflection_theorem", Params{{"max_degree", deg}}, [&] { return check_reflection(deg, zx); });
  run("A07_lambda_w_formula", Params{{"max_degree", std::min(deg, 6)}}, [&] { return check_lambda_w(deg); });
  run("A08_series_identities", Params{{"max_degree", 15}}, [&] { return check_series(); });
  run("A09_schur_positivity", Params{{"max_degree", deg}}, [&] { return check_positivity(deg, zx); });
  run("A10_linear_algebra", Params{{"max_n", n}}, [&] { return check_linear_algebra(n, cache); });

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return report;
}

}  // namespace prelie

#endif  // PRELIE_VERIFY_HPP
