#ifndef PRELIE_HOMOLOGY_HPP
#define PRELIE_HOMOLOGY_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prelie/linalg.hpp"
#include "prelie/symfunc.hpp"
#include "prelie/trees.hpp"

namespace prelie {

/// Triple grading of the bicomplex: n labels, p forest components, q wedge
/// factors, r = n - p - q.
struct Grading {
  int n = 0;
  int p = 0;
  int q = 0;
  int r() const { return n - p - q; }
  bool valid() const { return p >= 0 && q >= 0 && p + q <= n; }
  friend auto operator<=>(const Grading&, const Grading&) = default;
};

/// Basis element x_1...x_p ⊗ y_1 ∧ ... ∧ y_q of (S∘W) ⊗ (Λ∘W).
///
/// Both parts are stored as forests on disjoint label sets. The wedge
/// factors are oriented by increasing minimum label; any other order of
/// the same factors differs by the sign of the sorting permutation.
class ChainElt {
 public:
  ChainElt() = default;
  ChainElt(const Forest& forest, const Forest& wedge) : forest_(forest), wedge_(wedge) {
    if (forest.labels() & wedge.labels()) throw std::invalid_argument("forest and wedge parts overlap");
  }

  /// Canonical element for wedge factors given in an arbitrary order, and
  /// the sign relating the two orientations.
  static std::pair<ChainElt, int> from_ordered(const Forest& forest, const std::vector<RootedTree>& factors) {
    Forest wedge;
    std::vector<Label> keys;
    keys.reserve(factors.size());
    for (const auto& y : factors) {
      wedge = wedge | y.as_forest();
      keys.push_back(y.min_label());
    }
    return {ChainElt(forest, wedge), sorting_sign(keys)};
  }

  const Forest& forest() const { return forest_; }
  const Forest& wedge() const { return wedge_; }
  std::vector<RootedTree> factors() const { return wedge_.components(); }
  LabelMask labels() const { return forest_.labels() | wedge_.labels(); }
  Grading grading() const {
    return {popcount(labels()), forest_.component_count(), wedge_.component_count()};
  }

  /// `{1(2);3}|4^5(6)`: forest, then the wedge factors in order.
  std::string to_string() const {
    std::string s = forest_.to_string() + "|";
    const auto ys = factors();
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (i) s += '^';
      s += ys[i].to_string();
    }
    return s;
  }

  friend auto operator<=>(const ChainElt&, const ChainElt&) = default;
  friend bool operator==(const ChainElt&, const ChainElt&) = default;

 private:
  Forest forest_;
  Forest wedge_;
};

using ChainLinComb = LinComb<ChainElt>;

namespace detail {

/// Calls f(element, coefficient) for every term of ∂_pL(e), before
/// collecting like terms.
template <class F>
void for_each_d_pl_term(const ChainElt& e, F&& f) {
  const auto ys = e.factors();
  const int q = static_cast<int>(ys.size());
  const Forest& forest = e.forest();
  for (int j = 0; j < q; ++j) {
    const int sign = j % 2 == 0 ? 1 : -1;
    const Forest rest = e.wedge().restricted(e.wedge().labels() & ~ys[j].labels());
    const Forest joined = forest | ys[j].as_forest();
    for (Label v : labels_of(forest.labels())) f(ChainElt(joined.attached(ys[j].root(), v), rest), sign);
  }
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      const int sign = (i + j) % 2 == 0 ? 1 : -1;
      const Forest rest = e.wedge().restricted(e.wedge().labels() & ~(ys[i].labels() | ys[j].labels()));
      // [y_i, y_j] goes in front; its minimum label is that of y_i, so
      // reordering passes it over the i remaining factors that precede y_i.
      const int reorder = i % 2 == 0 ? 1 : -1;
      const Forest both = ys[i].as_forest() | ys[j].as_forest();
      for (Label v : labels_of(ys[i].labels()))
        f(ChainElt(forest, rest | both.attached(ys[j].root(), v)), sign * reorder);
      for (Label v : labels_of(ys[j].labels()))
        f(ChainElt(forest, rest | both.attached(ys[i].root(), v)), -sign * reorder);
    }
  }
}

template <class F>
void for_each_d_k_term(const ChainElt& e, F&& f) {
  const auto ys = e.factors();
  for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
    const Forest rest = e.wedge().restricted(e.wedge().labels() & ~ys[j].labels());
    f(ChainElt(e.forest() | ys[j].as_forest(), rest), j % 2 == 0 ? 1 : -1);
  }
}

}  // namespace detail

/// Chevalley–Eilenberg differential for the graded module (S∘W, ↶):
/// sum_j (-1)^{j-1} (F ↶ y_j) ⊗ ...ŷ_j... + sum_{i<j} (-1)^{i+j} F ⊗ [y_i,y_j] ∧ ...
inline ChainLinComb d_pl(const ChainElt& e) {
  ChainLinComb out;
  detail::for_each_d_pl_term(e, [&](const ChainElt& x, int c) { out.add(x, c); });
  return out;
}

/// Koszul differential: sum_j (-1)^{j-1} (F · y_j) ⊗ ...ŷ_j...
inline ChainLinComb d_k(const ChainElt& e) {
  ChainLinComb out;
  detail::for_each_d_k_term(e, [&](const ChainElt& x, int c) { out.add(x, c); });
  return out;
}

inline ChainLinComb d_total(const ChainElt& e) { return d_pl(e) + d_k(e); }

template <class D>
ChainLinComb apply_linear(const ChainLinComb& a, D&& d) {
  ChainLinComb out;
  for (const auto& [e, c] : a) out += c * d(e);
  return out;
}

/// σ·e, re-oriented, with the sign of the induced reordering of factors.
inline std::pair<ChainElt, int> apply_perm(const Permutation& sigma, const ChainElt& e) {
  std::vector<RootedTree> moved;
  for (const auto& y : e.factors()) moved.push_back(apply_perm(sigma, y));
  return ChainElt::from_ordered(e.forest().relabeled(sigma), moved);
}

/// Basis of one graded piece C(n,p,q), sorted.
class ChainSpace {
 public:
  ChainSpace() = default;
  ChainSpace(Grading g, std::vector<ChainElt> basis) : grading_(g), basis_(std::move(basis)) {
    std::sort(basis_.begin(), basis_.end());
  }

  const Grading& grading() const { return grading_; }
  const std::vector<ChainElt>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }

  /// Index of e in the basis, or -1.
  int index_of(const ChainElt& e) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), e);
    return it != basis_.end() && *it == e ? static_cast<int>(it - basis_.begin()) : -1;
  }

 private:
  Grading grading_;
  std::vector<ChainElt> basis_;
};

/// All graded pieces C(n,p,q) for one n, optionally restricted to some rows p.
class Bicomplex {
 public:
  explicit Bicomplex(int n, int only_row = -1) : n_(n) {
    if (n < 1 || n > 7) throw std::invalid_argument("bicomplex needs 1 <= n <= 7");
    std::map<std::pair<int, int>, std::vector<ChainElt>> pieces;
    for_each_forest(first_labels(n), [&](const Forest& f) {
      const auto comps = f.components();
      const int k = static_cast<int>(comps.size());
      for (unsigned subset = 0; subset < (1U << k); ++subset) {
        const int q = std::popcount(subset);
        if (only_row >= 0 && k - q != only_row) continue;
        LabelMask wedge_mask = 0;
        for (int i = 0; i < k; ++i)
          if (subset & (1U << i)) wedge_mask |= comps[i].labels();
        pieces[{k - q, q}].emplace_back(f.restricted(f.labels() & ~wedge_mask), f.restricted(wedge_mask));
      }
    });
    for (auto& [pq, basis] : pieces) spaces_.emplace(pq, ChainSpace({n, pq.first, pq.second}, std::move(basis)));
  }

  int n() const { return n_; }

  /// C(n,p,q); empty outside the grading range.
  const ChainSpace& space(int p, int q) const {
    auto it = spaces_.find({p, q});
    if (it != spaces_.end()) return it->second;
    static const ChainSpace empty;
    return empty;
  }

 private:
  int n_;
  std::map<std::pair<int, int>, ChainSpace> spaces_;
};

inline ChainSpace build_chain_space(int n, int p, int q) {
  if (p < 0 || q < 0 || p + q > n) return ChainSpace({n, p, q}, {});
  Bicomplex b(n, p);
  return b.space(p, q);
}

enum class Differential { pl, k, total };

/// Matrix of a differential out of C(n,p,q): rows index the target basis,
/// columns the source basis. For `total` the target is C(n,p,q-1) followed
/// by C(n,p+1,q-1).
inline SparseMatQ assemble_matrix(const Bicomplex& b, int p, int q, Differential which) {
  const ChainSpace& src = b.space(p, q);
  const ChainSpace& pl_target = b.space(p, q - 1);
  const ChainSpace& k_target = b.space(p + 1, q - 1);
  const int pl_rows = which == Differential::k ? 0 : pl_target.size();
  const int k_rows = which == Differential::pl ? 0 : k_target.size();
  std::vector<MatrixEntry> entries;
  for (int col = 0; col < src.size(); ++col) {
    const ChainElt& e = src.basis()[col];
    if (which != Differential::k)
      detail::for_each_d_pl_term(e, [&](const ChainElt& x, int c) {
        const int row = pl_target.index_of(x);
        if (row < 0) throw std::logic_error("d_pl image outside target space: " + x.to_string());
        entries.push_back({row, col, c});
      });
    if (which != Differential::pl)
      detail::for_each_d_k_term(e, [&](const ChainElt& x, int c) {
        const int row = k_target.index_of(x);
        if (row < 0) throw std::logic_error("d_k image outside target space: " + x.to_string());
        entries.push_back({pl_rows + row, col, c});
      });
  }
  return SparseMatQ::from_entries(pl_rows + k_rows, src.size(), std::move(entries));
}

/// Total differential from ⊕_p C(n,p,q) to ⊕_p C(n,p,q-1), blocks by increasing p.
inline SparseMatQ total_matrix(const Bicomplex& b, int q) {
  const int n = b.n();
  std::vector<int> src_offset(static_cast<std::size_t>(n) + 2, 0), dst_offset(static_cast<std::size_t>(n) + 2, 0);
  for (int p = 0; p <= n; ++p) {
    src_offset[p + 1] = src_offset[p] + b.space(p, q).size();
    dst_offset[p + 1] = dst_offset[p] + b.space(p, q - 1).size();
  }
  std::vector<MatrixEntry> entries;
  for (int p = 0; p <= n; ++p) {
    const ChainSpace& src = b.space(p, q);
    for (int col = 0; col < src.size(); ++col) {
      const ChainElt& e = src.basis()[col];
      auto emit = [&](const ChainElt& x, int c) {
        const int tp = x.grading().p;
        const int row = b.space(tp, q - 1).index_of(x);
        if (row < 0) throw std::logic_error("differential image outside target space");
        entries.push_back({dst_offset[tp] + row, src_offset[p] + col, c});
      };
      detail::for_each_d_pl_term(e, emit);
      detail::for_each_d_k_term(e, emit);
    }
  }
  return SparseMatQ::from_entries(dst_offset[n + 1], src_offset[n + 1], std::move(entries));
}

// ---------------------------------------------------------------------------
// Homology of a chain complex

enum class RankMode {
  exact,      ///< fraction-free elimination for every matrix
  certified,  ///< modular lower bounds, exact when the Euler characteristic pins the result
};

/// Homology of C_0 <- C_1 <- ... <- C_m.
struct ComplexHomology {
  std::vector<int> chain_dims;
  std::vector<int> ranks;  // ranks[q] = rank of d_q : C_q -> C_{q-1}; ranks[0] = 0
  std::vector<int> dims;
  std::string method;  // "fraction_free" or "modular_certified"
};

/// `matrices[q]` is d_q for q >= 1 (entry 0 is ignored).
inline ComplexHomology complex_homology(const std::vector<int>& chain_dims, const std::vector<SparseMatQ>& matrices,
                                        RankMode mode) {
  const int m = static_cast<int>(chain_dims.size());
  ComplexHomology h;
  h.chain_dims = chain_dims;
  auto homology_from = [&](const std::vector<int>& ranks) {
    std::vector<int> dims(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q) dims[q] = chain_dims[q] - ranks[q] - (q + 1 < m ? ranks[q + 1] : 0);
    return dims;
  };
  if (mode == RankMode::certified) {
    std::vector<int> lower(static_cast<std::size_t>(m), 0);
    for (int q = 1; q < m; ++q) lower[q] = rank_multimodular(matrices[q]).rank;
    const auto upper = homology_from(lower);
    // True homology is bounded by `upper` with the same Euler characteristic,
    // so at most one nonzero entry forces equality.
    if (std::count_if(upper.begin(), upper.end(), [](int d) { return d != 0; }) <= 1) {
      h.ranks = lower;
      h.dims = upper;
      h.method = "modular_certified";
      return h;
    }
  }
  h.ranks.assign(static_cast<std::size_t>(m), 0);
  for (int q = 1; q < m; ++q) h.ranks[q] = rank(matrices[q]);
  h.dims = homology_from(h.ranks);
  h.method = "fraction_free";
  return h;
}

inline RankMode default_rank_mode(int) { return RankMode::exact; }

/// Homology of row p under ∂_pL, indexed by q = 0..n-p.
struct RowHomology {
  int n = 0;
  int p = 0;
  std::vector<int> dims_by_q;
  std::string method;
  /// The single q carrying homology, or -1 when zero or spread out.
  int concentration() const {
    int where = -1;
    for (int q = 0; q < static_cast<int>(dims_by_q.size()); ++q)
      if (dims_by_q[q] != 0) {
        if (where >= 0) return -1;
        where = q;
      }
    return where;
  }
};

inline RowHomology row_homology(const Bicomplex& b, int p, RankMode mode) {
  const int n = b.n();
  if (p < 0 || p > n) throw std::invalid_argument("row index out of range");
  std::vector<int> dims;
  std::vector<SparseMatQ> mats;
  for (int q = 0; q <= n - p; ++q) {
    dims.push_back(b.space(p, q).size());
    mats.push_back(q == 0 ? SparseMatQ() : assemble_matrix(b, p, q, Differential::pl));
  }
  const auto h = complex_homology(dims, mats, mode);
  return {n, p, h.dims, h.method};
}

inline RowHomology row_homology(int n, int p) {
  if (n < 1 || n > 7 || (n == 7 && p != 0)) throw std::invalid_argument("row_homology needs n <= 6 (n = 7 only for p = 0)");
  Bicomplex b(n, p);
  return row_homology(b, p, default_rank_mode(n));
}

/// Expected |H(n,p,*)|: (n-1)^{n-1} at q = 1 for p = 0, otherwise
/// C(n,p)(p-1)(n-1)^{n-p-1} at q = 0 (equal to 1 when p = n).
inline long expected_row_dimension(int n, int p) {
  return to_long(abs(euler_row_prediction(n, p)));
}

struct HomologyTable {
  int n = 0;
  std::vector<RowHomology> rows;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    auto& rs = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) rs.push_back({{"p", r.p}, {"dims_by_q", r.dims_by_q}});
    return j;
  }
};

inline HomologyTable homology_table(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("homology_table needs 1 <= n <= 6");
  Bicomplex b(n);
  HomologyTable t{n, {}};
  for (int p = 0; p <= n; ++p) t.rows.push_back(row_homology(b, p, default_rank_mode(n)));
  return t;
}

/// Homology of ∂_K on each column p + q = m, keyed by (p, q).
struct ColumnHomology {
  int n = 0;
  std::map<std::pair<int, int>, int> dims;
  bool acyclic() const {
    return std::all_of(dims.begin(), dims.end(), [](const auto& kv) { return kv.second == 0; });
  }
};

inline ColumnHomology column_homology_k(const Bicomplex& b, RankMode mode) {
  const int n = b.n();
  ColumnHomology out{n, {}};
  for (int m = 0; m <= n; ++m) {
    std::vector<int> dims;
    std::vector<SparseMatQ> mats;
    for (int q = 0; q <= m; ++q) {
      dims.push_back(b.space(m - q, q).size());
      mats.push_back(q == 0 ? SparseMatQ() : assemble_matrix(b, m - q, q, Differential::k));
    }
    const auto h = complex_homology(dims, mats, mode);
    for (int q = 0; q <= m; ++q) out.dims[{m - q, q}] = h.dims[q];
  }
  return out;
}

inline ColumnHomology column_homology_k(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("column_homology_k needs 1 <= n <= 6");
  Bicomplex b(n);
  return column_homology_k(b, default_rank_mode(n));
}

/// Homology of ∂_pL + ∂_K graded by q.
inline std::vector<int> total_homology(const Bicomplex& b, RankMode mode) {
  const int n = b.n();
  std::vector<int> dims;
  std::vector<SparseMatQ> mats;
  for (int q = 0; q <= n; ++q) {
    int d = 0;
    for (int p = 0; p + q <= n; ++p) d += b.space(p, q).size();
    dims.push_back(d);
    mats.push_back(q == 0 ? SparseMatQ() : total_matrix(b, q));
  }
  return complex_homology(dims, mats, mode).dims;
}

inline bool total_acyclicity(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("total_acyclicity needs 1 <= n <= 5");
  Bicomplex b(n);
  const auto dims = total_homology(b, default_rank_mode(n));
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

/// ∂_pL² = 0, ∂_K² = 0 and ∂_pL∂_K + ∂_K∂_pL = 0 on every grading of b.
/// Returns an empty string on success, else the failing grading.
inline std::string bicomplex_axioms(const Bicomplex& b) {
  const int n = b.n();
  for (int p = 0; p <= n; ++p)
    for (int q = 2; p + q <= n; ++q) {
      const std::string where = " at (n,p,q)=(" + std::to_string(n) + "," + std::to_string(p) + "," +
                                std::to_string(q) + ")";
      const auto pl = assemble_matrix(b, p, q, Differential::pl);
      const auto k = assemble_matrix(b, p, q, Differential::k);
      if (!compose_check(assemble_matrix(b, p, q - 1, Differential::pl), pl)) return "d_pl^2 != 0" + where;
      if (!compose_check(assemble_matrix(b, p + 1, q - 1, Differential::k), k)) return "d_k^2 != 0" + where;
      const auto anti = add(multiply(assemble_matrix(b, p + 1, q - 1, Differential::pl), k),
                            multiply(assemble_matrix(b, p, q - 1, Differential::k), pl));
      if (!anti.is_zero()) return "d_pl d_k + d_k d_pl != 0" + where;
    }
  return {};
}

/// Character of X(n) from the bottom row: the alternating sum of signed
/// fixed-point counts of σ_λ on C(n,0,q), normalized so that the value on
/// the identity is positive.
struct EquivariantEuler {
  ClassFunction chi;
  int normalization = 1;  // the global sign applied to the raw Euler characteristic
};

inline EquivariantEuler equivariant_euler_bottom(const Bicomplex& b) {
  const int n = b.n();
  ClassFunction raw{n, {}};
  for (const Partition& l : partitions_of(n)) {
    const Permutation sigma = Permutation::of_cycle_type(l);
    long euler = 0;
    for (int q = 1; q <= n; ++q) {
      long trace = 0;
      for (const ChainElt& e : b.space(0, q).basis()) {
        const auto [image, sign] = apply_perm(sigma, e);
        if (image == e) trace += sign;
      }
      euler += (q % 2 == 0 ? 1 : -1) * trace;
    }
    raw.values[l] = euler;
  }
  EquivariantEuler out{raw, raw.dimension() < 0 ? -1 : 1};
  if (out.normalization < 0)
    for (auto& [l, v] : out.chi.values) v = -v;
  return out;
}

inline EquivariantEuler equivariant_euler_bottom(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("equivariant_euler_bottom needs 1 <= n <= 6");
  Bicomplex b(n, 0);
  return equivariant_euler_bottom(b);
}

}  // namespace prelie

#endif  // PRELIE_HOMOLOGY_HPP
