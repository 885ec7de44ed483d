#ifndef PRELIE_TREES_HPP
#define PRELIE_TREES_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prelie/lincomb.hpp"
#include "prelie/permutation.hpp"

namespace prelie {

inline constexpr int kMaxLabel = 16;

using Label = int;
/// Bit l-1 is set when label l is present.
using LabelMask = std::uint32_t;

inline LabelMask label_bit(Label l) { return LabelMask{1} << (l - 1); }
inline LabelMask first_labels(int n) { return n <= 0 ? 0 : ((LabelMask{1} << n) - 1); }
inline int popcount(LabelMask m) { return std::popcount(m); }
inline std::vector<Label> labels_of(LabelMask m) {
  std::vector<Label> out;
  for (Label l = 1; l <= kMaxLabel; ++l)
    if (m & label_bit(l)) out.push_back(l);
  return out;
}

class RootedTree;

/// Rooted forest on a finite set of labels, stored as its parent map.
///
/// The parent map is already a canonical form: two forests are equal iff
/// they have the same labels and the same parent function, independent
/// of any ordering of components or children. Components and children
/// are presented in increasing order of their minimum label.
class Forest {
 public:
  Forest() = default;

  static Forest vertex(Label l) {
    check_label(l);
    Forest f;
    f.mask_ = label_bit(l);
    return f;
  }

  /// From (label, parent) pairs; parent 0 marks a root.
  static Forest from_parents(const std::vector<std::pair<Label, Label>>& pairs) {
    Forest f;
    for (auto [l, p] : pairs) {
      check_label(l);
      if (f.mask_ & label_bit(l)) throw std::invalid_argument("duplicate label " + std::to_string(l));
      f.mask_ |= label_bit(l);
      f.parent_[l - 1] = static_cast<std::uint8_t>(p);
    }
    for (auto [l, p] : pairs)
      if (p != 0 && !(f.mask_ & label_bit(p)))
        throw std::invalid_argument("parent " + std::to_string(p) + " is not a vertex");
    for (auto [l, p] : pairs) {
      int steps = 0;
      for (Label v = l; v != 0; v = f.parent(v))
        if (++steps > kMaxLabel) throw std::invalid_argument("parent map has a cycle");
    }
    return f;
  }

  /// Parent pairs that are known to describe a forest; no validation.
  static Forest from_trusted_parents(const std::vector<std::pair<Label, Label>>& pairs) {
    Forest f;
    for (auto [l, p] : pairs) {
      f.mask_ |= label_bit(l);
      f.parent_[l - 1] = static_cast<std::uint8_t>(p);
    }
    return f;
  }

  LabelMask labels() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(Label l) const { return l >= 1 && l <= kMaxLabel && (mask_ & label_bit(l)); }
  Label min_label() const { return mask_ ? std::countr_zero(mask_) + 1 : 0; }

  /// Parent of l, 0 for roots.
  Label parent(Label l) const { return parent_[l - 1]; }

  Label root_of(Label l) const {
    while (parent(l) != 0) l = parent(l);
    return l;
  }

  /// Roots, ascending; this is also the ascending order of component minima
  /// only up to relabeling, so components() sorts by minimum label.
  std::vector<Label> roots() const {
    std::vector<Label> out;
    for (Label l : labels_of(mask_))
      if (parent(l) == 0) out.push_back(l);
    return out;
  }

  int component_count() const {
    int c = 0;
    for (Label l : labels_of(mask_))
      if (parent(l) == 0) ++c;
    return c;
  }

  /// Label set of the component containing l.
  LabelMask component_mask(Label l) const {
    const Label r = root_of(l);
    LabelMask m = 0;
    for (Label v : labels_of(mask_))
      if (root_of(v) == r) m |= label_bit(v);
    return m;
  }

  /// Restriction to a union of components.
  Forest restricted(LabelMask m) const {
    Forest f;
    f.mask_ = m & mask_;
    for (Label v : labels_of(f.mask_)) f.parent_[v - 1] = parent_[v - 1];
    return f;
  }

  std::vector<RootedTree> components() const;

  /// Children of v ordered by the minimum label of their subtrees.
  std::vector<Label> children(Label v) const {
    std::vector<std::pair<Label, Label>> keyed;  // (subtree min, child)
    for (Label c : labels_of(mask_))
      if (parent(c) == v) keyed.emplace_back(subtree_min(c), c);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Label> out;
    for (auto [m, c] : keyed) out.push_back(c);
    return out;
  }

  Label subtree_min(Label v) const {
    Label best = v;
    for (Label c : labels_of(mask_)) {
      if (c >= best) continue;
      for (Label a = c; a != 0; a = parent(a))
        if (a == v) {
          best = c;
          break;
        }
    }
    return best;
  }

  /// Disjoint union; throws on overlapping labels.
  friend Forest operator|(const Forest& a, const Forest& b) {
    if (a.mask_ & b.mask_) throw std::invalid_argument("label sets overlap");
    Forest f = a;
    f.mask_ |= b.mask_;
    for (Label v : labels_of(b.mask_)) f.parent_[v - 1] = b.parent_[v - 1];
    return f;
  }

  /// Makes root r a child of vertex v.
  Forest attached(Label r, Label v) const {
    if (!contains(r) || parent(r) != 0 || !contains(v) || root_of(v) == r)
      throw std::invalid_argument("invalid attachment");
    Forest f = *this;
    f.parent_[r - 1] = static_cast<std::uint8_t>(v);
    return f;
  }

  Forest relabeled(const Permutation& sigma) const {
    Forest f;
    for (Label v : labels_of(mask_)) {
      const Label w = sigma(v);
      check_label(w);
      f.mask_ |= label_bit(w);
      f.parent_[w - 1] = static_cast<std::uint8_t>(parent(v) == 0 ? 0 : sigma(parent(v)));
    }
    return f;
  }

  /// `{T;T;...}` with components by increasing minimum label.
  std::string to_string() const;

  friend auto operator<=>(const Forest&, const Forest&) = default;
  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  static void check_label(Label l) {
    if (l < 1 || l > kMaxLabel)
      throw std::invalid_argument("label out of range 1.." + std::to_string(kMaxLabel) + ": " + std::to_string(l));
  }

  std::string subtree_string(Label v) const {
    std::string s = std::to_string(v);
    const auto kids = children(v);
    if (kids.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) s += ',';
      s += subtree_string(kids[i]);
    }
    return s + ')';
  }

  friend class RootedTree;

  LabelMask mask_ = 0;
  std::array<std::uint8_t, kMaxLabel> parent_{};
};

/// Labeled rooted tree: a Forest with exactly one component.
class RootedTree {
 public:
  static RootedTree vertex(Label l) { return RootedTree(Forest::vertex(l)); }

  /// Root plus subtrees; the subtrees and root must have disjoint labels.
  RootedTree(Label root, const std::vector<RootedTree>& children) {
    Forest f = Forest::vertex(root);
    for (const auto& c : children) f = (f | c.forest_).attached(c.root(), root);
    forest_ = f;
  }

  static RootedTree from_forest(const Forest& f) {
    if (f.component_count() != 1) throw std::invalid_argument("a rooted tree has exactly one component");
    return RootedTree(f);
  }

  /// Wraps a forest known to have a single component; no validation.
  static RootedTree from_trusted(const Forest& f) { return RootedTree(f); }

  Label root() const {
    for (Label l : labels_of(forest_.labels()))
      if (forest_.parent(l) == 0) return l;
    return 0;
  }
  LabelMask labels() const { return forest_.labels(); }
  int size() const { return forest_.size(); }
  Label min_label() const { return forest_.min_label(); }
  Label parent(Label l) const { return forest_.parent(l); }
  const Forest& as_forest() const { return forest_; }

  /// Subtrees hanging from the root, in canonical order.
  std::vector<RootedTree> children() const {
    std::vector<RootedTree> out;
    for (Label c : forest_.children(root())) {
      Forest sub = forest_.restricted(subtree_mask(c));
      sub.parent_[c - 1] = 0;
      out.push_back(RootedTree(sub));
    }
    return out;
  }

  std::string to_string() const { return forest_.subtree_string(root()); }

  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  explicit RootedTree(const Forest& f) : forest_(f) {}
  friend class Forest;

  LabelMask subtree_mask(Label v) const {
    LabelMask m = 0;
    for (Label c : labels_of(forest_.labels()))
      for (Label a = c; a != 0; a = forest_.parent(a))
        if (a == v) {
          m |= label_bit(c);
          break;
        }
    return m;
  }

  Forest forest_;
};

inline std::vector<RootedTree> Forest::components() const {
  std::vector<std::pair<Label, Label>> keyed;  // (component min, root)
  for (Label r : roots()) keyed.emplace_back(0, r);
  for (auto& [m, r] : keyed) m = std::countr_zero(component_mask(r)) + 1;
  std::sort(keyed.begin(), keyed.end());
  std::vector<RootedTree> out;
  for (auto [m, r] : keyed) out.push_back(RootedTree(restricted(component_mask(r))));
  return out;
}

inline std::string Forest::to_string() const {
  std::string s = "{";
  const auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ';';
    s += comps[i].to_string();
  }
  return s + "}";
}

using TreeLinComb = LinComb<RootedTree>;
using ForestLinComb = LinComb<Forest>;

inline Forest forest_of(const RootedTree& t) { return t.as_forest(); }

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Decodes a Prüfer sequence over vertices 0..m-1 into parent pointers for
/// the given root.
inline void pruefer_to_parents(const std::vector<int>& seq, int m, int root, std::vector<int>& parent) {
  std::vector<int> degree(m, 1);
  for (int v : seq) ++degree[v];
  std::vector<std::vector<int>> adj(m);
  for (int v : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    adj[leaf].push_back(v);
    adj[v].push_back(leaf);
    --degree[leaf];
    --degree[v];
  }
  int u = -1, w = -1;
  for (int i = 0; i < m; ++i)
    if (degree[i] == 1) (u < 0 ? u : w) = i;
  adj[u].push_back(w);
  adj[w].push_back(u);

  parent.assign(m, -1);
  std::vector<int> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int x : adj[v])
      if (parent[x] < 0) {
        parent[x] = v;
        stack.push_back(x);
      }
  }
}

/// Calls f(seq) for every sequence in [0,m)^len.
template <class F>
void for_each_sequence(int m, int len, F&& f) {
  std::vector<int> seq(len, 0);
  while (true) {
    f(seq);
    int i = len - 1;
    while (i >= 0 && seq[i] == m - 1) seq[i--] = 0;
    if (i < 0) return;
    ++seq[i];
  }
}

}  // namespace detail

/// Calls f(tree) for each of the m^{m-1} rooted trees on the label set.
template <class F>
void for_each_tree(LabelMask labels, F&& f) {
  const auto ls = labels_of(labels);
  const int m = static_cast<int>(ls.size());
  if (m == 0) throw std::invalid_argument("W has no arity-0 component");
  if (m == 1) {
    f(RootedTree::vertex(ls[0]));
    return;
  }
  std::vector<int> parent;
  std::vector<std::pair<Label, Label>> pairs(m);
  detail::for_each_sequence(m, m - 2, [&](const std::vector<int>& seq) {
    for (int root = 0; root < m; ++root) {
      detail::pruefer_to_parents(seq, m, root, parent);
      for (int i = 0; i < m; ++i) pairs[i] = {ls[i], i == root ? 0 : ls[parent[i]]};
      f(RootedTree::from_trusted(Forest::from_trusted_parents(pairs)));
    }
  });
}

/// Calls f(forest) for each of the (m+1)^{m-1} rooted forests on the label
/// set (the empty forest when the set is empty).
template <class F>
void for_each_forest(LabelMask labels, F&& f) {
  const auto ls = labels_of(labels);
  const int m = static_cast<int>(ls.size());
  if (m == 0) {
    f(Forest{});
    return;
  }
  // Forests on L are trees on {virtual root} + L rooted at the virtual root.
  const int total = m + 1;
  std::vector<int> parent;
  std::vector<std::pair<Label, Label>> pairs(m);
  detail::for_each_sequence(total, total - 2, [&](const std::vector<int>& seq) {
    detail::pruefer_to_parents(seq, total, 0, parent);
    for (int i = 1; i < total; ++i) pairs[i - 1] = {ls[i - 1], parent[i] == 0 ? 0 : ls[parent[i] - 1]};
    f(Forest::from_trusted_parents(pairs));
  });
}

inline std::vector<RootedTree> enumerate_trees(LabelMask labels) {
  if (popcount(labels) > 9) throw std::invalid_argument("tree enumeration is capped at 9 labels");
  std::vector<RootedTree> out;
  for_each_tree(labels, [&](const RootedTree& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Uniformly random rooted tree on the label set.
template <class Rng>
RootedTree random_tree(LabelMask labels, Rng& rng) {
  const auto ls = labels_of(labels);
  const int m = static_cast<int>(ls.size());
  if (m == 0) throw std::invalid_argument("W has no arity-0 component");
  if (m == 1) return RootedTree::vertex(ls[0]);
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::vector<int> seq(m - 2);
  for (int& v : seq) v = pick(rng);
  std::vector<int> parent;
  const int root = pick(rng);
  detail::pruefer_to_parents(seq, m, root, parent);
  std::vector<std::pair<Label, Label>> pairs(m);
  for (int i = 0; i < m; ++i) pairs[i] = {ls[i], i == root ? 0 : ls[parent[i]]};
  return RootedTree::from_forest(Forest::from_parents(pairs));
}

// ---------------------------------------------------------------------------
// Pre-Lie product, bracket and forest actions

/// S ↷ T: attach the root of T below each vertex of S in turn.
inline TreeLinComb graft(const RootedTree& s, const RootedTree& t) {
  const Forest both = s.as_forest() | t.as_forest();
  TreeLinComb out;
  for (Label v : labels_of(s.labels())) out.add(RootedTree::from_forest(both.attached(t.root(), v)), 1);
  return out;
}

inline TreeLinComb graft(const TreeLinComb& a, const TreeLinComb& b) {
  TreeLinComb out;
  for (const auto& [s, cs] : a)
    for (const auto& [t, ct] : b) out += (cs * ct) * graft(s, t);
  return out;
}

inline TreeLinComb bracket(const RootedTree& s, const RootedTree& t) { return graft(s, t) - graft(t, s); }

inline TreeLinComb bracket(const TreeLinComb& a, const TreeLinComb& b) { return graft(a, b) - graft(b, a); }

/// F ↶ t: derivation extension of ↷ to forests.
inline ForestLinComb forest_act_pl(const Forest& f, const RootedTree& t) {
  const Forest both = f | t.as_forest();
  ForestLinComb out;
  for (Label v : labels_of(f.labels())) out.add(both.attached(t.root(), v), 1);
  return out;
}

/// F · t: t appended as a new component.
inline Forest forest_concat(const Forest& f, const RootedTree& t) { return f | t.as_forest(); }

/// F ◁ t = F·t + F ↶ t.
inline ForestLinComb forest_act_total(const Forest& f, const RootedTree& t) {
  ForestLinComb out = forest_act_pl(f, t);
  out.add(forest_concat(f, t), 1);
  return out;
}

inline ForestLinComb forest_act_pl(const ForestLinComb& fs, const TreeLinComb& ts) {
  ForestLinComb out;
  for (const auto& [f, cf] : fs)
    for (const auto& [t, ct] : ts) out += (cf * ct) * forest_act_pl(f, t);
  return out;
}

inline ForestLinComb forest_act_total(const ForestLinComb& fs, const TreeLinComb& ts) {
  ForestLinComb out;
  for (const auto& [f, cf] : fs)
    for (const auto& [t, ct] : ts) out += (cf * ct) * forest_act_total(f, t);
  return out;
}

/// Product of forests in S∘W (disjoint union), extended bilinearly.
inline ForestLinComb forest_product(const ForestLinComb& a, const ForestLinComb& b) {
  ForestLinComb out;
  for (const auto& [f, cf] : a)
    for (const auto& [g, cg] : b) out.add(f | g, cf * cg);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric group action

inline RootedTree apply_perm(const Permutation& sigma, const RootedTree& t) {
  for (Label l : labels_of(t.labels()))
    if (l > sigma.degree()) throw std::invalid_argument("permutation is not defined on the tree's labels");
  return RootedTree::from_forest(t.as_forest().relabeled(sigma));
}

inline TreeLinComb apply_perm(const Permutation& sigma, const TreeLinComb& a) {
  TreeLinComb out;
  for (const auto& [t, c] : a) out.add(apply_perm(sigma, t), c);
  return out;
}

/// Number of trees in `trees` fixed by sigma.
inline long count_fixed_trees(const Permutation& sigma, const std::vector<RootedTree>& trees) {
  long count = 0;
  for (const auto& t : trees)
    if (t.as_forest().relabeled(sigma) == t.as_forest()) ++count;
  return count;
}

/// Number of rooted trees on {1..n} fixed by sigma in S_n.
inline long count_fixed_trees(const Permutation& sigma, int n) {
  if (sigma.degree() != n) throw std::invalid_argument("permutation degree differs from n");
  if (n > 8) throw std::invalid_argument("fixed-tree counting is capped at n = 8");
  long count = 0;
  for_each_tree(first_labels(n), [&](const RootedTree& t) {
    if (t.as_forest().relabeled(sigma) == t.as_forest()) ++count;
  });
  return count;
}

// ---------------------------------------------------------------------------
// Text format

namespace detail {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  RootedTree tree() {
    const Label root = label();
    std::vector<RootedTree> kids;
    if (peek('(')) {
      ++pos_;
      kids.push_back(tree());
      while (peek(',')) {
        ++pos_;
        kids.push_back(tree());
      }
      expect(')');
    }
    return RootedTree(root, kids);
  }

  Forest forest() {
    expect('{');
    Forest f;
    if (!peek('}')) {
      f = f | tree().as_forest();
      while (peek(';')) {
        ++pos_;
        f = f | tree().as_forest();
      }
    }
    expect('}');
    return f;
  }

  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Label label() {
    skip_ws();
    int v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') v = v * 10 + (s_[pos_++] - '0');
    if (pos_ == start) fail("expected a label");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("tree syntax error at " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `1(2,3(4))`; children may be given in any order.
inline RootedTree parse_tree(std::string_view text) {
  detail::TreeParser p(text);
  RootedTree t = p.tree();
  p.finish();
  return t;
}

/// Parses `{1(2);3}`.
inline Forest parse_forest(std::string_view text) {
  detail::TreeParser p(text);
  Forest f = p.forest();
  p.finish();
  return f;
}

}  // namespace prelie

#endif  // PRELIE_TREES_HPP
