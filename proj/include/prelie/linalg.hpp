#ifndef PRELIE_LINALG_HPP
#define PRELIE_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Rational value;
};

/// Exact sparse rational matrix. Entries are kept sorted by (row, col),
/// without duplicates or stored zeros.
class SparseMatQ {
 public:
  SparseMatQ(int rows = 0, int cols = 0) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  /// Duplicate positions are summed; zeros are dropped.
  static SparseMatQ from_entries(int rows, int cols, std::vector<MatrixEntry> entries) {
    SparseMatQ m(rows, cols);
    for (const auto& e : entries)
      if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
        throw std::out_of_range("matrix entry outside " + std::to_string(rows) + "x" + std::to_string(cols));
    std::sort(entries.begin(), entries.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
    for (auto& e : entries) {
      if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
        m.entries_.back().value += e.value;
      } else {
        if (!m.entries_.empty() && m.entries_.back().value == 0) m.entries_.pop_back();
        m.entries_.push_back(std::move(e));
      }
    }
    if (!m.entries_.empty() && m.entries_.back().value == 0) m.entries_.pop_back();
    return m;
  }

  static SparseMatQ identity(int n) {
    std::vector<MatrixEntry> es;
    for (int i = 0; i < n; ++i) es.push_back({i, i, 1});
    return from_entries(n, n, std::move(es));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  SparseMatQ transpose() const {
    std::vector<MatrixEntry> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_) es.push_back({e.col, e.row, e.value});
    return from_entries(cols_, rows_, std::move(es));
  }

  /// `rows cols nnz` header, then `r c a/b` per entry in (r, c) order.
  std::string dump() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
    for (const auto& e : entries_) os << e.row << ' ' << e.col << ' ' << e.value.get_str() << '\n';
    return os.str();
  }

  static SparseMatQ parse_dump(const std::string& text) {
    std::istringstream is(text);
    int r = 0, c = 0;
    std::size_t nnz = 0;
    if (!(is >> r >> c >> nnz)) throw std::invalid_argument("malformed matrix header");
    std::vector<MatrixEntry> es;
    for (std::size_t i = 0; i < nnz; ++i) {
      MatrixEntry e;
      std::string v;
      if (!(is >> e.row >> e.col >> v)) throw std::invalid_argument("truncated matrix dump");
      e.value = parse_rational(v);
      es.push_back(std::move(e));
    }
    return from_entries(r, c, std::move(es));
  }

  friend bool operator==(const SparseMatQ& a, const SparseMatQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      const auto &x = a.entries_[i], &y = b.entries_[i];
      if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
    }
    return true;
  }

 private:
  int rows_;
  int cols_;
  std::vector<MatrixEntry> entries_;
};

inline SparseMatQ multiply(const SparseMatQ& a, const SparseMatQ& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::vector<std::vector<std::pair<int, const Rational*>>> b_rows(static_cast<std::size_t>(b.rows()));
  for (const auto& e : b.entries()) b_rows[e.row].emplace_back(e.col, &e.value);
  std::vector<MatrixEntry> out;
  for (const auto& e : a.entries())
    for (const auto& [col, v] : b_rows[e.col]) out.push_back({e.row, col, e.value * *v});
  return SparseMatQ::from_entries(a.rows(), b.cols(), std::move(out));
}

inline SparseMatQ add(const SparseMatQ& a, const SparseMatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch in add");
  std::vector<MatrixEntry> out = a.entries();
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return SparseMatQ::from_entries(a.rows(), a.cols(), std::move(out));
}

/// True iff A·B is the zero matrix.
inline bool compose_check(const SparseMatQ& a, const SparseMatQ& b) { return multiply(a, b).is_zero(); }

namespace detail {

/// Sparse Gaussian elimination returning the rank. Pivots are chosen in a
/// column of least remaining count, from its shortest row (Markowitz-style
/// fill control); ties go to the lowest column, then the lowest row.
///
/// Ops supplies the ring: `combine(pivot, target, col)` returns target with
/// the entry in `col` eliminated.
template <class T, class Ops>
int sparse_rank(std::vector<std::vector<std::pair<int, T>>> rows, int ncols, Ops& ops) {
  using Row = std::vector<std::pair<int, T>>;
  const int nrows = static_cast<int>(rows.size());
  std::vector<char> active(static_cast<std::size_t>(nrows), 1);
  std::vector<int> col_count(static_cast<std::size_t>(ncols), 0);
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(ncols));
  for (int i = 0; i < nrows; ++i)
    for (const auto& [c, v] : rows[i]) {
      ++col_count[c];
      col_rows[c].push_back(i);
    }
  auto has_col = [](const Row& row, int c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == c;
  };

  int rank = 0;
  std::vector<int> holders;
  while (true) {
    int best_col = -1;
    for (int c = 0; c < ncols; ++c)
      if (col_count[c] > 0 && (best_col < 0 || col_count[c] < col_count[best_col])) {
        best_col = c;
        if (col_count[c] == 1) break;
      }
    if (best_col < 0) break;

    holders.clear();
    for (int i : col_rows[best_col])
      if (active[i] && has_col(rows[i], best_col)) holders.push_back(i);
    std::sort(holders.begin(), holders.end());
    holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
    col_rows[best_col] = holders;

    int pivot = holders.front();
    for (int i : holders)
      if (rows[i].size() < rows[pivot].size()) pivot = i;

    for (int i : holders) {
      if (i == pivot) continue;
      Row updated = ops.combine(rows[pivot], rows[i], best_col);
      for (const auto& [c, v] : rows[i]) --col_count[c];
      for (const auto& [c, v] : updated) {
        ++col_count[c];
        if (!has_col(rows[i], c)) col_rows[c].push_back(i);
      }
      rows[i] = std::move(updated);
    }
    for (const auto& [c, v] : rows[pivot]) --col_count[c];
    active[pivot] = 0;
    Row().swap(rows[pivot]);
    ++rank;
  }
  return rank;
}

/// Fraction-free integer row operations with content removal.
struct IntegerOps {
  using Row = std::vector<std::pair<int, Integer>>;
  static Integer entry(const Row& row, int col) {
    for (const auto& [c, v] : row)
      if (c == col) return v;
    return 0;
  }
  Row combine(const Row& pivot, const Row& target, int col) const {
    const Integer a = entry(pivot, col), b = entry(target, col);
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Integer fa = a / g, fb = b / g;
    Row out;
    out.reserve(pivot.size() + target.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      int c;
      Integer v;
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        c = target[i].first;
        v = fa * target[i++].second;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        c = pivot[j].first;
        v = -fb * pivot[j++].second;
      } else {
        c = target[i].first;
        v = fa * target[i++].second - fb * pivot[j++].second;
      }
      if (v != 0) out.emplace_back(c, std::move(v));
    }
    Integer content = 0;
    for (const auto& [c, v] : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
      for (auto& [c, v] : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
  }
};

struct ModularOps {
  using Row = std::vector<std::pair<int, std::uint32_t>>;
  std::uint64_t p;

  std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1U) r = r * b % p;
      b = b * b % p;
      e >>= 1U;
    }
    return r;
  }
  std::uint64_t inverse(std::uint64_t a) const { return pow_mod(a, p - 2); }

  Row combine(const Row& pivot, const Row& target, int col) const {
    std::uint64_t a = 0, b = 0;
    for (const auto& [c, v] : pivot)
      if (c == col) a = v;
    for (const auto& [c, v] : target)
      if (c == col) b = v;
    const std::uint64_t factor = b * inverse(a) % p;
    Row out;
    out.reserve(pivot.size() + target.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      int c;
      std::uint64_t v;
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        c = target[i].first;
        v = target[i++].second;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        c = pivot[j].first;
        v = (p - factor * pivot[j++].second % p) % p;
      } else {
        c = target[i].first;
        v = (target[i++].second + p - factor * pivot[j++].second % p) % p;
      }
      if (v != 0) out.emplace_back(c, static_cast<std::uint32_t>(v));
    }
    return out;
  }
};

}  // namespace detail

/// Exact rank over the rationals by fraction-free elimination.
inline int rank(const SparseMatQ& m) {
  std::vector<detail::IntegerOps::Row> rows(static_cast<std::size_t>(m.rows()));
  std::vector<Integer> row_lcm(static_cast<std::size_t>(m.rows()), 1);
  for (const auto& e : m.entries())
    mpz_lcm(row_lcm[e.row].get_mpz_t(), row_lcm[e.row].get_mpz_t(), e.value.get_den_mpz_t());
  for (const auto& e : m.entries()) rows[e.row].emplace_back(e.col, e.value.get_num() * (row_lcm[e.row] / e.value.get_den()));
  detail::IntegerOps ops;
  return detail::sparse_rank(std::move(rows), m.cols(), ops);
}

/// Rank modulo a prime below 2^31; nullopt if a denominator vanishes mod p.
/// Always a lower bound for the rational rank.
inline std::optional<int> rank_mod_prime(const SparseMatQ& m, std::uint32_t prime) {
  detail::ModularOps ops{prime};
  std::vector<detail::ModularOps::Row> rows(static_cast<std::size_t>(m.rows()));
  const Integer p = prime;
  for (const auto& e : m.entries()) {
    Integer num = e.value.get_num() % p, den = e.value.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) return std::nullopt;
    const std::uint64_t v = num.get_ui() * ops.inverse(den.get_ui()) % prime;
    if (v != 0) rows[e.row].emplace_back(e.col, static_cast<std::uint32_t>(v));
  }
  return detail::sparse_rank(std::move(rows), m.cols(), ops);
}

inline constexpr std::uint32_t kRankPrimes[] = {2147483647U, 2147483629U, 2147483587U};

struct MultiModularRank {
  int rank = 0;                 // maximum over the primes, a lower bound
  std::vector<int> per_prime;   // -1 where the prime divides a denominator
  bool agreed = false;          // at least two primes attain `rank`
};

/// Ranks modulo `primes` word-size primes.
inline MultiModularRank rank_multimodular(const SparseMatQ& m, int primes = 2) {
  MultiModularRank r;
  for (int i = 0; i < primes && i < static_cast<int>(std::size(kRankPrimes)); ++i) {
    const auto rk = rank_mod_prime(m, kRankPrimes[i]);
    r.per_prime.push_back(rk.value_or(-1));
    r.rank = std::max(r.rank, rk.value_or(0));
  }
  r.agreed = std::count(r.per_prime.begin(), r.per_prime.end(), r.rank) >= 2;
  return r;
}

inline int image_dim(const SparseMatQ& m) { return rank(m); }
inline int kernel_dim(const SparseMatQ& m) { return m.cols() - rank(m); }

}  // namespace prelie

#endif  // PRELIE_LINALG_HPP
