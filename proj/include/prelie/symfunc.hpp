#ifndef PRELIE_SYMFUNC_HPP
#define PRELIE_SYMFUNC_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prelie/lincomb.hpp"
#include "prelie/partition.hpp"
#include "prelie/poly.hpp"
#include "prelie/report.hpp"
#include "prelie/series.hpp"

namespace prelie {

/// Symmetric function in the power-sum basis, truncated at a degree.
///
/// C is the coefficient ring: Rational, or Poly when the function carries
/// the grading parameters s and t. Terms of degree above the truncation
/// are never stored.
template <class C>
class SymFunction {
 public:
  explicit SymFunction(int truncation = 0) : truncation_(truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
  }

  static SymFunction one(int truncation) { return monomial(Partition{}, C(1), truncation); }
  static SymFunction p(int k, int truncation) { return monomial(Partition{k}, C(1), truncation); }
  static SymFunction monomial(const Partition& lambda, const C& c, int truncation) {
    SymFunction f(truncation);
    f.add(lambda, c);
    return f;
  }

  int truncation() const { return truncation_; }
  const std::map<Partition, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& lambda, const C& c) {
    if (lambda.size() > truncation_ || prelie::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (prelie::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? C(0) : it->second;
  }

  SymFunction homogeneous(int d) const {
    SymFunction r(truncation_);
    for (const auto& [l, c] : terms_)
      if (l.size() == d) r.terms_.emplace(l, c);
    return r;
  }

  SymFunction truncated(int n) const {
    SymFunction r(std::min(n, truncation_));
    for (const auto& [l, c] : terms_)
      if (l.size() <= r.truncation_) r.terms_.emplace(l, c);
    return r;
  }

  /// Applies `op` to every coefficient, dropping terms that become zero.
  template <class Op>
  SymFunction map_coeffs(Op op) const {
    SymFunction r(truncation_);
    for (const auto& [l, c] : terms_) r.add(l, op(l, c));
    return r;
  }

  friend SymFunction operator+(const SymFunction& a, const SymFunction& b) {
    SymFunction r = a.truncated(std::min(a.truncation_, b.truncation_));
    for (const auto& [l, c] : b.terms_) r.add(l, c);
    return r;
  }
  friend SymFunction operator-(const SymFunction& a, const SymFunction& b) {
    SymFunction r = a.truncated(std::min(a.truncation_, b.truncation_));
    for (const auto& [l, c] : b.terms_) r.add(l, -c);
    return r;
  }
  friend SymFunction operator*(const C& s, const SymFunction& a) {
    return a.map_coeffs([&s](const Partition&, const C& c) -> C { return s * c; });
  }
  /// Coefficientwise equality; truncations are not compared.
  friend bool operator==(const SymFunction& a, const SymFunction& b) { return a.terms_ == b.terms_; }

  /// `1/2*p[1,1] + 1/2*p[2]`; zero prints as `0`.
  std::string to_string() const {
    std::string out;
    for (const auto& [l, c] : terms_) {
      const std::string body = "p" + l.to_string();
      if constexpr (std::is_same_v<C, Rational>) {
        detail::append_term(out, c, body);
      } else {
        if (c.terms().size() == 1 && c.terms().begin()->first == Poly::Exponents{0, 0}) {
          detail::append_term(out, c.coeff(0, 0), body);
        } else {
          if (!out.empty()) out += " + ";
          out += "(" + c.to_string() + ")*" + body;
        }
      }
    }
    return out.empty() ? "0" : out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["degree"] = truncation_;
    auto& ts = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [l, c] : terms_) ts.push_back({{"partition", l.parts()}, {"coeff", coeff_string(c)}});
    return j;
  }

 private:
  int truncation_;
  std::map<Partition, C> terms_;
};

using SymF = SymFunction<Rational>;
using SymFT = SymFunction<Poly>;

inline SymFT lift(const SymF& f) {
  SymFT r(f.truncation());
  for (const auto& [l, c] : f.terms()) r.add(l, Poly(c));
  return r;
}

/// Parses the text format produced by SymF::to_string.
inline SymF parse_symf(std::string_view text, int truncation) {
  SymF f(truncation);
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s == "0") return f;
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    const std::size_t p_at = s.find('p', pos);
    if (p_at == std::string::npos) throw std::invalid_argument("expected p[...] in '" + std::string(text) + "'");
    Rational c = 1;
    if (p_at > pos) {
      if (s[p_at - 1] != '*') throw std::invalid_argument("expected '*' before p[...]");
      c = parse_rational(std::string_view(s).substr(pos, p_at - 1 - pos));
    }
    const std::size_t close = s.find(']', p_at);
    if (p_at + 1 >= s.size() || s[p_at + 1] != '[' || close == std::string::npos)
      throw std::invalid_argument("malformed partition in '" + std::string(text) + "'");
    std::vector<int> parts;
    std::string body = s.substr(p_at + 2, close - p_at - 2);
    std::size_t b = 0;
    while (b < body.size()) {
      std::size_t e = body.find(',', b);
      if (e == std::string::npos) e = body.size();
      parts.push_back(std::stoi(body.substr(b, e - b)));
      b = e + 1;
    }
    const Partition lambda(parts);
    if (lambda.size() > truncation) throw std::invalid_argument("term above truncation degree");
    f.add(lambda, sign * c);
    pos = close + 1;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Ring operations

template <class C>
SymFunction<C> sf_mul(const SymFunction<C>& f, const SymFunction<C>& g, int n) {
  const int trunc = std::min({n, f.truncation(), g.truncation()});
  SymFunction<C> r(trunc);
  for (const auto& [a, ca] : f.terms()) {
    if (a.size() > trunc) break;
    for (const auto& [b, cb] : g.terms()) {
      if (a.size() + b.size() > trunc) break;
      r.add(a + b, ca * cb);
    }
  }
  return r;
}

template <class C>
SymFunction<C> sf_pow(const SymFunction<C>& f, unsigned e, int n) {
  SymFunction<C> r = SymFunction<C>::one(std::min(n, f.truncation()));
  for (unsigned i = 0; i < e; ++i) r = sf_mul(r, f, n);
  return r;
}

/// exp(F) = sum_k F^k/k! for F without constant term.
template <class C>
SymFunction<C> sf_exp(const SymFunction<C>& f, int n) {
  if (!is_zero(f.coeff(Partition{}))) throw std::invalid_argument("sf_exp needs a zero constant term");
  const int trunc = std::min(n, f.truncation());
  SymFunction<C> result = SymFunction<C>::one(trunc);
  SymFunction<C> term = SymFunction<C>::one(trunc);
  for (int k = 1; k <= trunc; ++k) {
    term = sf_mul(term, f, trunc);
    term = C(Rational(1, k)) * term;
    result = result + term;
  }
  return result;
}

/// log(F) = sum_k (-1)^{k+1} (F-1)^k/k for F with constant term 1.
template <class C>
SymFunction<C> sf_log(const SymFunction<C>& f, int n) {
  if (!(f.coeff(Partition{}) == C(1))) throw std::invalid_argument("sf_log needs constant term 1");
  const int trunc = std::min(n, f.truncation());
  const SymFunction<C> g = f - SymFunction<C>::one(trunc);
  SymFunction<C> result(trunc);
  SymFunction<C> gk = SymFunction<C>::one(trunc);
  for (int k = 1; k <= trunc; ++k) {
    gk = sf_mul(gk, g, trunc);
    result = result + C(Rational(k % 2 == 1 ? 1 : -1, k)) * gk;
  }
  return result;
}

/// p_k ∘ G: every p_j becomes p_{jk}, coefficients undergo the Adams operation.
template <class C>
SymFunction<C> adams_substitute(const SymFunction<C>& g, int k, int n) {
  const int trunc = std::min(n, g.truncation() * k);
  SymFunction<C> r(trunc);
  for (const auto& [l, c] : g.terms()) r.add(l.scaled(k), adams(c, k));
  return r;
}

/// F ∘ G, truncated at min(n, trunc F, trunc G).
template <class C>
SymFunction<C> plethysm(const SymFunction<C>& f, const SymFunction<C>& g, int n) {
  if (!is_zero(g.coeff(Partition{}))) throw std::invalid_argument("plethysm needs an inner function without constant term");
  const int trunc = std::min({n, f.truncation(), g.truncation()});
  // power_cache[k][e] = (p_k ∘ G)^e
  std::vector<std::vector<SymFunction<C>>> power_cache(static_cast<std::size_t>(trunc) + 1);
  auto power_of = [&](int k, int e) -> const SymFunction<C>& {
    auto& row = power_cache[k];
    if (row.empty()) {
      row.push_back(SymFunction<C>::one(trunc));
      row.push_back(adams_substitute(g, k, trunc));
    }
    while (static_cast<int>(row.size()) <= e) row.push_back(sf_mul(row.back(), row[1], trunc));
    return row[e];
  };
  SymFunction<C> r(trunc);
  for (const auto& [lambda, c] : f.terms()) {
    if (lambda.size() > trunc) break;
    SymFunction<C> term = SymFunction<C>::one(trunc);
    for (int k = 1; k <= lambda.largest(); ++k) {
      const int m = lambda.multiplicity(k);
      if (m > 0) term = sf_mul(term, power_of(k, m), trunc);
    }
    r = r + c * term;
  }
  return r;
}

/// The constant-free Z with F ∘ Z = target, for F = p_1 + (degree >= 2).
template <class C>
SymFunction<C> plethystic_solve(const SymFunction<C>& f, const SymFunction<C>& target, int n) {
  if (!is_zero(f.coeff(Partition{})) || !(f.coeff(Partition{1}) == C(1)))
    throw std::invalid_argument("plethystic inversion needs F = p1 + higher-degree terms");
  for (const auto& [l, c] : f.terms())
    if (l.size() == 1 && l != Partition{1}) throw std::invalid_argument("unexpected degree-1 term");
  const int trunc = std::min({n, f.truncation(), target.truncation()});
  SymFunction<C> z(trunc);
  for (int d = 1; d <= trunc; ++d) {
    const SymFunction<C> gap = (target - plethysm(f, z, d)).homogeneous(d);
    for (const auto& [l, c] : gap.terms()) z.add(l, c);
  }
  return z;
}

/// G with F ∘ G = G ∘ F = p_1 up to degree n.
template <class C>
SymFunction<C> plethystic_inverse(const SymFunction<C>& f, int n) {
  return plethystic_solve(f, SymFunction<C>::p(1, n), n);
}

/// p_1 ∂/∂p_1 - Id: p_λ is scaled by (m_1(λ) - 1).
template <class C>
SymFunction<C> p1_partial_operator(const SymFunction<C>& f) {
  return f.map_coeffs([](const Partition& l, const C& c) -> C { return C(Rational(l.multiplicity(1) - 1)) * c; });
}

// ---------------------------------------------------------------------------
// Characters

/// Class function on S_n, keyed by cycle type.
struct ClassFunction {
  int n = 0;
  std::map<Partition, Rational> values;

  Rational operator()(const Partition& l) const {
    auto it = values.find(l);
    return it == values.end() ? Rational(0) : it->second;
  }
  Rational dimension() const { return (*this)(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))); }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// χ(λ) = z_λ [p_λ] F on the degree-n part.
inline ClassFunction character_values(const SymF& f, int n) {
  ClassFunction chi{n, {}};
  for (const Partition& l : partitions_of(n)) chi.values[l] = Rational(l.z()) * f.coeff(l);
  return chi;
}

/// Frobenius characteristic sum_λ χ(λ) p_λ / z_λ.
inline SymF characteristic(const ClassFunction& chi, int truncation) {
  SymF f(truncation);
  for (const auto& [l, v] : chi.values) f.add(l, v / Rational(l.z()));
  return f;
}

/// Irreducible characters of S_n via the Murnaghan–Nakayama rule, memoized
/// per instance. Not shared between threads.
class CharacterTable {
 public:
  /// χ^shape evaluated at cycle type `type` (|shape| = |type|).
  long operator()(const Partition& shape, const Partition& type) {
    if (shape.size() != type.size()) throw std::invalid_argument("shape and cycle type differ in size");
    return eval(shape.parts(), type.parts());
  }

 private:
  long eval(const std::vector<int>& shape, std::vector<int> type) {
    if (type.empty()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, type);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int k = type.front();
    type.erase(type.begin());
    // Beta numbers β_i = shape_i + (ℓ - 1 - i); a border strip of length k
    // is a bead moved from β to β - k onto an empty position.
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);
    long total = 0;
    for (int i = 0; i < len; ++i) {
      const int target = beta[i] - k;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++between;
      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      for (int j = 0; j < len; ++j) {
        const int part = moved[j] - (len - 1 - j);
        if (part > 0) smaller.push_back(part);
      }
      const long sub = eval(smaller, type);
      total += (between % 2 == 0 ? 1 : -1) * sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo_;
};

/// Multiplicity of each irreducible S^μ in the degree-n part of F:
/// <F, s_μ> = sum_λ χ^μ(λ) [p_λ] F.
template <class C>
std::map<Partition, C> schur_decompose(const SymFunction<C>& f, int n) {
  if (n > 8) throw std::invalid_argument("schur_decompose is capped at n = 8");
  CharacterTable table;
  std::map<Partition, C> out;
  const auto parts = partitions_of(n);
  for (const Partition& mu : parts) {
    C acc(0);
    for (const Partition& l : parts) {
      const C c = f.coeff(l);
      if (is_zero(c)) continue;
      acc += C(Rational(table(mu, l))) * c;
    }
    out.emplace(mu, acc);
  }
  return out;
}

/// Exponential generating series of dimensions: p_1 -> x, p_k -> 0 for
/// k >= 2. Entry n is n! [p_1^n] F.
template <class C>
Series2 eg_series(const SymFunction<C>& f, int n) {
  const int trunc = std::min(n, f.truncation());
  Series2 r(trunc);
  for (int k = 0; k <= trunc; ++k) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(k), 1));
    r[k] = Poly(Rational(factorial(static_cast<unsigned>(k)))) * Poly(f.coeff(ones));
  }
  return r;
}

/// First mismatch between two symmetric functions up to `max_degree`.
template <class C>
std::optional<Discrepancy> first_discrepancy(const SymFunction<C>& a, const SymFunction<C>& b, int max_degree) {
  for (const Partition& l : partitions_up_to(max_degree)) {
    const C ca = a.coeff(l), cb = b.coeff(l);
    if (!(ca == cb)) return Discrepancy{l.size(), l.parts(), coeff_string(ca), coeff_string(cb)};
  }
  return std::nullopt;
}

}  // namespace prelie

#endif  // PRELIE_SYMFUNC_HPP
