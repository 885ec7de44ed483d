#ifndef PRELIE_LINCOMB_HPP
#define PRELIE_LINCOMB_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "prelie/rational.hpp"

namespace prelie {

namespace detail {

/// Appends `coeff*body` to a sum being printed; unit coefficients are
/// omitted and negative ones are joined with " - ".
inline void append_term(std::string& out, const Rational& coeff, const std::string& body) {
  const bool negative = coeff < 0;
  const Rational mag = abs(coeff);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mag != 1) out += mag.get_str() + "*";
  out += body;
}

}  // namespace detail

/// Finite formal combination of keys with nonzero rational coefficients.
/// Keys exposing `labels()` must all carry the same label set.
template <class Key>
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Key& k, const Rational& c = 1) { add(k, c); }

  void add(const Key& key, const Rational& c) {
    if (c == 0) return;
    if constexpr (requires { key.labels(); }) {
      if (!terms_.empty() && terms_.begin()->first.labels() != key.labels())
        throw std::invalid_argument("linear combination mixes label sets");
    }
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, const LinComb& a) {
    LinComb r;
    if (s == 0) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, s * c);
    return r;
  }
  friend bool operator==(const LinComb&, const LinComb&) = default;

  /// `c1*T1 + c2*T2`, zero prints as `0`.
  std::string to_string() const {
    std::string out;
    for (const auto& [k, c] : terms_) detail::append_term(out, c, k.to_string());
    return out.empty() ? "0" : out;
  }

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace prelie

#endif  // PRELIE_LINCOMB_HPP
