#ifndef PRELIE_POLY_HPP
#define PRELIE_POLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "prelie/rational.hpp"

namespace prelie {

/// Polynomial in two commuting parameters s and t with rational coefficients.
///
/// s tracks the number of forest components and t the exterior degree of
/// the bicomplex. Under plethysm both behave as rank-one variables, so the
/// Adams operation sends s -> s^k and t -> t^k.
class Poly {
 public:
  using Exponents = std::pair<int, int>;  // (deg_s, deg_t)

  Poly() = default;
  Poly(const Rational& c) { add(0, 0, c); }  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}        // NOLINT(google-explicit-constructor)

  static Poly s() { return monomial(1, 0, 1); }
  static Poly t() { return monomial(0, 1, 1); }
  static Poly monomial(int ds, int dt, const Rational& c) {
    Poly p;
    p.add(ds, dt, c);
    return p;
  }

  void add(int ds, int dt, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({ds, dt}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(int ds, int dt) const {
    auto it = terms_.find({ds, dt});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// The constant term, or throws if the polynomial involves s or t.
  Rational as_rational() const {
    for (const auto& [e, c] : terms_)
      if (e != Exponents{0, 0}) throw std::domain_error("polynomial is not constant: " + to_string());
    return coeff(0, 0);
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned e) const {
    Poly r(1), base = *this;
    while (e) {
      if (e & 1U) r *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return r;
  }

  /// s -> s^k, t -> t^k.
  Poly adams(int k) const {
    Poly r;
    for (const auto& [e, c] : terms_) r.add(e.first * k, e.second * k, c);
    return r;
  }

  Poly substitute_t(const Rational& value) const {
    Poly r;
    for (const auto& [e, c] : terms_) r.add(e.first, 0, c * power(value, e.second));
    return r;
  }
  Poly substitute_s(const Rational& value) const {
    Poly r;
    for (const auto& [e, c] : terms_) r.add(0, e.second, c * power(value, e.first));
    return r;
  }

  /// Coefficient of s^k, as a polynomial in t.
  Poly coeff_s(int k) const {
    Poly r;
    for (const auto& [e, c] : terms_)
      if (e.first == k) r.add(0, e.second, c);
    return r;
  }

  int degree_s() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }

  /// e.g. `-t + 1/2*t^2`; zero prints as `0`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      auto var = [&mono](char v, int d) {
        if (d == 0) return;
        if (!mono.empty()) mono += '*';
        mono += v;
        if (d != 1) mono += '^' + std::to_string(d);
      };
      var('s', e.first);
      var('t', e.second);
      if (mono.empty()) {
        os << mag.get_str();
      } else if (mag == 1) {
        os << mono;
      } else {
        os << mag.get_str() << '*' << mono;
      }
    }
    return os.str();
  }

 private:
  std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline const Rational& adams(const Rational& q, int) { return q; }
inline Poly adams(const Poly& p, int k) { return p.adams(k); }
inline std::string coeff_string(const Rational& q) { return q.get_str(); }
inline std::string coeff_string(const Poly& p) { return p.to_string(); }

}  // namespace prelie

#endif  // PRELIE_POLY_HPP
