#ifndef PRELIE_SERIES_HPP
#define PRELIE_SERIES_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "prelie/poly.hpp"
#include "prelie/report.hpp"

namespace prelie {

/// Truncated exponential generating series in x whose coefficients are
/// polynomials in s and t. Entry n is the coefficient of x^n / n!.
class Series2 {
 public:
  explicit Series2(int truncation = 0) : coeffs_(static_cast<std::size_t>(check_truncation(truncation)) + 1) {}

  static Series2 constant(const Poly& c, int truncation) {
    Series2 r(truncation);
    r.coeffs_[0] = c;
    return r;
  }
  static Series2 x(int truncation) {
    Series2 r(truncation);
    if (truncation >= 1) r.coeffs_[1] = Poly(1);
    return r;
  }

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Poly& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  Series2 truncated(int n) const {
    Series2 r(std::min(n, truncation()));
    for (int i = 0; i <= r.truncation(); ++i) r.coeffs_[i] = coeffs_[i];
    return r;
  }

  friend Series2 operator+(const Series2& a, const Series2& b) {
    Series2 r(std::min(a.truncation(), b.truncation()));
    for (int n = 0; n <= r.truncation(); ++n) r.coeffs_[n] = a[n] + b[n];
    return r;
  }
  friend Series2 operator-(const Series2& a, const Series2& b) {
    Series2 r(std::min(a.truncation(), b.truncation()));
    for (int n = 0; n <= r.truncation(); ++n) r.coeffs_[n] = a[n] - b[n];
    return r;
  }
  friend Series2 operator-(const Series2& a) { return Series2(a.truncation()) - a; }
  friend Series2 operator*(const Poly& c, const Series2& a) {
    Series2 r(a.truncation());
    for (int n = 0; n <= r.truncation(); ++n) r.coeffs_[n] = c * a[n];
    return r;
  }
  /// Binomial convolution, the product of EGFs.
  friend Series2 operator*(const Series2& a, const Series2& b) {
    Series2 r(std::min(a.truncation(), b.truncation()));
    for (int n = 0; n <= r.truncation(); ++n) {
      Poly acc;
      for (int k = 0; k <= n; ++k) {
        if (a[k].is_zero() || b[n - k].is_zero()) continue;
        acc += Poly(Rational(binomial(n, k))) * a[k] * b[n - k];
      }
      r.coeffs_[n] = acc;
    }
    return r;
  }
  friend bool operator==(const Series2& a, const Series2& b) { return a.coeffs_ == b.coeffs_; }

  /// d/dx; the truncation drops by one.
  Series2 derivative() const {
    Series2 r(std::max(0, truncation() - 1));
    for (int n = 0; n + 1 <= truncation(); ++n) r.coeffs_[n] = coeffs_[n + 1];
    return r;
  }

  Series2 times_x() const {
    Series2 r(truncation());
    for (int n = 1; n <= truncation(); ++n) r.coeffs_[n] = Poly(n) * coeffs_[n - 1];
    return r;
  }

  Series2 substitute_t(const Rational& value) const {
    Series2 r(truncation());
    for (int n = 0; n <= truncation(); ++n) r.coeffs_[n] = coeffs_[n].substitute_t(value);
    return r;
  }
  Series2 substitute_s(const Rational& value) const {
    Series2 r(truncation());
    for (int n = 0; n <= truncation(); ++n) r.coeffs_[n] = coeffs_[n].substitute_s(value);
    return r;
  }
  Series2 coeff_s(int k) const {
    Series2 r(truncation());
    for (int n = 0; n <= truncation(); ++n) r.coeffs_[n] = coeffs_[n].coeff_s(k);
    return r;
  }

  /// One `n: <polynomial>` line per coefficient.
  std::string to_string() const {
    std::ostringstream os;
    for (int n = 0; n <= truncation(); ++n) os << n << ": " << coeffs_[n].to_string() << '\n';
    return os.str();
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["truncation"] = truncation();
    auto& cs = j["coefficients"] = nlohmann::ordered_json::array();
    for (int n = 0; n <= truncation(); ++n) cs.push_back({{"n", n}, {"coeff", coeffs_[n].to_string()}});
    return j;
  }

 private:
  static int check_truncation(int n) {
    if (n < 0) throw std::invalid_argument("negative truncation");
    return n;
  }

  std::vector<Poly> coeffs_;
};

inline Series2 exp_series(const Series2& f) {
  if (!f[0].is_zero()) throw std::invalid_argument("exp_series needs a zero constant term");
  Series2 e(f.truncation());
  e[0] = Poly(1);
  for (int n = 1; n <= f.truncation(); ++n) {
    Poly acc;
    for (int k = 1; k <= n; ++k)
      if (!f[k].is_zero()) acc += Poly(Rational(binomial(n - 1, k - 1))) * f[k] * e[n - k];
    e[n] = acc;
  }
  return e;
}

inline Series2 log_series(const Series2& g) {
  if (!(g[0] == Poly(1))) throw std::invalid_argument("log_series needs constant term 1");
  Series2 l(g.truncation());
  for (int n = 1; n <= g.truncation(); ++n) {
    Poly acc = g[n];
    for (int k = 1; k < n; ++k)
      if (!l[k].is_zero()) acc -= Poly(Rational(binomial(n - 1, k - 1))) * l[k] * g[n - k];
    l[n] = acc;
  }
  return l;
}

/// F(G(x)) for G without constant term.
inline Series2 compose_in_x(const Series2& f, const Series2& g) {
  if (!g[0].is_zero()) throw std::invalid_argument("compose_in_x needs an inner series without constant term");
  const int n = std::min(f.truncation(), g.truncation());
  Series2 result(n);
  Series2 gpow = Series2::constant(Poly(1), n);
  for (int k = 0; k <= n; ++k) {
    if (!f[k].is_zero()) result = result + (f[k] * Poly(Rational(1, 1) / Rational(factorial(k)))) * gpow;
    gpow = gpow * g;
  }
  return result;
}

/// sum_{n>=1} n^{n-1} x^n/n!
inline Series2 fW(int n) {
  Series2 r(n);
  for (int k = 1; k <= n; ++k) r[k] = Poly(power(Rational(k), k - 1));
  return r;
}

/// sum_{n>=1} (n-1)^{n-1} x^n/n!, with 0^0 = 1.
inline Series2 fX(int n) {
  Series2 r(n);
  for (int k = 1; k <= n; ++k) r[k] = Poly(power(Rational(k - 1), k - 1));
  return r;
}

/// Compares coefficientwise up to `max_degree`, recording the first mismatch.
inline void compare_series(CheckReport& report, const Series2& lhs, const Series2& rhs, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    if (n > lhs.truncation() || n > rhs.truncation()) {
      report.fail_with("series truncated below degree " + std::to_string(max_degree));
      return;
    }
    if (!(lhs[n] == rhs[n])) {
      report.fail({n, {}, lhs[n].to_string(), rhs[n].to_string()});
      return;
    }
  }
}

/// f_W = x e^{f_W}.
inline CheckReport lambert_functional_equation_check(int n) {
  CheckReport r{"lambert_functional_equation", n};
  const Series2 w = fW(n);
  compare_series(r, w, (exp_series(w)).times_x(), n);
  return r;
}

/// e^{(s-t) f_W} = 1 + (s-t) sum_{n>=1} (n+s-t)^{n-1} x^n/n!.
inline CheckReport bicomplex_series_identity(int n) {
  if (n > 12) throw std::invalid_argument("bicomplex_series_identity is capped at degree 12");
  CheckReport r{"bicomplex_series_identity", n};
  const Poly st = Poly::s() - Poly::t();
  const Series2 lhs = exp_series(st * fW(n));
  Series2 rhs = Series2::constant(Poly(1), n);
  for (int k = 1; k <= n; ++k) rhs[k] = st * (Poly(k) + st).pow(static_cast<unsigned>(k - 1));
  compare_series(r, lhs, rhs, n);
  return r;
}

/// Expected s^p coefficient of x^n/n! in e^{(s-1) f_W}, i.e. the signed
/// dimension of H(n,p,*): -(n-1)^{n-1} for p = 0, and
/// C(n,p)(p-1)(n-1)^{n-p-1} for 1 <= p <= n with the p = n term equal to 1.
inline Rational euler_row_prediction(int n, int p) {
  if (n == 0) return p == 0 ? 1 : 0;
  if (p == 0) return -power(Rational(n - 1), n - 1);
  if (p > n) return 0;
  if (p == n) return 1;
  return Rational(binomial(n, p)) * Rational(p - 1) * power(Rational(n - 1), n - p - 1);
}

/// The t = 1 specialization, and its s-coefficients against the homology
/// dimension formulas.
inline CheckReport euler_characteristic_series(int n) {
  if (n > 12) throw std::invalid_argument("euler_characteristic_series is capped at degree 12");
  CheckReport r{"euler_characteristic_series", n};
  const Poly s1 = Poly::s() - Poly(1);
  const Series2 lhs = exp_series(s1 * fW(n));
  Series2 rhs = Series2::constant(Poly(1), n);
  for (int k = 1; k <= n; ++k) rhs[k] = s1 * (Poly(k) + s1).pow(static_cast<unsigned>(k - 1));
  compare_series(r, lhs, rhs, n);
  if (!r.ok) return r;
  for (int k = 1; k <= n; ++k) {
    for (int p = 0; p <= k; ++p) {
      const Rational got = lhs[k].coeff(p, 0);
      const Rational want = euler_row_prediction(k, p);
      if (got != want) {
        r.fail({k, {p}, got.get_str(), want.get_str()});
        r.details = "s^p coefficient mismatch (partition field holds p)";
        return r;
      }
    }
  }
  return r;
}

/// (n-1)^{n-1} = sum_{p=1}^n C(n,p)(p-1)(n-1)^{n-p-1}; vacuously true at n = 1.
inline bool cayley_identity_check(int n) {
  if (n < 1 || n > 15) throw std::invalid_argument("cayley_identity_check needs 1 <= n <= 15");
  if (n == 1) return true;
  Rational sum = 0;
  for (int p = 1; p <= n; ++p) sum += Rational(binomial(n, p)) * Rational(p - 1) * power(Rational(n - 1), n - p - 1);
  return sum == power(Rational(n - 1), n - 1);
}

/// -log(1 - f_X) = f_W, e^{-f_W} = 1 - f_X, f'_X = 1 + x f'_W and
/// f'_W = e^{f_W} + x f'_W e^{f_W}.
inline CheckReport freeness_series_check(int n) {
  if (n > 15) throw std::invalid_argument("freeness_series_check is capped at degree 15");
  CheckReport r{"freeness_series_check", n};
  const Series2 w = fW(n), x = fX(n), one = Series2::constant(Poly(1), n);
  compare_series(r, -log_series(one - x), w, n);
  if (r.ok) compare_series(r, exp_series(-w), one - x, n);
  const Series2 dw = w.derivative(), dx = x.derivative();
  if (r.ok) compare_series(r, dx, Series2::constant(Poly(1), n - 1) + dw.times_x(), n - 1);
  if (r.ok) {
    const Series2 ew = exp_series(w).truncated(n - 1);
    compare_series(r, dw, ew + (dw * ew).times_x(), n - 1);
  }
  return r;
}

}  // namespace prelie

#endif  // PRELIE_SERIES_HPP
