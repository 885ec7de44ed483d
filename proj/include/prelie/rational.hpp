#ifndef PRELIE_RATIONAL_HPP
#define PRELIE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace prelie {

/// Exact rational number with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses `a` or `a/b` (optional leading sign). Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

/// Integer power with the conventions 0^0 = 1 and b^-k = 1/b^k.
/// A negative exponent on a zero base throws std::domain_error.
inline Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    Rational inv = 1 / base;
    return power(inv, -exponent);
  }
  Rational result = 1;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  result.canonicalize();
  return result;
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Exact conversion to a machine integer; throws if not integral or out of range.
inline long to_long(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw std::domain_error("not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

}  // namespace prelie

#endif  // PRELIE_RATIONAL_HPP
