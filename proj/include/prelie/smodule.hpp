#ifndef PRELIE_SMODULE_HPP
#define PRELIE_SMODULE_HPP

#include <stdexcept>
#include <string>

#include "prelie/symfunc.hpp"
#include "prelie/trees.hpp"

namespace prelie {

enum class Provenance { functional_equation, closed_formula, burnside, plethystic_inversion };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::functional_equation: return "functional_equation";
    case Provenance::closed_formula: return "closed_formula";
    case Provenance::burnside: return "burnside";
    case Provenance::plethystic_inversion: return "plethystic_inversion";
  }
  return "unknown";
}

/// A cycle index together with how it was obtained.
struct CycleIndexTable {
  std::string name;
  SymF value;
  int truncation_degree = 0;
  Provenance provenance = Provenance::closed_formula;
};

namespace detail {
inline void check_cap(const char* what, int n, int cap) {
  if (n < 0 || n > cap)
    throw std::invalid_argument(std::string(what) + " needs 0 <= N <= " + std::to_string(cap));
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}
}  // namespace detail

/// Trivial modules: exp(sum_k p_k/k), degree n part is h_n.
inline SymF zS(int n) {
  SymF g(n);
  for (int k = 1; k <= n; ++k) g.add(Partition{k}, Rational(1, k));
  return sf_exp(g, n);
}

/// Regular representations: sum_n p_1^n.
inline SymF zT(int n) {
  SymF f(n);
  for (int k = 0; k <= n; ++k) f.add(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), 1);
  return f;
}

/// Exterior powers weighted by (-t)^q: sum_q (-t)^q e_q.
inline SymFT zLambda(int n) {
  SymFT f(n);
  for (int q = 0; q <= n; ++q) {
    const Poly weight = (-Poly::t()).pow(static_cast<unsigned>(q));
    for (const Partition& l : partitions_of(q)) {
      const int sign = (q - l.length()) % 2 == 0 ? 1 : -1;
      f.add(l, weight * Poly(Rational(sign) / Rational(l.z())));
    }
  }
  return f;
}

/// Rooted trees: the fixed point Z = p_1 exp(sum_k (p_k ∘ Z)/k).
inline SymF zW(int n) {
  detail::check_cap("zW", n, 8);
  SymF z = SymF::p(1, n);
  for (int iter = 0; iter <= n; ++iter) {
    SymF inner(n);
    for (int k = 1; k <= n; ++k) inner = inner + Rational(1, k) * adams_substitute(z, k, n);
    SymF next = sf_mul(SymF::p(1, n), sf_exp(inner, n), n);
    if (next == z) break;
    z = std::move(next);
  }
  return z;
}

/// Rooted trees by Burnside: coefficient of p_λ is #fixed trees / z_λ.
inline SymF zW_burnside(int n) {
  detail::check_cap("zW_burnside", n, 7);
  SymF z(n);
  for (int m = 1; m <= n; ++m) {
    const auto trees = enumerate_trees(first_labels(m));
    for (const Partition& l : partitions_of(m)) {
      const long fixed = count_fixed_trees(Permutation::of_cycle_type(l), trees);
      z.add(l, Rational(fixed) / Rational(l.z()));
    }
  }
  return z;
}

/// Lie operad: degree n part (1/n) sum_{d|n} μ(d) p_d^{n/d}.
inline SymF zLie(int n) {
  detail::check_cap("zLie", n, 10);
  SymF z(n);
  for (int m = 1; m <= n; ++m)
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) {
        const int mu = detail::mobius(d);
        if (mu != 0) z.add(Partition(std::vector<int>(static_cast<std::size_t>(m / d), d)), Rational(mu, m));
      }
  return z;
}

/// Closed formula for Z_{Λ∘W} with the exterior grading carried by -t.
inline SymFT zLambdaW(int n) {
  detail::check_cap("zLambdaW", n, 8);
  const Poly t = Poly::t();
  SymFT z = SymFT::one(n);
  for (const Partition& l : partitions_up_to(n)) {
    if (l.empty()) continue;
    const int m1 = l.multiplicity(1);
    // (-t) (m1 - t)^{m1 - 1}; at m1 = 0 the factor (-t)^{-1} cancels the prefactor.
    Poly term = m1 == 0 ? Poly(1) : -t * (Poly(m1) - t).pow(static_cast<unsigned>(m1 - 1));
    for (int k = 2; k <= l.largest(); ++k) {
      const int mk = l.multiplicity(k);
      if (mk == 0) continue;
      const Poly base = Poly(l.fixed_points_of_power(k)) - t.pow(static_cast<unsigned>(k));
      term *= base.pow(static_cast<unsigned>(mk)) - Poly(k * mk) * base.pow(static_cast<unsigned>(mk - 1));
    }
    z.add(l, term * Poly(Rational(1) / Rational(l.z())));
  }
  return z;
}

/// Product over k >= 2 shared by the Z_X and Z_Ŵ formulas at t = 1:
/// prod_k ((f_k - 1)^{m_k} - k m_k (f_k - 1)^{m_k - 1}), factors with m_k = 0 equal to 1.
inline Rational higher_cycle_factor(const Partition& l) {
  Rational prod = 1;
  for (int k = 2; k <= l.largest(); ++k) {
    const int mk = l.multiplicity(k);
    if (mk == 0) continue;
    const Rational base = l.fixed_points_of_power(k) - 1;
    prod *= power(base, mk) - Rational(k * mk) * power(base, mk - 1);
  }
  return prod;
}

/// Coefficient of p_λ / z_λ in the closed formula for Z_X.
inline Rational zX_summand(const Partition& l) {
  const int m1 = l.multiplicity(1);
  try {
    return power(Rational(m1 - 1), m1 - 1) * higher_cycle_factor(l);
  } catch (const std::domain_error&) {
    throw std::domain_error("zX_formula: division by zero at partition " + l.to_string());
  }
}

/// Closed formula for the characters of the indecomposables X.
inline SymF zX_formula(int n) {
  detail::check_cap("zX_formula", n, 8);
  SymF z(n);
  for (const Partition& l : partitions_up_to(n))
    if (!l.empty()) z.add(l, zX_summand(l) / Rational(l.z()));
  return z;
}

/// The constant-free Z with Z_Lie ∘ Z = Z_W.
inline SymF zX_from_inversion(int n) {
  detail::check_cap("zX_from_inversion", n, 8);
  return plethystic_solve(zLie(n), zW(n), n);
}

/// Closed formula for PreLie(n-1) with its anticyclic S_n action; the sum
/// skips partitions with exactly one fixed point.
inline SymF zWhat(int n) {
  detail::check_cap("zWhat", n, 8);
  SymF z(n);
  for (const Partition& l : partitions_up_to(n)) {
    const int m1 = l.multiplicity(1);
    if (l.empty() || m1 == 1) continue;
    Rational lead;
    try {
      lead = power(Rational(m1 - 1), m1 - 2);
    } catch (const std::domain_error&) {
      throw std::domain_error("zWhat: division by zero at partition " + l.to_string());
    }
    z.add(l, lead * higher_cycle_factor(l) / Rational(l.z()));
  }
  return z;
}

inline CycleIndexTable make_table(const std::string& name, int n) {
  if (name == "zw") return {name, zW(n), n, Provenance::functional_equation};
  if (name == "zw_burnside") return {name, zW_burnside(n), n, Provenance::burnside};
  if (name == "zx") return {name, zX_formula(n), n, Provenance::closed_formula};
  if (name == "zx_inversion") return {name, zX_from_inversion(n), n, Provenance::plethystic_inversion};
  if (name == "zwhat") return {name, zWhat(n), n, Provenance::closed_formula};
  if (name == "zlie") return {name, zLie(n), n, Provenance::closed_formula};
  if (name == "zs") return {name, zS(n), n, Provenance::closed_formula};
  if (name == "zt") return {name, zT(n), n, Provenance::closed_formula};
  throw std::invalid_argument("unknown cycle index: " + name);
}

// ---------------------------------------------------------------------------
// Identity checks

template <class C>
void compare_symf(CheckReport& r, const SymFunction<C>& lhs, const SymFunction<C>& rhs, int max_degree) {
  if (auto d = first_discrepancy(lhs, rhs, max_degree)) r.fail(*d);
}

/// Z_X - p_1 = (p_1 ∂_{p_1} - Id) Z_Ŵ, plus the vanishing of every Z_X
/// summand with exactly one fixed point and size >= 2.
inline CheckReport theorem_reflection_check(int n, const SymF& zx) {
  detail::check_cap("theorem_reflection_check", n, 8);
  CheckReport r{"theorem_reflection", n};
  compare_symf(r, zx - SymF::p(1, n), p1_partial_operator(zWhat(n)), n);
  for (const Partition& l : partitions_up_to(n)) {
    if (l.size() < 2 || l.multiplicity(1) != 1) continue;
    const Rational s = zX_summand(l);
    if (s != 0) r.fail({l.size(), l.parts(), s.get_str(), "0"});
  }
  return r;
}
inline CheckReport theorem_reflection_check(int n) { return theorem_reflection_check(n, zX_formula(n)); }

/// Z_Lie ∘ Z_X = Z_W.
inline CheckReport main_theorem_check(int n, const SymF& zx) {
  detail::check_cap("main_theorem_check", n, 7);
  CheckReport r{"main_theorem", n};
  compare_symf(r, plethysm(zLie(n), zx, n), zW(n), n);
  return r;
}
inline CheckReport main_theorem_check(int n) { return main_theorem_check(n, zX_formula(n)); }

/// Closed formula for Z_{Λ∘W} against the plethysm Z_Λ ∘ Z_W.
inline CheckReport lambda_w_formula_check(int n) {
  detail::check_cap("lambda_w_formula_check", n, 8);
  CheckReport r{"lambda_w_formula", n};
  compare_symf(r, zLambdaW(n), plethysm(zLambda(n), lift(zW(n)), n), n);
  return r;
}

/// Z_S ∘ Z_Lie = Z_T.
inline CheckReport pbw_check(int n) {
  detail::check_cap("pbw_check", n, 10);
  CheckReport r{"pbw", n};
  compare_symf(r, plethysm(zS(n), zLie(n), n), zT(n), n);
  return r;
}

/// Z_{Λ∘W} at t = 1 without its constant term equals -Z_X.
inline CheckReport lambda_w_specialization_check(int n, const SymF& zx) {
  CheckReport r{"lambda_w_specialization", n};
  SymF at_one(n);
  const SymFT full = zLambdaW(n);
  for (const auto& [l, c] : full.terms())
    if (!l.empty()) at_one.add(l, c.substitute_t(1).as_rational());
  compare_symf(r, at_one, Rational(-1) * zx, n);
  return r;
}

}  // namespace prelie

#endif  // PRELIE_SMODULE_HPP
