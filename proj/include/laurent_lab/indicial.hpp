#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "laurent_lab/equation.hpp"
#include "laurent_lab/exact.hpp"

namespace laurent_lab {

/// Dense integer polynomial, coefficients from x^0 upward.
using Polynomial = std::vector<Integer>;

Integer evaluate(const Polynomial& p, const Integer& x);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
/// Coefficients of (x - shift)_j.
Polynomial falling_polynomial(long shift, unsigned j);
/// Drops trailing zero coefficients.
void trim(Polynomial& p);

/// The indicial polynomial p of (eq, m) together with its positive integer
/// roots R and q = gcd(R).
struct IndicialData {
  int m = 0;
  Polynomial coeffs;       // degree k, monic
  std::vector<int> roots;  // ascending
  std::optional<int> q;
};

/// p(x) = (x-m)_k - sum_i (-1)^(k-j_i) (k+m-1)_(k-j_i) (x-m)_(j_i), summed
/// over the factors.
Polynomial indicial_polynomial(const Equation& eq, int m);

/// a(x) = sum_j (-1)^j a_j (l+m-1)_(l-j) (x-m)_j for a chosen l >= eq.top().
Polynomial auxiliary_polynomial(const Equation& eq, int m, int l);
inline Polynomial auxiliary_polynomial(const Equation& eq, int m) {
  return auxiliary_polynomial(eq, m, eq.top());
}

/// p(x) = (x-m)_k - (-1)^k (k+m-1)_(k-l) a(x).
Polynomial indicial_polynomial_factored(const Equation& eq, int m);

/// Builds p both ways and checks they agree. Roots are left empty.
/// Throws InputError("inadmissible multiplicity") unless
/// sum (j+m) a_j = k+m.
IndicialData build_p(const Equation& eq, int m);

/// Every integer root of p in [1, k+l+2m], by exact evaluation. Throws
/// std::logic_error if a root below m turns up.
std::vector<int> roots_in_N(const IndicialData& data, const Equation& eq);

std::optional<int> gcd_of_roots(std::span<const int> roots);

/// build_p + roots_in_N + gcd_of_roots.
IndicialData analyze(const Equation& eq, int m);

/// p(m) = (-1)^(k+1) (k+m-1)_k a_0, cross-checked against direct evaluation.
Integer p_at_m(const Equation& eq, int m);

/// For a_0 = 0: the equation satisfied by g = f' (every derivative order
/// lowered by one) and its pole multiplicity m+1. Checks
/// p(x) = (x-m) p_1(x) exactly.
std::pair<Equation, int> reduce_if_a0_zero(const Equation& eq, int m);

/// Closed-form roots in N for f^(k) = f^a f'^b:
///  small root r with b(r+1) = k+m, r in [m, k+m);
///  large root k+2m+1 (a = 0, b(m+1) = k+m, k odd),
///             k+2m   (am = k+m, b = 0, k even),
///             k+2m-1 (am = k-1, b = 1, k odd).
std::vector<int> l1_roots_closed_form(int m, int k, int a, int b);

/// Exact root scan for every exponent tuple of one census cell (k, l, m).
///
/// Uses p(r) = (r-m)_k - (-1)^k (k+m-1)_(k-l) a(r): the big factorials are
/// reduced once per r to an integer target t_r (or ruled out when the
/// division is inexact), so a tuple has root r iff a(r) == t_r.
class RootScanner {
 public:
  RootScanner(int k, int l, int m);

  int k() const { return k_; }
  int l() const { return l_; }
  int m() const { return m_; }
  int max_root() const { return k_ + l_ + 2 * m_; }

  /// Ascending roots in [1, k+l+2m] for exponents (a_0..a_l).
  std::vector<int> roots(std::span<const int> exponents) const;
  /// True if r is a root for these exponents.
  bool is_root(std::span<const int> exponents, int r) const;

 private:
  int k_, l_, m_;
  // Indexed by r - 1.
  std::vector<std::optional<Integer>> target_;
  std::vector<std::vector<Integer>> basis_;  // basis_[r-1][j] = (-1)^j (l+m-1)_(l-j) (r-m)_j
};

}  // namespace laurent_lab
