#pragma once

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "laurent_lab/equation.hpp"
#include "laurent_lab/exact.hpp"

namespace laurent_lab {

/// Truncated Laurent series sum_{i < terms} c_i z^(valuation + i). Terms at or
/// beyond the truncation are unknown, not zero.
class LaurentSeries {
 public:
  LaurentSeries(int valuation, std::vector<Rational> coeffs)
      : valuation_(valuation), coeffs_(std::move(coeffs)) {}

  int valuation() const { return valuation_; }
  std::size_t terms() const { return coeffs_.size(); }
  /// First exponent whose coefficient is unknown.
  int truncation() const { return valuation_ + static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of z^exponent; zero below the valuation, throws at or past
  /// the truncation.
  Rational coefficient(int exponent) const;

 private:
  int valuation_;
  std::vector<Rational> coeffs_;
};

/// Product keeping `terms` terms. Throws InputError when either factor knows
/// fewer terms than requested.
LaurentSeries multiply(const LaurentSeries& lhs, const LaurentSeries& rhs, std::size_t terms);
LaurentSeries differentiate(const LaurentSeries& s);
LaurentSeries scale(const Rational& factor, LaurentSeries s);

/// Truncated formal solution f = c0 * sum_n q_n z^(n-m), c0^(d-1) = v.
///
/// Only v is stored; every c(n) is q_n * c0 with q_n rational, so no
/// algebraic numbers are needed even when c0 is irrational or complex.
struct SeriesSolution {
  int m = 0;
  Rational v;
  /// q_0 .. q_last; q_0 = 1. Stops at obstructed_at - 1 on obstruction.
  std::vector<Rational> q;
  /// Requested truncation N.
  int order = 0;
  std::map<int, Rational> free;
  std::optional<int> obstructed_at;

  int last_index() const { return static_cast<int>(q.size()) - 1; }
};

/// v = (-m)_k / prod_j ((-m)_j)^(a_j).
Rational leading_value(const Equation& eq, int m);

/// Runs p(n) q_n = v S(n) for n = 1..order, where S(n) sums
/// prod_i (n_i - m)_(j_i) q_(n_i) over factor assignments n_1+...+n_d = n with
/// every n_i < n. At a root r: S(r) != 0 records an obstruction and stops,
/// otherwise q_r takes free[r] (default 0).
/// Keys of `free` must be roots of the indicial polynomial.
SeriesSolution build_series(const Equation& eq, int m, int order,
                            const std::map<int, Rational>& free = {});

/// Default truncation 4(k + l + 2m).
int default_order(const Equation& eq, int m);

struct VerificationReport {
  /// Relative index n of the first coefficient (of z^(n-m-k)) that differs.
  std::optional<int> first_mismatch;
  int checked_through = 0;
  bool verified() const { return !first_mismatch; }
};

/// Substitutes F = sum q_n z^(n-m) into F^(k) = v prod_j (F^(j))^(a_j) with
/// truncated series arithmetic and compares through z^(upto-m-k).
/// Throws InputError when upto > last computed index - k.
VerificationReport verify_series(const Equation& eq, const SeriesSolution& sol, int upto);

/// True iff q_n = 0 for every n in [1, last] not divisible by q.
bool shape_check(const SeriesSolution& sol, int q);

nlohmann::json to_json(const SeriesSolution& sol);
/// Inverse of to_json; throws InputError on malformed documents.
SeriesSolution series_from_json(const nlohmann::json& doc);

}  // namespace laurent_lab
