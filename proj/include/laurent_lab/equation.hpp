#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace laurent_lab {

/// The autonomous equation f^(k) = prod_{j=0}^{l} (f^(j))^{a_j}, stored as the
/// exponent vector a = (a_0, ..., a_l) with a_l >= 1.
///
/// Invariants: k > l >= 0, d = sum a_j >= 2, every a_j >= 0.
class Equation {
 public:
  /// Factor form: one entry j_i per factor f^(j_i). Needs >= 2 factors, each
  /// in [0, k).
  static Equation from_factors(int k, std::span<const int> factors);
  /// Exponent form. Trailing zeros are trimmed before validation.
  static Equation from_exponents(int k, std::vector<int> exponents);

  int order() const { return k_; }
  /// Highest derivative on the right side (l).
  int top() const { return static_cast<int>(a_.size()) - 1; }
  /// Number of factors (d).
  int degree() const { return degree_; }
  /// Sum of derivative orders over the factors (h).
  int weight() const { return weight_; }
  int exponent(int j) const { return j <= top() ? a_[j] : 0; }
  const std::vector<int>& exponents() const { return a_; }

  /// Expanded factor list, ascending.
  std::vector<int> factors() const;

  bool all_factors_even() const;
  bool all_factors_odd() const;

  /// Canonical text form, e.g. "k=3 a=0,2".
  std::string to_string() const;

  friend bool operator==(const Equation&, const Equation&) = default;

 private:
  Equation(int k, std::vector<int> a);

  int k_;
  std::vector<int> a_;
  int degree_;
  int weight_;
};

/// Pole data satisfying k = m(d-1) + h.
struct PoleProfile {
  int m;
  int d;
  int h;
};

/// The unique positive integer m with k = m(d-1) + h, if one exists.
std::optional<PoleProfile> pole_multiplicity(const Equation& eq);

/// True when sum_j (j+m) a_j = k + m.
bool admissible(const Equation& eq, int m);

/// Parses "k=3 j=1,1" (factor form) or "k=3 a=0,2" (exponent form).
Equation parse_equation(std::string_view text);

/// Parses a comma separated list of integers ("0,2").
std::vector<int> parse_int_list(std::string_view text);

}  // namespace laurent_lab
