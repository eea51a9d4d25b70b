#pragma once

// Arbitrary-precision integers and rationals shared by every module.
// Nothing in a coefficient path uses fixed-width arithmetic.

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace laurent_lab {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Raised for malformed input. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Falling factorial x(x-1)...(x-j+1); 1 when j == 0.
Integer falling(const Integer& x, unsigned j);
inline Integer falling(long x, unsigned j) { return falling(Integer(x), j); }

/// gcd of a nonempty list of positive integers.
/// Throws InputError("no roots; q undefined") on an empty list.
Integer gcd_list(std::span<const Integer> values);
long gcd_list(std::span<const long> values);

Rational make_rational(const Integer& num, const Integer& den);

/// "num/den", denominator always written (e.g. "6/1").
std::string to_string(const Rational& x);
/// Accepts "num/den" or a plain integer.
Rational parse_rational(std::string_view text);

}  // namespace laurent_lab
