#include "laurent_lab/exact.hpp"

#include <numeric>

namespace laurent_lab {

Integer falling(const Integer& x, unsigned j) {
  Integer out = 1;
  Integer factor = x;
  for (unsigned i = 0; i < j; ++i) {
    out *= factor;
    if (out == 0) break;
    factor -= 1;
  }
  return out;
}

Integer gcd_list(std::span<const Integer> values) {
  if (values.empty()) throw InputError("no roots; q undefined");
  Integer g = 0;
  for (const Integer& v : values) {
    if (v < 1) throw InputError("gcd_list expects positive integers");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

long gcd_list(std::span<const long> values) {
  if (values.empty()) throw InputError("no roots; q undefined");
  long g = 0;
  for (long v : values) {
    if (v < 1) throw InputError("gcd_list expects positive integers");
    g = std::gcd(g, v);
  }
  return g;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed number '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw InputError("malformed number '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

}  // namespace laurent_lab
