#include "laurent_lab/equation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "laurent_lab/exact.hpp"

namespace laurent_lab {

Equation::Equation(int k, std::vector<int> a) : k_(k), a_(std::move(a)) {
  degree_ = std::accumulate(a_.begin(), a_.end(), 0);
  weight_ = 0;
  for (int j = 0; j <= top(); ++j) weight_ += j * a_[j];
}

Equation Equation::from_factors(int k, std::span<const int> factors) {
  if (k < 1) throw InputError("k must be a positive integer");
  if (factors.size() < 2) throw InputError("need at least two factors (d > 1)");
  std::vector<int> a;
  for (int j : factors) {
    if (j < 0 || j >= k)
      throw InputError("factor derivative order " + std::to_string(j) +
                       " outside [0, " + std::to_string(k) + ")");
    if (static_cast<std::size_t>(j) >= a.size()) a.resize(j + 1, 0);
    ++a[j];
  }
  return from_exponents(k, std::move(a));
}

Equation Equation::from_exponents(int k, std::vector<int> a) {
  if (k < 1) throw InputError("k must be a positive integer");
  while (!a.empty() && a.back() == 0) a.pop_back();
  for (int x : a)
    if (x < 0) throw InputError("exponents must be nonnegative");
  if (std::accumulate(a.begin(), a.end(), 0) < 2)
    throw InputError("need at least two factors (d > 1)");
  if (static_cast<int>(a.size()) - 1 >= k)
    throw InputError("highest factor derivative must be below k");
  return Equation(k, std::move(a));
}

std::vector<int> Equation::factors() const {
  std::vector<int> out;
  out.reserve(degree_);
  for (int j = 0; j <= top(); ++j) out.insert(out.end(), a_[j], j);
  return out;
}

bool Equation::all_factors_even() const {
  for (int j = 1; j <= top(); j += 2)
    if (a_[j] != 0) return false;
  return true;
}

bool Equation::all_factors_odd() const {
  for (int j = 0; j <= top(); j += 2)
    if (a_[j] != 0) return false;
  return true;
}

std::string Equation::to_string() const {
  std::ostringstream out;
  out << "k=" << k_ << " a=";
  for (std::size_t j = 0; j < a_.size(); ++j) out << (j ? "," : "") << a_[j];
  return out.str();
}

std::optional<PoleProfile> pole_multiplicity(const Equation& eq) {
  const int d = eq.degree();
  const int h = eq.weight();
  const int num = eq.order() - h;
  if (num <= 0 || num % (d - 1) != 0) return std::nullopt;
  PoleProfile profile{num / (d - 1), d, h};
  if (!admissible(eq, profile.m)) throw std::logic_error("pole profile inconsistent");
  return profile;
}

bool admissible(const Equation& eq, int m) {
  if (m < 1) return false;
  long total = 0;
  for (int j = 0; j <= eq.top(); ++j) total += static_cast<long>(j + m) * eq.exponent(j);
  return total == eq.order() + m;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw InputError("empty integer list");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                 : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw InputError("malformed integer '" + std::string(item) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Equation parse_equation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::optional<int> k;
  std::optional<std::vector<int>> factors;
  std::optional<std::vector<int>> exponents;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value, got '" + token + "'");
    std::string key = token.substr(0, eq);
    std::string_view value = std::string_view(token).substr(eq + 1);
    if (key == "k") {
      auto list = parse_int_list(value);
      if (list.size() != 1 || k) throw InputError("k must be given once as one integer");
      k = list[0];
    } else if (key == "j") {
      if (factors) throw InputError("j given twice");
      factors = parse_int_list(value);
    } else if (key == "a") {
      if (exponents) throw InputError("a given twice");
      exponents = parse_int_list(value);
    } else {
      throw InputError("unknown key '" + key + "'");
    }
  }
  if (!k) throw InputError("missing k");
  if (factors && exponents) throw InputError("give either j= or a=, not both");
  if (factors) return Equation::from_factors(*k, *factors);
  if (exponents) return Equation::from_exponents(*k, *exponents);
  throw InputError("missing j= or a=");
}

}  // namespace laurent_lab
