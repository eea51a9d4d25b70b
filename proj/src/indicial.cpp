#include "laurent_lab/indicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace laurent_lab {

namespace {

Integer sign(int exponent) { return (exponent % 2 == 0) ? Integer(1) : Integer(-1); }

void check_admissible(const Equation& eq, int m) {
  if (!admissible(eq, m)) throw InputError("inadmissible multiplicity");
}

}  // namespace

Integer evaluate(const Polynomial& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  Polynomial out(lhs.size() + rhs.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  return out;
}

Polynomial falling_polynomial(long shift, unsigned j) {
  Polynomial out{Integer(1)};
  for (unsigned i = 0; i < j; ++i) {
    // multiply by (x - shift - i)
    Polynomial next(out.size() + 1, Integer(0));
    const Integer root = Integer(shift) + i;
    for (std::size_t c = 0; c < out.size(); ++c) {
      next[c + 1] += out[c];
      next[c] -= root * out[c];
    }
    out = std::move(next);
  }
  return out;
}

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial indicial_polynomial(const Equation& eq, int m) {
  const int k = eq.order();
  Polynomial p = falling_polynomial(m, k);
  for (int j : eq.factors()) {
    const Integer c = sign(k - j) * falling(k + m - 1, k - j);
    const Polynomial term = falling_polynomial(m, j);
    for (std::size_t i = 0; i < term.size(); ++i) p[i] -= c * term[i];
  }
  return p;
}

Polynomial auxiliary_polynomial(const Equation& eq, int m, int l) {
  if (l < eq.top()) throw std::invalid_argument("l below the highest factor order");
  Polynomial out(l + 1, Integer(0));
  for (int j = 0; j <= eq.top(); ++j) {
    if (eq.exponent(j) == 0) continue;
    const Integer c = sign(j) * eq.exponent(j) * falling(l + m - 1, l - j);
    const Polynomial term = falling_polynomial(m, j);
    for (std::size_t i = 0; i < term.size(); ++i) out[i] += c * term[i];
  }
  return out;
}

Polynomial indicial_polynomial_factored(const Equation& eq, int m) {
  const int k = eq.order();
  const int l = eq.top();
  Polynomial p = falling_polynomial(m, k);
  const Integer scale = sign(k) * falling(k + m - 1, k - l);
  const Polynomial a = auxiliary_polynomial(eq, m, l);
  for (std::size_t i = 0; i < a.size(); ++i) p[i] -= scale * a[i];
  return p;
}

IndicialData build_p(const Equation& eq, int m) {
  check_admissible(eq, m);
  IndicialData data;
  data.m = m;
  data.coeffs = indicial_polynomial(eq, m);
  if (data.coeffs != indicial_polynomial_factored(eq, m))
    throw std::logic_error("indicial polynomial: factor sum and factored form disagree");
  return data;
}

std::vector<int> roots_in_N(const IndicialData& data, const Equation& eq) {
  const int upper = eq.order() + eq.top() + 2 * data.m;
  std::vector<int> roots;
  for (int r = 1; r <= upper; ++r) {
    if (evaluate(data.coeffs, Integer(r)) != 0) continue;
    if (r < data.m) throw std::logic_error("indicial root below the pole multiplicity");
    roots.push_back(r);
  }
  return roots;
}

std::optional<int> gcd_of_roots(std::span<const int> roots) {
  if (roots.empty()) return std::nullopt;
  std::vector<long> values(roots.begin(), roots.end());
  return static_cast<int>(gcd_list(values));
}

IndicialData analyze(const Equation& eq, int m) {
  IndicialData data = build_p(eq, m);
  data.roots = roots_in_N(data, eq);
  data.q = gcd_of_roots(data.roots);
  return data;
}

Integer p_at_m(const Equation& eq, int m) {
  check_admissible(eq, m);
  const int k = eq.order();
  Integer closed = sign(k + 1) * falling(k + m - 1, k) * eq.exponent(0);
  if (closed != evaluate(indicial_polynomial(eq, m), Integer(m)))
    throw std::logic_error("p(m) closed form disagrees with direct evaluation");
  return closed;
}

std::pair<Equation, int> reduce_if_a0_zero(const Equation& eq, int m) {
  if (eq.exponent(0) != 0)
    throw InputError("reduction requires no zeroth-derivative factor");
  check_admissible(eq, m);
  std::vector<int> shifted(eq.exponents().begin() + 1, eq.exponents().end());
  Equation reduced = Equation::from_exponents(eq.order() - 1, std::move(shifted));
  Polynomial lhs = indicial_polynomial(eq, m);
  Polynomial rhs = Polynomial{Integer(-m), Integer(1)} * indicial_polynomial(reduced, m + 1);
  trim(lhs);
  trim(rhs);
  if (lhs != rhs) throw std::logic_error("reduction identity p = (x-m) p1 failed");
  return {std::move(reduced), m + 1};
}

std::vector<int> l1_roots_closed_form(int m, int k, int a, int b) {
  if (m < 1 || k < 2 || a < 0 || b < 0 || a + b < 2 ||
      static_cast<long>(m) * a + static_cast<long>(m + 1) * b != k + m)
    throw InputError("closed form needs ma + (m+1)b = k+m, a+b >= 2, k > 1");
  std::vector<int> roots;
  if (b > 0 && (k + m) % b == 0) {
    const int r = (k + m) / b - 1;
    if (r >= m && r < k + m) roots.push_back(r);
  }
  const bool odd = k % 2 == 1;
  if (a == 0 && b * (m + 1) == k + m && odd) roots.push_back(k + 2 * m + 1);
  if (a * m == k + m && b == 0 && !odd) roots.push_back(k + 2 * m);
  if (a * m == k - 1 && b == 1 && odd) roots.push_back(k + 2 * m - 1);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

RootScanner::RootScanner(int k, int l, int m) : k_(k), l_(l), m_(m) {
  if (k <= l || l < 0 || m < 1) throw InputError("scanner needs k > l >= 0 and m >= 1");
  const Integer scale = falling(k + m - 1, k - l);
  target_.reserve(max_root());
  basis_.reserve(max_root());
  for (int r = 1; r <= max_root(); ++r) {
    // p(r) = 0  <=>  a(r) = (-1)^k (r-m)_k / (k+m-1)_(k-l)
    Integer lead = falling(r - m, k);
    if (lead == 0) {
      target_.emplace_back(Integer(0));
    } else if (mpz_divisible_p(lead.get_mpz_t(), scale.get_mpz_t())) {
      Integer t = lead / scale;
      if (k % 2) t = -t;
      target_.emplace_back(std::move(t));
    } else {
      target_.emplace_back(std::nullopt);
    }
    std::vector<Integer> row(l + 1);
    for (int j = 0; j <= l; ++j) row[j] = sign(j) * falling(l + m - 1, l - j) * falling(r - m, j);
    basis_.push_back(std::move(row));
  }
}

bool RootScanner::is_root(std::span<const int> exponents, int r) const {
  if (r < 1 || r > max_root()) return false;
  const auto& target = target_[r - 1];
  if (!target) return false;
  const auto& row = basis_[r - 1];
  Integer value = 0;
  const std::size_t top = std::min<std::size_t>(exponents.size(), row.size());
  for (std::size_t j = 0; j < top; ++j)
    if (exponents[j] != 0) mpz_addmul_ui(value.get_mpz_t(), row[j].get_mpz_t(), exponents[j]);
  return value == *target;
}

std::vector<int> RootScanner::roots(std::span<const int> exponents) const {
  if (exponents.size() > static_cast<std::size_t>(l_) + 1)
    throw std::invalid_argument("exponent vector longer than l+1");
  std::vector<int> out;
  for (int r = 1; r <= max_root(); ++r)
    if (is_root(exponents, r)) out.push_back(r);
  return out;
}

}  // namespace laurent_lab
