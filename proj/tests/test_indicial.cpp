#include <doctest.h>

#include <vector>

#include "laurent_lab/census.hpp"
#include "laurent_lab/indicial.hpp"

using namespace laurent_lab;

namespace {

Polynomial ints(std::initializer_list<long> xs) {
  Polynomial p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

Equation factors(int k, std::vector<int> js) { return Equation::from_factors(k, js); }

}  // namespace

TEST_CASE("polynomial helpers") {
  CHECK(falling_polynomial(2, 2) == ints({6, -5, 1}));  // (x-2)(x-3)
  CHECK(falling_polynomial(0, 0) == ints({1}));
  CHECK(ints({1, 1}) * ints({-1, 1}) == ints({-1, 0, 1}));
  CHECK(evaluate(ints({-6, -5, 1}), Integer(6)) == 0);
  CHECK(evaluate(ints({-6, -5, 1}), Integer(-1)) == 0);
  Polynomial p = ints({1, 2, 0, 0});
  trim(p);
  CHECK(p == ints({1, 2}));
}

TEST_CASE("build_p hand expansions") {
  // (x-6)(x+1), (x-4)(x+1), (x-1)(x-6)(x+1)
  CHECK(build_p(factors(2, {0, 0}), 2).coeffs == ints({-6, -5, 1}));
  CHECK(build_p(factors(2, {0, 0, 0}), 1).coeffs == ints({-4, -3, 1}));
  CHECK(build_p(factors(3, {1, 1}), 1).coeffs ==
        ints({-1, 1}) * (ints({-6, 1}) * ints({1, 1})));
  CHECK_THROWS_WITH_AS(build_p(factors(2, {0, 0}), 1), "inadmissible multiplicity", InputError);
}

TEST_CASE("roots in N") {
  auto roots = [](const Equation& eq, int m) { return analyze(eq, m).roots; };
  CHECK(roots(factors(2, {0, 0}), 2) == std::vector{6});
  CHECK(roots(factors(2, {0, 0, 0}), 1) == std::vector{4});
  CHECK(roots(factors(3, {1, 1}), 1) == std::vector{1, 6});
  // f'' = f f': p = (x-2)(x+1), agreeing with the closed form below
  CHECK(roots(factors(2, {0, 1}), 1) == std::vector{2});
  CHECK(l1_roots_closed_form(1, 2, 1, 1) == std::vector{2});
  CHECK(roots(factors(3, {0, 0, 1}), 1) == std::vector{3, 4});
}

TEST_CASE("gcd of roots") {
  CHECK(gcd_of_roots(std::vector{6}) == 6);
  CHECK(gcd_of_roots(std::vector{1, 6}) == 1);
  CHECK(!gcd_of_roots(std::vector<int>{}).has_value());
}

TEST_CASE("p at m") {
  // direct evaluation: p(2) = 4 - 10 - 6 for f'' = f^2
  CHECK(p_at_m(factors(2, {0, 0}), 2) == -12);
  CHECK(p_at_m(factors(3, {1, 1}), 1) == 0);
  CHECK(p_at_m(factors(2, {0, 0, 0}), 1) == -6);
}

TEST_CASE("reduction when no zeroth-derivative factor") {
  auto [g, m1] = reduce_if_a0_zero(factors(3, {1, 1}), 1);
  CHECK(g == factors(2, {0, 0}));
  CHECK(m1 == 2);

  auto [g1, n1] = reduce_if_a0_zero(factors(5, {2, 2}), 1);
  CHECK(g1 == factors(4, {1, 1}));
  CHECK(n1 == 2);
  auto [g2, n2] = reduce_if_a0_zero(g1, n1);
  CHECK(g2 == factors(3, {0, 0}));
  CHECK(n2 == 3);

  CHECK_THROWS_WITH_AS(reduce_if_a0_zero(factors(2, {0, 0}), 2),
                       "reduction requires no zeroth-derivative factor", InputError);
}

TEST_CASE("closed-form roots for f^(k) = f^a f'^b") {
  CHECK(l1_roots_closed_form(2, 2, 2, 0) == std::vector{6});
  CHECK(l1_roots_closed_form(1, 3, 0, 2) == std::vector{1, 6});
  CHECK(l1_roots_closed_form(1, 3, 2, 1) == std::vector{3, 4});
  CHECK_THROWS_AS(l1_roots_closed_form(1, 3, 1, 1), InputError);  // 1 + 2 != 4
  CHECK_THROWS_AS(l1_roots_closed_form(1, 1, 2, 0), InputError);  // k = 1
  CHECK_THROWS_AS(l1_roots_closed_form(3, 0, 1, 0), InputError);

  for (int m = 1; m <= 4; ++m)
    for (int k = 2; k <= 14; ++k)
      for (int b = 0; (m + 1) * b <= k + m; ++b) {
        const int rest = k + m - (m + 1) * b;
        if (rest % m || rest / m + b < 2) continue;
        const int a = rest / m;
        auto eq = Equation::from_exponents(k, {a, b});
        REQUIRE(l1_roots_closed_form(m, k, a, b) == analyze(eq, m).roots);
      }
}

TEST_CASE("root bounds and structure over small cells") {
  for (int m = 1; m <= 3; ++m)
    for (int l = 0; l <= 3; ++l)
      for (int k = l + 1; k <= 12; ++k)
        enumerate_A(k, l, m, [&](std::span<const int> a) {
          auto eq = Equation::from_exponents(k, std::vector<int>(a.begin(), a.end()));
          auto data = analyze(eq, m);
          for (int r : data.roots) {
            REQUIRE(r >= m);
            REQUIRE(r <= k + l + 2 * m);
          }
          const bool has_m = !data.roots.empty() && data.roots.front() == m;
          REQUIRE(has_m == (a[0] == 0));
          bool lower_zero = true;
          for (int j = 0; j < l; ++j) lower_zero = lower_zero && a[j] == 0;
          const bool top_root = !data.roots.empty() && data.roots.back() == k + l + 2 * m;
          REQUIRE(top_root == ((k - l) % 2 == 0 && lower_zero));
          // a(-1) = (l+m-1)_(l-1) (k+m)
          if (l >= 1)
            REQUIRE(evaluate(auxiliary_polynomial(eq, m, l), Integer(-1)) ==
                    falling(l + m - 1, l - 1) * (k + m));
        });
}

TEST_CASE("scanner agrees with expanded polynomial") {
  for (int m = 1; m <= 3; ++m)
    for (int l = 0; l <= 3; ++l)
      for (int k = l + 1; k <= 14; ++k) {
        RootScanner scanner(k, l, m);
        enumerate_A(k, l, m, [&](std::span<const int> a) {
          auto eq = Equation::from_exponents(k, std::vector<int>(a.begin(), a.end()));
          REQUIRE(scanner.roots(a) == analyze(eq, m).roots);
        });
      }
  CHECK_THROWS_AS(RootScanner(2, 2, 1), InputError);
}

TEST_CASE("single-factor equations f^(k) = f^d") {
  for (int k = 2; k <= 20; ++k)
    for (int d = 2; d <= k + 1; ++d) {
      if (k % (d - 1)) continue;
      const int m = k / (d - 1);
      auto data = analyze(Equation::from_exponents(k, {d}), m);
      if (k % 2)
        REQUIRE(data.roots.empty());
      else
        REQUIRE(data.roots == std::vector{(d + 1) * m});
    }
}
