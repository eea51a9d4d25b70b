#include <doctest.h>

#include "laurent_lab/census.hpp"
#include "laurent_lab/classify.hpp"
#include "laurent_lab/indicial.hpp"
#include "laurent_lab/series.hpp"

using namespace laurent_lab;

namespace {

Equation factors(int k, std::vector<int> js) { return Equation::from_factors(k, js); }

// Every equation f^(k) = prod (f^(j))^(a_j) with l < k, d <= k + 1 and order in [2, kmax].
template <class F>
void each_equation(int kmax, F&& visit) {
  for (int k = 2; k <= kmax; ++k)
    for (int l = 0; l < k; ++l) {
      std::vector<int> a(l + 1, 0);
      auto rec = [&](auto&& self, int j, int room) -> void {
        if (j < 0) {
          int d = 0;
          for (int x : a) d += x;
          if (d >= 2 && a[l] > 0) visit(Equation::from_exponents(k, a));
          return;
        }
        for (int x = 0; x <= room; ++x) {
          a[j] = x;
          self(self, j - 1, room - x);
        }
        a[j] = 0;
      };
      rec(rec, l, k + 1);
    }
}

bool is_one_of(const Equation& eq, std::initializer_list<Equation> list) {
  for (const auto& e : list)
    if (e == eq) return true;
  return false;
}

}  // namespace

TEST_CASE("label names round trip") {
  for (Label label : kAllLabels) CHECK(label_from_string(to_string(label)) == label);
  CHECK(to_string(Label::EllipticRatioZeta6) == "ELLIPTIC_RATIO_ZETA6");
  CHECK(!label_from_string("ELLIPTIC"));
  CHECK(is_rational_label(Label::NoPoleRational));
  CHECK(!is_w_compatible(Label::UnresolvedQ1));
}

TEST_CASE("named equations") {
  CHECK(classify(factors(2, {0, 0})).label == Label::EllipticRatioZeta6);
  CHECK(classify(factors(2, {0, 0, 0})).label == Label::EllipticRatioI);
  auto c = classify(factors(3, {1, 1}));
  CHECK(c.label == Label::KnownNotInW);
  CHECK(c.evidence.front().rule == "exact_match_f3_f1sq");

  auto e = classify(factors(3, {0, 0, 1}));
  CHECK(e.label == Label::WGeneral);
  CHECK(e.roots == std::vector{3, 4});
  CHECK(e.q == 1);
  CHECK(e.evidence.front().citation.find("k f^(k-1) = f^k + c") != std::string::npos);

  auto none = classify(factors(2, {0, 0, 0, 0}));
  CHECK(none.label == Label::NoPoleRational);
  CHECK(!none.m);
  CHECK(!none.q);
}

TEST_CASE("decision tiers") {
  // f'' = f f': single root 2
  CHECK(classify(factors(2, {0, 1})).label == Label::WQ2EllipticOrExp);
  // root set without positive integers
  CHECK(classify_with_roots(factors(4, {0, 1}), 2, {}).label == Label::RationalOnly);
  // single root equal to m
  CHECK(classify_with_roots(factors(4, {0, 1}), 2, {2}).evidence.front().rule ==
        "single_root_at_m");
  CHECK(classify_with_roots(factors(4, {0, 1}), 2, {5}).label == Label::RationalOnly);
  CHECK(classify_with_roots(factors(4, {0, 1}), 2, {3}).label == Label::EllipticRatioZeta6);
  CHECK(classify_with_roots(factors(4, {0, 1}), 2, {4, 8}).label == Label::EllipticRatioI);
  CHECK(classify_with_roots(factors(4, {0, 1}), 2, {5, 10}).label == Label::RationalOnly);
  CHECK(classify_with_roots(factors(4, {0, 1}), 2, {2, 3}).label == Label::WGeneral);
  CHECK(classify_with_roots(factors(5, {1, 2}), 2, {2, 3}).label == Label::UnresolvedQ1);
}

TEST_CASE("evidence and json") {
  auto c = classify(factors(2, {0, 0}));
  REQUIRE(c.evidence.size() == 3);
  CHECK(c.evidence[1].rule == "pole_order");
  CHECK(c.evidence[2].rule == "indicial_roots");
  auto doc = to_json(factors(2, {0, 0}), c);
  CHECK(doc["label"] == "ELLIPTIC_RATIO_ZETA6");
  CHECK(doc["m"] == 2);
  CHECK(doc["q"] == 6);
  CHECK(doc["roots"] == nlohmann::json::array({6}));
  CHECK(doc["a"] == nlohmann::json::array({2}));
  CHECK(doc["equation"] == "k=2 a=2");
  CHECK(to_json(factors(2, {0, 0, 0, 0}), classify(factors(2, {0, 0, 0, 0})))["m"].is_null());
}

TEST_CASE("same-parity factor lists are rational apart from three equations") {
  int seen = 0;
  each_equation(12, [&](const Equation& eq) {
    if (!eq.all_factors_even() && !eq.all_factors_odd()) return;
    ++seen;
    const Label label = classify(eq).label;
    if (is_one_of(eq, {factors(2, {0, 0}), factors(2, {0, 0, 0}), factors(3, {1, 1})}))
      REQUIRE(!is_rational_label(label));
    else
      REQUIRE(is_rational_label(label));
  });
  CHECK(seen > 1000);
}

TEST_CASE("two-term equations f^(k) = f^a f'^b stay in W except one") {
  for (int k = 2; k <= 15; ++k)
    for (int a = 0; a <= k + 1; ++a)
      for (int b = 0; a + b <= k + 1; ++b) {
        if (a + b < 2) continue;
        auto eq = Equation::from_exponents(k, {a, b});
        const Label label = classify(eq).label;
        if (eq == factors(3, {1, 1}))
          REQUIRE(label == Label::KnownNotInW);
        else
          REQUIRE(is_w_compatible(label));
      }
}

TEST_CASE("transcendental labels only for admissible gcds") {
  each_equation(9, [&](const Equation& eq) {
    auto c = classify(eq);
    if (c.q && *c.q != 1 && *c.q != 2 && *c.q != 3 && *c.q != 4 && *c.q != 6)
      REQUIRE(is_rational_label(c.label));
  });
}

TEST_CASE("elliptic labels agree with generated series") {
  each_equation(8, [&](const Equation& eq) {
    auto c = classify(eq);
    if (c.label != Label::EllipticRatioI && c.label != Label::EllipticRatioZeta6) return;
    REQUIRE(c.q.has_value());
    std::map<int, Rational> free;
    for (int r : c.roots) free[r] = 1;
    auto s = build_series(eq, *c.m, default_order(eq, *c.m), free);
    if (s.obstructed_at) s = build_series(eq, *c.m, default_order(eq, *c.m), {{c.roots.back(), 1}});
    REQUIRE(!s.obstructed_at);
    REQUIRE(shape_check(s, *c.q));
  });
}
