#include "laurent_lab/classify.hpp"

#include <algorithm>
#include <sstream>

#include "laurent_lab/indicial.hpp"

namespace laurent_lab {

namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "NO_POLE_RATIONAL",      "RATIONAL_ONLY",     "W_GENERAL",
    "W_Q2_ELLIPTIC_OR_EXP",  "ELLIPTIC_RATIO_I",  "ELLIPTIC_RATIO_ZETA6",
    "KNOWN_NOT_IN_W",        "UNRESOLVED_Q1"};

bool matches(const Equation& eq, int k, std::initializer_list<int> a) {
  return eq.order() == k && eq.exponents() == std::vector<int>(a);
}

std::string list_to_string(const std::vector<int>& xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << "}";
  return out.str();
}

// Label forced on a transcendental solution by the gcd q of the root set.
std::optional<Label> label_for_gcd(int q) {
  switch (q) {
    case 2: return Label::WQ2EllipticOrExp;
    case 3:
    case 6: return Label::EllipticRatioZeta6;
    case 4: return Label::EllipticRatioI;
    default: return std::nullopt;
  }
}

std::string gcd_citation(int q) {
  switch (q) {
    case 2:
      return "q = 2: rotating by -1 about two poles gives a period; a transcendental solution is "
             "elliptic or g(e^{cz}) with g rational";
    case 4:
      return "q = 4: rotations by i about two poles give periods with ratio i; a transcendental "
             "solution is elliptic with period ratio i";
    default:
      return "q = " + std::to_string(q) + ": rotations by exp(2 pi i/" + std::to_string(q) +
             ") give periods with ratio exp(2 pi i/6); a transcendental solution is elliptic "
             "with that period ratio";
  }
}

const char* kPhiCitation =
    "gcd q not in {1,2,3,4,6}: the q-th roots of unity would generate a period group of rank "
    "phi(q) > 2, impossible for a meromorphic function, so every solution is rational";

}  // namespace

std::string_view to_string(Label label) { return kNames[static_cast<std::size_t>(label)]; }

std::optional<Label> label_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kAllLabels[i];
  return std::nullopt;
}

bool is_rational_label(Label label) {
  return label == Label::NoPoleRational || label == Label::RationalOnly;
}

bool is_w_compatible(Label label) {
  return label != Label::KnownNotInW && label != Label::UnresolvedQ1;
}

Classification classify(const Equation& eq) {
  const auto profile = pole_multiplicity(eq);
  if (!profile) {
    Classification c;
    c.label = Label::NoPoleRational;
    c.evidence.push_back(
        {"no_pole_order",
         "k = m(d-1) + h has no positive integer solution m, so no solution has a pole; "
         "a transcendental solution with finitely many poles cannot exist, so every "
         "meromorphic solution is rational (a polynomial)"});
    return c;
  }
  IndicialData data = analyze(eq, profile->m);
  return classify_with_roots(eq, profile->m, std::move(data.roots));
}

Classification classify_with_roots(const Equation& eq, int m, std::vector<int> roots) {
  Classification c;
  c.m = m;
  c.roots = std::move(roots);
  c.q = gcd_of_roots(c.roots);
  const int k = eq.order();
  auto decide = [&](Label label, std::string rule, std::string citation) {
    c.label = label;
    c.evidence.push_back({std::move(rule), std::move(citation)});
  };

  if (matches(eq, 3, {0, 2})) {
    decide(Label::KnownNotInW, "exact_match_f3_f1sq",
           "f''' = f'^2: g = f' solves g'' = g^2, and integrating a renormalized Weierstrass "
           "p-function with period ratio exp(2 pi i/6) gives a meromorphic solution with the "
           "same residue at every pole, hence neither rational, elliptic, nor g(e^{cz})");
  } else if (matches(eq, 2, {3})) {
    decide(Label::EllipticRatioI, "exact_match_f2_f0cube",
           "f'' = f^3: a renormalized Jacobi dn-function with period ratio i is a solution; "
           "single root q = 4 forces every transcendental solution to be elliptic with ratio i");
  } else if (matches(eq, 2, {2})) {
    decide(Label::EllipticRatioZeta6, "exact_match_f2_f0sq",
           "f'' = f^2: a renormalized Weierstrass p-function with period ratio exp(2 pi i/6) is a "
           "solution; single root q = 6 forces every transcendental solution to be elliptic with "
           "that ratio");
  } else if (eq.all_factors_even() || eq.all_factors_odd()) {
    decide(Label::RationalOnly, "parity_all_even_or_all_odd",
           "all factor derivative orders have one parity; after differentiating down to the "
           "lowest order the binomial root analysis leaves only f'' = f^2, f'' = f^3, "
           "f''' = f'^2 with nonrational solutions, so every meromorphic solution is rational");
  } else if (c.roots.empty()) {
    decide(Label::RationalOnly, "no_indicial_root",
           "p has no positive integer root: every formal Laurent solution is c0 z^-m, so each "
           "meromorphic solution with a pole is rational");
  } else if (c.roots.size() == 1) {
    const int r = c.roots.front();
    if (r == m || r == 1) {
      decide(Label::RationalOnly, "single_root_at_m",
             "the only root is r = m (no zeroth-derivative factor): g = f' solves the lowered "
             "equation whose indicial polynomial p/(x-m) has no positive integer root, so f is "
             "rational");
    } else if (auto label = label_for_gcd(r)) {
      decide(*label, "single_root_gcd", gcd_citation(r));
    } else {
      decide(Label::RationalOnly, "single_root_phi_gate", kPhiCitation);
    }
  } else {
    const int q = *c.q;
    if (auto label = label_for_gcd(q)) {
      decide(*label, "multi_root_gcd", gcd_citation(q));
    } else if (q != 1) {
      decide(Label::RationalOnly, "multi_root_phi_gate", kPhiCitation);
    } else if (eq.top() <= 1) {
      std::string detail;
      const int largest = c.roots.back();
      if (largest == k + 2 * m - 1)
        detail = "large root k+2m-1 (am = k-1, b = 1, k odd): the equation integrates to "
                 "k f^(k-1) = f^k + c, whose meromorphic solutions are all in W";
      else
        detail = "two roots with gcd 1 for f^(k) = f^a f'^b: all meromorphic solutions are in W";
      decide(Label::WGeneral, "order_le_one_gcd_one", detail);
    } else {
      decide(Label::UnresolvedQ1, "multi_root_gcd_one",
             "p has roots " + list_to_string(c.roots) +
                 " with gcd 1 and a factor of order >= 2: no conclusion available");
    }
  }

  c.evidence.push_back({"pole_order", "k = m(d-1) + h gives m = " + std::to_string(m)});
  c.evidence.push_back({"indicial_roots", "positive integer roots of p: " +
                                              list_to_string(c.roots) +
                                              (c.q ? ", gcd q = " + std::to_string(*c.q) : "")});
  return c;
}

nlohmann::json to_json(const Equation& eq, const Classification& c) {
  nlohmann::json evidence = nlohmann::json::array();
  for (const auto& e : c.evidence) evidence.push_back({{"rule", e.rule}, {"citation", e.citation}});
  nlohmann::json doc;
  doc["equation"] = eq.to_string();
  doc["k"] = eq.order();
  doc["a"] = eq.exponents();
  doc["m"] = c.m ? nlohmann::json(*c.m) : nlohmann::json();
  doc["roots"] = c.roots;
  doc["q"] = c.q ? nlohmann::json(*c.q) : nlohmann::json();
  doc["label"] = std::string(to_string(c.label));
  doc["evidence"] = evidence;
  return doc;
}

}  // namespace laurent_lab
