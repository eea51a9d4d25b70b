#pragma once

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laurent_lab/equation.hpp"

namespace laurent_lab {

/// What is known about the meromorphic solution set. Labels other than the
/// two rational ones say which transcendental solutions are *possible*; only
/// the exact-match equations assert that such solutions exist.
enum class Label {
  NoPoleRational,
  RationalOnly,
  WGeneral,
  WQ2EllipticOrExp,
  EllipticRatioI,
  EllipticRatioZeta6,
  KnownNotInW,
  UnresolvedQ1,
};

inline constexpr std::array<Label, 8> kAllLabels = {
    Label::NoPoleRational,     Label::RationalOnly, Label::WGeneral,
    Label::WQ2EllipticOrExp,   Label::EllipticRatioI,
    Label::EllipticRatioZeta6, Label::KnownNotInW,  Label::UnresolvedQ1};

/// Upper-case wire name, e.g. "ELLIPTIC_RATIO_ZETA6".
std::string_view to_string(Label label);
std::optional<Label> label_from_string(std::string_view name);

/// Every meromorphic solution is rational.
bool is_rational_label(Label label);
/// Every meromorphic solution lies in W (rational, elliptic, or g(e^{cz})).
bool is_w_compatible(Label label);

struct Evidence {
  std::string rule;
  std::string citation;
};

struct Classification {
  Label label = Label::UnresolvedQ1;
  std::optional<int> m;
  std::vector<int> roots;
  std::optional<int> q;
  /// Deciding rule first, supporting facts after.
  std::vector<Evidence> evidence;
};

Classification classify(const Equation& eq);

/// Decision table given an admissible m and the root set R of its indicial
/// polynomial. Lets callers that already scanned the roots skip rebuilding p.
Classification classify_with_roots(const Equation& eq, int m, std::vector<int> roots);

nlohmann::json to_json(const Equation& eq, const Classification& c);

}  // namespace laurent_lab
