#include "laurent_lab/series.hpp"

#include <algorithm>
#include <string>

#include "laurent_lab/indicial.hpp"

namespace laurent_lab {

Rational LaurentSeries::coefficient(int exponent) const {
  if (exponent < valuation_) return Rational(0);
  if (exponent >= truncation())
    throw InputError("coefficient of z^" + std::to_string(exponent) + " is past the truncation");
  return coeffs_[exponent - valuation_];
}

LaurentSeries multiply(const LaurentSeries& lhs, const LaurentSeries& rhs, std::size_t terms) {
  if (terms > lhs.terms() || terms > rhs.terms())
    throw InputError("order mismatch: product needs " + std::to_string(terms) +
                     " terms, factors know " + std::to_string(lhs.terms()) + " and " +
                     std::to_string(rhs.terms()));
  const auto& a = lhs.coefficients();
  const auto& b = rhs.coefficients();
  std::vector<Rational> out(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < terms; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return LaurentSeries(lhs.valuation() + rhs.valuation(), std::move(out));
}

LaurentSeries differentiate(const LaurentSeries& s) {
  std::vector<Rational> out(s.terms());
  for (std::size_t i = 0; i < s.terms(); ++i)
    out[i] = s.coefficients()[i] * (s.valuation() + static_cast<int>(i));
  return LaurentSeries(s.valuation() - 1, std::move(out));
}

LaurentSeries scale(const Rational& factor, LaurentSeries s) {
  std::vector<Rational> out = s.coefficients();
  for (auto& c : out) c *= factor;
  return LaurentSeries(s.valuation(), std::move(out));
}

Rational leading_value(const Equation& eq, int m) {
  Integer den = 1;
  for (int j = 0; j <= eq.top(); ++j) {
    Integer base = falling(-m, j);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), eq.exponent(j));
    den *= power;
  }
  return make_rational(falling(-m, eq.order()), den);
}

int default_order(const Equation& eq, int m) { return 4 * (eq.order() + eq.top() + 2 * m); }

SeriesSolution build_series(const Equation& eq, int m, int order,
                            const std::map<int, Rational>& free) {
  if (order < 1) throw InputError("series order must be at least 1");
  const IndicialData data = analyze(eq, m);  // throws on inadmissible m
  for (const auto& [r, value] : free)
    if (!std::binary_search(data.roots.begin(), data.roots.end(), r))
      throw InputError("free coefficient at " + std::to_string(r) +
                       " is not at a root of the indicial polynomial");

  SeriesSolution sol;
  sol.m = m;
  sol.v = leading_value(eq, m);
  sol.order = order;
  sol.free = free;
  for (auto& entry : sol.free) entry.second.canonicalize();
  sol.q.reserve(order + 1);
  sol.q.emplace_back(1);

  const std::vector<int> js = eq.factors();
  const std::size_t d = js.size();
  const std::size_t len = static_cast<std::size_t>(order) + 1;
  // weighted[j][i] = (i-m)_j q_i for each derivative order present
  std::vector<std::vector<Rational>> weighted(eq.top() + 1);
  for (int j = 0; j <= eq.top(); ++j) {
    if (eq.exponent(j) == 0) continue;
    weighted[j].assign(len, Rational(0));
    weighted[j][0] = Rational(falling(-m, j));
  }
  // partial[t][i] = coefficient of z^i in G_{j_0} * ... * G_{j_t}
  std::vector<std::vector<Rational>> partial(d, std::vector<Rational>(len));
  auto refresh = [&](std::size_t n) {
    partial[0][n] = weighted[js[0]][n];
    for (std::size_t t = 1; t < d; ++t) {
      const auto& prev = partial[t - 1];
      const auto& g = weighted[js[t]];
      Rational acc = 0;
      for (std::size_t i = 0; i <= n; ++i)
        if (prev[i] != 0 && g[n - i] != 0) acc += prev[i] * g[n - i];
      partial[t][n] = std::move(acc);
    }
  };
  refresh(0);

  for (int n = 1; n <= order; ++n) {
    refresh(n);  // weighted[*][n] is still zero, so this is S(n)
    const Rational s = partial[d - 1][n];
    const Integer pn = evaluate(data.coeffs, Integer(n));
    Rational qn;
    if (pn != 0) {
      qn = sol.v * s / Rational(pn);
    } else if (s != 0) {
      sol.obstructed_at = n;
      return sol;
    } else if (auto it = sol.free.find(n); it != sol.free.end()) {
      qn = it->second;
    }
    if (qn != 0) {
      for (int j = 0; j <= eq.top(); ++j)
        if (eq.exponent(j) != 0) weighted[j][n] = qn * falling(n - m, j);
      refresh(n);
    }
    sol.q.push_back(std::move(qn));
  }
  return sol;
}

VerificationReport verify_series(const Equation& eq, const SeriesSolution& sol, int upto) {
  const int k = eq.order();
  if (upto < 0 || upto > sol.last_index() - k)
    throw InputError("truncation too short: checking through " + std::to_string(upto) +
                     " needs order >= " + std::to_string(upto + k));
  const std::size_t terms = static_cast<std::size_t>(upto) + 1;
  std::vector<LaurentSeries> derivs;
  derivs.emplace_back(-sol.m, std::vector<Rational>(sol.q.begin(), sol.q.begin() + terms));
  for (int j = 1; j <= k; ++j) derivs.push_back(differentiate(derivs.back()));

  std::optional<LaurentSeries> rhs;
  for (int j : eq.factors()) rhs = rhs ? multiply(*rhs, derivs[j], terms) : derivs[j];
  const LaurentSeries right = scale(sol.v, *rhs);
  const LaurentSeries& left = derivs[k];

  VerificationReport report;
  report.checked_through = upto;
  for (std::size_t i = 0; i < terms; ++i) {
    if (left.coefficients()[i] != right.coefficients()[i]) {
      report.first_mismatch = static_cast<int>(i);
      break;
    }
  }
  return report;
}

bool shape_check(const SeriesSolution& sol, int q) {
  if (q < 1) throw InputError("shape_check needs q >= 1");
  for (int n = 1; n <= sol.last_index(); ++n)
    if (n % q != 0 && sol.q[n] != 0) return false;
  return true;
}

nlohmann::json to_json(const SeriesSolution& sol) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = 0; n <= sol.last_index(); ++n)
    coeffs.push_back({{"n", n}, {"q", to_string(sol.q[n])}});
  nlohmann::json free = nlohmann::json::object();
  for (const auto& [r, value] : sol.free) free[std::to_string(r)] = to_string(value);
  nlohmann::json doc = {{"m", sol.m},         {"v", to_string(sol.v)}, {"order", sol.order},
                        {"coeffs", coeffs},   {"free", free}};
  doc["obstructed_at"] = sol.obstructed_at ? nlohmann::json(*sol.obstructed_at) : nlohmann::json();
  return doc;
}

SeriesSolution series_from_json(const nlohmann::json& doc) {
  try {
    SeriesSolution sol;
    sol.m = doc.at("m").get<int>();
    sol.v = parse_rational(doc.at("v").get<std::string>());
    sol.order = doc.contains("order") ? doc.at("order").get<int>() : 0;
    for (const auto& entry : doc.at("coeffs")) {
      const int n = entry.at("n").get<int>();
      if (n != sol.last_index() + 1) throw InputError("series coefficients must be listed n = 0, 1, 2, ...");
      sol.q.push_back(parse_rational(entry.at("q").get<std::string>()));
    }
    if (sol.q.empty()) throw InputError("series has no coefficients");
    if (doc.contains("free"))
      for (const auto& [key, value] : doc.at("free").items())
        sol.free[std::stoi(key)] = parse_rational(value.get<std::string>());
    if (doc.contains("obstructed_at") && !doc.at("obstructed_at").is_null())
      sol.obstructed_at = doc.at("obstructed_at").get<int>();
    if (sol.m < 1) throw InputError("series m must be positive");
    if (sol.order < sol.last_index()) sol.order = sol.last_index();
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed series JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace laurent_lab
