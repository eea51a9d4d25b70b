#include "laurent_lab/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include "laurent_lab/indicial.hpp"

namespace laurent_lab {

namespace {

void check_cell(int k, int l, int m) {
  if (l < 0 || m < 1 || k <= l)
    throw InputError("census cell needs k > l >= 0 and m >= 1 (got k=" + std::to_string(k) +
                     ", l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
}

// Fills a[j..1] in lexicographic order given the remaining weight `rest`.
void fill(std::vector<int>& a, int j, long rest, int m, const TupleVisitor& visit) {
  if (j == 0) {
    if (rest % m == 0) {
      a[0] = static_cast<int>(rest / m);
      visit(a);
    }
    return;
  }
  const long w = j + m;
  for (long aj = 0; aj * w <= rest; ++aj) {
    a[j] = static_cast<int>(aj);
    fill(a, j - 1, rest - aj * w, m, visit);
  }
  a[j] = 0;
}

std::uint64_t count_fill(int j, long rest, int m) {
  if (j == 0) return rest % m == 0 ? 1 : 0;
  if (j == 1) {
    // a_1 ranges over values leaving a multiple of m.
    std::uint64_t n = 0;
    for (long a1 = 0; a1 * (1 + m) <= rest; ++a1)
      if ((rest - a1 * (1 + m)) % m == 0) ++n;
    return n;
  }
  std::uint64_t n = 0;
  for (long aj = 0; aj * (j + m) <= rest; ++aj) n += count_fill(j - 1, rest - aj * (j + m), m);
  return n;
}

void merge(CensusSummary& into, const CensusSummary& from) {
  into.total += from.total;
  into.d_ge_2 += from.d_ge_2;
  into.no_root += from.no_root;
  into.single_root += from.single_root;
  into.multi_small_root += from.multi_small_root;
  into.any_large_root += from.any_large_root;
  for (const auto& [label, n] : from.label_counts) into.label_counts[label] += n;
  for (const auto& [r, n] : from.large_root_histogram) into.large_root_histogram[r] += n;
}

void tally(CensusSummary& s, const CensusRow& row) {
  ++s.total;
  if (row.roots.empty()) ++s.no_root;
  if (row.roots.size() == 1) ++s.single_root;
  if (row.small_root_count >= 2) ++s.multi_small_root;
  if (row.large_root_count >= 1) ++s.any_large_root;
  for (int r : row.roots)
    if (r >= s.k + s.m) ++s.large_root_histogram[r];
  if (row.label) {
    ++s.d_ge_2;
    ++s.label_counts[*row.label];
  }
}

CensusSummary empty_summary(int k, int l, int m) {
  CensusSummary s;
  s.k = k;
  s.l = l;
  s.m = m;
  for (Label label : kAllLabels) s.label_counts[label] = 0;
  for (int r = k + m; r <= k + l + 2 * m; ++r) s.large_root_histogram[r] = 0;
  return s;
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

int max_top(int k, int l, int m) { return (k + m) / (l + m); }

void enumerate_A_slice(int k, int l, int m, int top, const TupleVisitor& visit) {
  check_cell(k, l, m);
  const long rest = static_cast<long>(k + m) - static_cast<long>(top) * (l + m);
  if (top < 0 || rest < 0) return;
  std::vector<int> a(l + 1, 0);
  if (l == 0) {
    if (rest == 0) {
      a[0] = top;
      visit(a);
    }
    return;
  }
  a[l] = top;
  fill(a, l - 1, rest, m, visit);
}

void enumerate_A(int k, int l, int m, const TupleVisitor& visit) {
  check_cell(k, l, m);
  for (int top = 0; top <= max_top(k, l, m); ++top) enumerate_A_slice(k, l, m, top, visit);
}

std::vector<std::vector<int>> enumerate_A(int k, int l, int m) {
  std::vector<std::vector<int>> out;
  enumerate_A(k, l, m, [&](std::span<const int> a) { out.emplace_back(a.begin(), a.end()); });
  return out;
}

std::uint64_t count_A(int k, int l, int m) {
  check_cell(k, l, m);
  return count_fill(l, k + m, m);
}

bool is_equation(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0L) >= 2; }

Integer count_compositions(std::span<const int> c, int k) {
  if (c.size() < 2) throw InputError("count_compositions needs at least two weights");
  if (k < 0) throw InputError("count_compositions needs k >= 0");
  for (int w : c)
    if (w < 1) throw InputError("weights must be positive");
  if (std::gcd(c[0], c[1]) != 1) throw InputError("c_0 and c_1 must be relatively prime");
  std::vector<Integer> ways(k + 1, Integer(0));
  for (int x = 0; x <= k; x += c[0]) ways[x] = 1;
  for (std::size_t i = 1; i < c.size(); ++i) {
    // ways'(x) = sum_{a >= 0} ways(x - a c_i) = ways(x) + ways'(x - c_i)
    for (int x = c[i]; x <= k; ++x) ways[x] += ways[x - c[i]];
  }
  return ways[k];
}

std::uint64_t CensusSummary::transcendental_admitting() const {
  std::uint64_t n = 0;
  for (const auto& [label, count] : label_counts)
    if (!is_rational_label(label)) n += count;
  return n;
}

Rational CensusSummary::asymptotic_ratio() const {
  Integer scale = falling(l + m, l + 1);
  for (int i = 2; i <= l; ++i) scale *= i;
  Integer kl;
  mpz_ui_pow_ui(kl.get_mpz_t(), k, l);
  return make_rational(Integer(static_cast<unsigned long>(total)) * scale, kl);
}

CensusRow census_row(const RootScanner& scanner, std::span<const int> a) {
  CensusRow row;
  row.a.assign(a.begin(), a.end());
  row.roots = scanner.roots(a);
  row.q = gcd_of_roots(row.roots);
  const int k = scanner.k();
  const int m = scanner.m();
  for (int r : row.roots) {
    if (r >= m && r < k + m) ++row.small_root_count;
    if (r >= k + m) ++row.large_root_count;
  }
  if (is_equation(a)) {
    const Equation eq = Equation::from_exponents(k, row.a);
    row.label = classify_with_roots(eq, m, row.roots).label;
  }
  return row;
}

std::vector<CensusRow> census_rows(int k, int l, int m) {
  const RootScanner scanner(k, l, m);
  std::vector<CensusRow> rows;
  enumerate_A(k, l, m, [&](std::span<const int> a) { rows.push_back(census_row(scanner, a)); });
  return rows;
}

CensusSummary census_summary(int k, int l, int m, unsigned threads) {
  check_cell(k, l, m);
  const RootScanner scanner(k, l, m);
  const int slices = max_top(k, l, m) + 1;
  std::vector<CensusSummary> parts(slices, empty_summary(k, l, m));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int top = next++; top < slices; top = next++) {
      enumerate_A_slice(k, l, m, top, [&](std::span<const int> a) {
        tally(parts[top], census_row(scanner, a));
      });
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, slices);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  CensusSummary out = empty_summary(k, l, m);
  for (const auto& part : parts) merge(out, part);
  for (const auto& [r, n] : out.large_root_histogram)
    out.max_tuples_per_large_r = std::max(out.max_tuples_per_large_r, n);
  return out;
}

std::map<int, std::uint64_t> large_root_histogram(int k, int l, int m) {
  check_cell(k, l, m);
  const RootScanner scanner(k, l, m);
  std::map<int, std::uint64_t> hist;
  for (int r = k + m; r <= k + l + 2 * m; ++r) hist[r] = 0;
  enumerate_A(k, l, m, [&](std::span<const int> a) {
    for (auto& [r, n] : hist)
      if (scanner.is_root(a, r)) ++n;
  });
  return hist;
}

std::string census_csv_header() {
  return "k,l,m,total,d_ge_2,no_root,single_root,multi_small,any_large,max_per_large_r,"
         "label_counts_json,asymptotic_ratio";
}

std::string to_decimal(const Rational& x, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rational shifted = x * Rational(scale) + Rational(1, 2);
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  const bool negative = rounded < 0;
  if (negative) rounded = -rounded;
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

std::string census_csv_row(const CensusSummary& s) {
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [label, n] : s.label_counts) labels[std::string(to_string(label))] = n;
  std::ostringstream out;
  out << s.k << ',' << s.l << ',' << s.m << ',' << s.total << ',' << s.d_ge_2 << ','
      << s.no_root << ',' << s.single_root << ',' << s.multi_small_root << ','
      << s.any_large_root << ',' << s.max_tuples_per_large_r << ',' << csv_quote(labels.dump())
      << ',' << to_decimal(s.asymptotic_ratio(), 6);
  return out.str();
}

}  // namespace laurent_lab
