#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laurent_lab/classify.hpp"
#include "laurent_lab/exact.hpp"
#include "laurent_lab/indicial.hpp"

namespace laurent_lab {

// Census over A_{k,l,m}: all (a_0..a_l) >= 0 with sum_j (j+m) a_j = k+m.

using TupleVisitor = std::function<void(std::span<const int>)>;

/// Visits every tuple exactly once, lexicographically in (a_l, ..., a_1) with
/// a_0 fixed by the weight equation. Throws InputError unless k > l >= 0, m >= 1.
void enumerate_A(int k, int l, int m, const TupleVisitor& visit);
std::vector<std::vector<int>> enumerate_A(int k, int l, int m);

/// The slice of enumerate_A with a_l == top; slices are disjoint and cover A.
void enumerate_A_slice(int k, int l, int m, int top, const TupleVisitor& visit);
/// Largest a_l that occurs: (k+m)/(l+m).
int max_top(int k, int l, int m);

/// |A_{k,l,m}| by enumeration, without root scans.
std::uint64_t count_A(int k, int l, int m);

/// d = sum a_j >= 2, i.e. the tuple is an equation of the studied form.
bool is_equation(std::span<const int> a);

/// Number of nonnegative solutions of sum_i c_i a_i = k, built up one weight
/// at a time: N_c(k) = sum_{a >= 0} N_{c without last}(k - a c_last).
/// Needs at least two positive weights with gcd(c_0, c_1) = 1.
Integer count_compositions(std::span<const int> c, int k);

struct CensusRow {
  std::vector<int> a;
  std::vector<int> roots;
  std::optional<int> q;
  int small_root_count = 0;  // roots in [m, k+m)
  int large_root_count = 0;  // roots in [k+m, k+l+2m]
  std::optional<Label> label;  // absent when d < 2
};

struct CensusSummary {
  int k = 0, l = 0, m = 0;
  std::uint64_t total = 0;
  std::uint64_t d_ge_2 = 0;
  std::uint64_t no_root = 0;
  std::uint64_t single_root = 0;
  std::uint64_t multi_small_root = 0;  // >= 2 roots in [m, k+m)
  std::uint64_t any_large_root = 0;    // >= 1 root in [k+m, k+l+2m]
  std::map<Label, std::uint64_t> label_counts;
  /// Tuples having r as a root, for every r in [k+m, k+l+2m].
  std::map<int, std::uint64_t> large_root_histogram;
  std::uint64_t max_tuples_per_large_r = 0;

  std::uint64_t nonempty_root() const { return total - no_root; }
  /// Tuples whose label leaves room for a transcendental solution.
  std::uint64_t transcendental_admitting() const;
  /// total * l! * (l+m)_(l+1) / k^l.
  Rational asymptotic_ratio() const;
};

CensusRow census_row(const RootScanner& scanner, std::span<const int> a);
std::vector<CensusRow> census_rows(int k, int l, int m);

/// Full census of one cell. Slices by a_l run on up to `threads` workers
/// (0 = hardware concurrency) and are merged by addition, so the result does
/// not depend on the thread count.
CensusSummary census_summary(int k, int l, int m, unsigned threads = 1);

/// r -> number of tuples with p(r) = 0, for r in [k+m, k+l+2m].
std::map<int, std::uint64_t> large_root_histogram(int k, int l, int m);

std::string census_csv_header();
std::string census_csv_row(const CensusSummary& s);
/// floor(x * 10^digits + 1/2) rendered as a decimal string.
std::string to_decimal(const Rational& x, int digits);

}  // namespace laurent_lab
