#include "subseq/patterns.hpp"

#include <stdexcept>

#include "subseq/bounds.hpp"
#include "subseq/exact.hpp"

namespace subseq::patterns {

std::vector<Count> bounded_composition_profile(
    const std::vector<std::int64_t>& bounds) {
  std::vector<Count> cur{Count(1)};
  for (std::int64_t b : bounds) {
    if (b < 0) throw std::invalid_argument("bounded_compositions: negative bound");
    std::vector<Count> next(cur.size() + static_cast<std::size_t>(b), Count(0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == 0) continue;
      for (std::int64_t y = 0; y <= b; ++y) {
        next[i + static_cast<std::size_t>(y)] += cur[i];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Count bounded_compositions(const std::vector<std::int64_t>& bounds,
                           std::int64_t t) {
  if (t < 0) return 0;
  const auto profile = bounded_composition_profile(bounds);
  if (t >= static_cast<std::int64_t>(profile.size())) return 0;
  return profile[static_cast<std::size_t>(t)];
}

Count pattern_count(const RunString& x, std::int64_t t) {
  return bounded_compositions(x.runs(), t);
}

Count pattern_count_balanced(std::int64_t r, std::int64_t k, std::int64_t t) {
  if (r < 1 || k < 1) throw std::invalid_argument("pattern_count_balanced: r, k must be positive");
  if (t < 0) return 0;
  // Tuples in [0,k]^r with sum t: inclusion-exclusion over parts > k.
  Count acc = 0;
  for (std::int64_t i = 0; i <= t / (k + 1); ++i) {
    Count term = bounds::binomial_or_zero(r, i) *
                 bounds::binomial_or_zero(r + t - i * (k + 1) - 1, r - 1);
    if (i & 1) acc -= term; else acc += term;
  }
  if (acc < 0) throw std::logic_error("pattern_count_balanced: negative result");
  return acc;
}

Count balanced_pattern_upper(std::int64_t r, std::int64_t k, std::int64_t t) {
  if (r < 1 || k < 1) throw std::invalid_argument("balanced_pattern_upper: r, k must be positive");
  if (t < 0) return 0;
  const Count by_runs = bounds::multiset_coeff(r, t);
  Count by_alphabet = 1;
  for (std::int64_t i = 0; i < r; ++i) by_alphabet *= k + 1;
  return by_runs < by_alphabet ? by_runs : by_alphabet;
}

SandwichRecord pattern_sandwich_check(const RunString& x, std::int64_t t) {
  SandwichRecord record;
  // Lower side: patterns leaving at least one symbol in every run, i.e.
  // per-run bound x_i - 1 (bound 0 allowed; no string is materialized).
  std::vector<std::int64_t> shrunk(x.runs());
  for (auto& b : shrunk) --b;
  record.lower = bounded_compositions(shrunk, t);
  record.middle = exact::count_subsequences(x, t);
  record.upper = pattern_count(x, t);
  record.holds = record.lower <= record.middle && record.middle <= record.upper;
  return record;
}

bool pattern_symmetry_check(const RunString& x, std::int64_t t) {
  return pattern_count(x, t) == pattern_count(x, x.length() - t);
}

PatternGapReport pattern_gap_report(std::int64_t r, std::int64_t k,
                                    std::int64_t t) {
  PatternGapReport report;
  report.r = r;
  report.k = k;
  report.t = t;
  report.balanced_patterns = pattern_count_balanced(r, k, t);
  report.hr_upper = bounds::hr_upper(r * k, t);
  report.lev_upper = bounds::lev_upper(r, t);
  if (report.balanced_patterns > 0) {
    report.ratio_vs_hr = Rational(report.hr_upper, report.balanced_patterns);
    report.ratio_vs_lev = Rational(report.lev_upper, report.balanced_patterns);
    report.ratio_vs_hr_log2 = log2_approx(report.ratio_vs_hr);
    report.ratio_vs_lev_log2 = log2_approx(report.ratio_vs_lev);
  } else {
    report.ratio_vs_hr = 0;
    report.ratio_vs_lev = 0;
    report.ratio_vs_hr_log2 = 0.0;
    report.ratio_vs_lev_log2 = 0.0;
  }
  return report;
}

}  // namespace subseq::patterns
