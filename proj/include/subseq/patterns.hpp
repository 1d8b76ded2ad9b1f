#pragma once

#include <cstdint>
#include <vector>

#include "subseq/count.hpp"
#include "subseq/runstring.hpp"

namespace subseq::patterns {

// A deletion pattern of size t for X = S(x_1..x_r) is a vector (y_1..y_r)
// with y_i in [0, x_i] and sum t: how many symbols to delete from each run.
// Distinct patterns can yield the same subsequence, which is what makes
// |P_t| an upper bound and |P_t| of the shrunk-bounds string a lower bound.

/// Number of integer vectors with 0 <= y_i <= bounds[i] and sum t.
/// Run-indexed DP; bounds of 0 are allowed.
Count bounded_compositions(const std::vector<std::int64_t>& bounds,
                           std::int64_t t);

/// bounded_compositions for every t = 0..sum(bounds) in one DP pass.
std::vector<Count> bounded_composition_profile(
    const std::vector<std::int64_t>& bounds);

/// |P_t(X)|: deletion patterns of size t for x.
Count pattern_count(const RunString& x, std::int64_t t);

/// Closed form for |P_t(B_{r,k})| via inclusion-exclusion; equals
/// pattern_count(make_balanced(r,k), t).
Count pattern_count_balanced(std::int64_t r, std::int64_t k, std::int64_t t);

/// min(multiset(r,t), (k+1)^r), both valid upper bounds on |P_t(B_{r,k})|.
Count balanced_pattern_upper(std::int64_t r, std::int64_t k, std::int64_t t);

/// The pattern sandwich at one (x, t): lower = patterns with per-run bound
/// x_i - 1 (one survivor per run, counted directly, never materialized as a
/// string), middle = exact |D_t(x)|, upper = |P_t(x)|.
struct SandwichRecord {
  Count lower;
  Count middle;
  Count upper;
  bool holds = false;
};

SandwichRecord pattern_sandwich_check(const RunString& x, std::int64_t t);

/// |P_t(X)| == |P_{n-t}(X)| (complementing each y_i against its bound).
bool pattern_symmetry_check(const RunString& x, std::int64_t t);

/// Numeric comparison of |P_t(B_{r,k})| against the sum-form and run-form
/// upper bounds at one point. Ratios are bound / pattern-count, exact.
struct PatternGapReport {
  std::int64_t r = 0, k = 0, t = 0;
  Count balanced_patterns;
  Count hr_upper;   // sum-form bound at n = rk
  Count lev_upper;  // run-form bound
  Rational ratio_vs_hr;
  Rational ratio_vs_lev;
  double ratio_vs_hr_log2;
  double ratio_vs_lev_log2;
};

PatternGapReport pattern_gap_report(std::int64_t r, std::int64_t k,
                                    std::int64_t t);

}  // namespace subseq::patterns
