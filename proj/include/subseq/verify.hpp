#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subseq::verify {

/// Outcome of one verification suite. A failure entry is a minimal
/// counterexample, formatted for direct printing.
struct SuiteResult {
  std::string suite;
  long long checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// |D_t| for t = 0..n by literal enumeration of all deletion masks,
/// deduplicated. Independent of the counting recursion. n <= 24.
std::vector<std::uint64_t> enumeration_profile(std::string_view bits);

/// DP count equals the enumeration oracle for every binary string of length
/// <= max_n and every t.
SuiteResult oracle_equivalence(int max_n);

/// Run-form and sum-form sandwiches hold: exhaustive for n <= max_n, plus
/// seeded random strings up to random_max_n.
SuiteResult sandwiches(int max_n, int random_trials, int random_max_n,
                       std::uint64_t seed);

/// Insertions, flips and balance steps never decrease any |D_t|; reverse
/// balance steps never increase it. Exhaustive for n <= exhaustive_max_n over
/// all positions/pairs, plus seeded random strings.
SuiteResult monotone_ops(int exhaustive_max_n, int random_trials,
                         int random_max_n, std::uint64_t seed);

/// Closed forms equal the recursions (balanced grid r <= b_max_r,
/// k <= b_max_k, all t; unbalanced grid 2 < r <= n <= u_max_n, all t), and
/// both match the enumeration oracle on small balanced/unbalanced strings.
SuiteResult recursion_vs_closed(int b_max_r, int b_max_k, int b_oracle_max_n,
                                int u_max_n, int u_oracle_max_n);

/// Deletion-pattern properties: sandwich with the enumeration oracle in the
/// middle (n <= sandwich_max_n), symmetry across all run compositions
/// (n <= symmetry_max_n), and the balanced closed form vs the DP.
SuiteResult patterns_suite(int sandwich_max_n, int symmetry_max_n,
                           int balanced_max_r, int balanced_max_k);

/// Extremal envelope over every run composition with r <= max_r, n <= max_n:
/// lower_bound_general <= exact count <= upper_bound_general at every t.
/// Also checks the pivot-position ordering on unbalanced strings against the
/// oracle for n <= pivot_oracle_max_n.
SuiteResult extremality(int max_r, int max_n, int pivot_oracle_max_n);

}  // namespace subseq::verify
