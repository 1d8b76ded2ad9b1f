#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subseq {

/// Run-length form of a nonempty binary string: the symbol of the first run
/// plus the lengths of all maximal runs. Adjacent runs alternate symbols by
/// construction, so (first_bit, runs) determines the string uniquely.
class RunString {
 public:
  /// Throws std::invalid_argument if runs is empty, any run is < 1, or
  /// first_bit is not 0/1.
  RunString(int first_bit, std::vector<std::int64_t> runs);

  /// Parses a nonempty string over {'0','1'} into maximal runs.
  static RunString from_bits(std::string_view bits);

  /// Expands back to the literal character string. Inverse of from_bits.
  std::string to_bits() const;

  int first_bit() const { return first_bit_; }
  const std::vector<std::int64_t>& runs() const { return runs_; }
  std::int64_t length() const { return length_; }
  int run_count() const { return static_cast<int>(runs_.size()); }

  /// Symbol of the 0-based run `index`.
  int run_symbol(int index) const { return (first_bit_ + index) & 1; }

  /// Same run lengths, flipped symbols.
  RunString complemented() const;

  /// Runs in reverse order; the first symbol becomes the old last run's symbol.
  RunString reversed() const;

  friend bool operator==(const RunString&, const RunString&) = default;

 private:
  int first_bit_;
  std::vector<std::int64_t> runs_;
  std::int64_t length_;
};

/// Size guard for the generator functions below.
inline constexpr std::int64_t kMaxGeneratedLength = 1'000'000;

/// r runs, each of length k, starting with 0.
RunString make_balanced(std::int64_t r, std::int64_t k);

/// make_balanced(r, k) with the first symbol removed. For k >= 2 this is
/// S(k-1, k, ..., k); for k = 1 the first run disappears, leaving r-1
/// unit runs that start with the opposite symbol. Requires r*k >= 2.
RunString make_balanced_prime(std::int64_t r, std::int64_t k);

/// Length n, r runs, all of length 1 except run `pivot` (1-based) which has
/// length n-r+1. Starts with 0. Requires 1 <= pivot <= r <= n.
RunString make_unbalanced(std::int64_t n, std::int64_t r, std::int64_t pivot);

/// The alternating string 0101...: n unit runs.
RunString make_cyclic(std::int64_t n);

}  // namespace subseq
