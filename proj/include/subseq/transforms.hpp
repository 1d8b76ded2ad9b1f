#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subseq/count.hpp"
#include "subseq/runstring.hpp"

namespace subseq::transforms {

enum class TraceDirection { increasing, decreasing };

struct TraceStep {
  RunString string;
  std::optional<Count> count;  // |D_t| at the trace's t; filled lazily
};

/// Closing comparison of an unbalancing trace: the edge-pivot string and its
/// count, which lower-bounds every step of the trace.
struct BoundRecord {
  RunString string;
  Count bound;
};

/// An ordered sequence of strings produced by monotone run operations, with
/// per-step counts at a fixed t. Counts are expensive for long strings, so
/// they are computed only when a consumer needs them (ensure_counts, the
/// renderer, or verify_monotone).
struct TransformTrace {
  std::vector<TraceStep> steps;
  TraceDirection direction = TraceDirection::increasing;
  std::int64_t t = 0;
  std::optional<BoundRecord> final_bound;

  void ensure_counts();

  /// Sum of squared run lengths per step (balancing potential).
  std::vector<std::int64_t> potentials() const;
};

/// New string with `bit` inserted before position pos (0..n). Never
/// decreases any |D_t|.
RunString insert_symbol(const RunString& x, std::int64_t pos, int bit);

/// Complements the suffix after bit position i; requires bits i and i+1 to
/// be equal (0-based, i+1 < n). Never decreases any |D_t|.
RunString flip_suffix(const RunString& x, std::int64_t i);

/// Moves one symbol from run i to run j (1-based, i < j). Requires
/// x_i - x_j > 1 and the run lengths strictly between i and j to form a
/// palindrome. Never decreases any |D_t|.
RunString balance_step(const RunString& x, int i, int j);

/// Repeated balance steps until all runs are equal (requires r | n).
/// Pair selection: among pairs differing by more than 1, minimal index gap,
/// then maximal difference, then maximal left index; the longer run shrinks.
/// Counts along the trace are nondecreasing at every t.
TransformTrace balance_trace(const RunString& x, std::int64_t t);

/// Repeated reverse balance steps: the first maximal run absorbs symbols from
/// the nearest donor run (> 1, only unit runs in between; ties to the smaller
/// index) until the string is U^(j). Ends with a bound record for the
/// edge-pivot string. Counts are nonincreasing at every t.
TransformTrace unbalance_trace(const RunString& x, std::int64_t t);

struct MonotoneVerdict {
  bool ok = true;
  std::optional<std::size_t> first_violation;  // index of the offending step
  std::string message;
};

/// Checks that per-step counts are monotone in the declared direction, and
/// that a final bound record (if any) does not exceed the last step's count.
MonotoneVerdict verify_monotone(const TransformTrace& trace);

/// Plain-text table, one line per step: index, bits, run list, the squared
/// potential (balancing traces only), and the count at t. Unbalancing traces
/// end with a "bound" line. Tab-separated, LF line endings.
std::string render_trace(const TransformTrace& trace);

}  // namespace subseq::transforms
