#include "subseq/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "subseq/exact.hpp"
#include "subseq/unbalanced.hpp"

namespace subseq::transforms {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("transforms: " + what);
}

// Run lengths strictly between positions a and b (0-based) read the same in
// both directions.
bool palindromic_between(const std::vector<std::int64_t>& runs, int a, int b) {
  int lo = std::min(a, b) + 1;
  int hi = std::max(a, b) - 1;
  while (lo < hi) {
    if (runs[static_cast<std::size_t>(lo)] != runs[static_cast<std::size_t>(hi)]) return false;
    ++lo;
    --hi;
  }
  return true;
}

// Move one symbol from run `from` to run `to` (0-based). Callers have
// already validated the applicable precondition.
RunString shift_run(const RunString& x, int from, int to) {
  std::vector<std::int64_t> runs = x.runs();
  runs[static_cast<std::size_t>(from)] -= 1;
  runs[static_cast<std::size_t>(to)] += 1;
  return RunString(x.first_bit(), std::move(runs));
}

std::vector<Count> trace_counts(const TransformTrace& trace) {
  std::vector<Count> counts;
  counts.reserve(trace.steps.size());
  for (const auto& step : trace.steps) {
    counts.push_back(step.count ? *step.count
                                : exact::count_subsequences(step.string, trace.t));
  }
  return counts;
}

std::string format_runs(const std::vector<std::int64_t>& runs) {
  std::string out = "{";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(runs[i]);
  }
  out += '}';
  return out;
}

std::int64_t squared_potential(const std::vector<std::int64_t>& runs) {
  std::int64_t acc = 0;
  for (std::int64_t x : runs) acc += x * x;
  return acc;
}

}  // namespace

void TransformTrace::ensure_counts() {
  for (auto& step : steps) {
    if (!step.count) step.count = exact::count_subsequences(step.string, t);
  }
}

std::vector<std::int64_t> TransformTrace::potentials() const {
  std::vector<std::int64_t> out;
  out.reserve(steps.size());
  for (const auto& step : steps) out.push_back(squared_potential(step.string.runs()));
  return out;
}

RunString insert_symbol(const RunString& x, std::int64_t pos, int bit) {
  if (bit != 0 && bit != 1) reject("insert_symbol: bit must be 0 or 1");
  if (pos < 0 || pos > x.length()) reject("insert_symbol: position out of range");
  std::string bits = x.to_bits();
  bits.insert(static_cast<std::size_t>(pos), 1, static_cast<char>('0' + bit));
  return RunString::from_bits(bits);
}

RunString flip_suffix(const RunString& x, std::int64_t i) {
  if (i < 0 || i + 1 >= x.length()) reject("flip_suffix: index out of range");
  std::string bits = x.to_bits();
  if (bits[static_cast<std::size_t>(i)] != bits[static_cast<std::size_t>(i + 1)]) {
    reject("flip_suffix: bits at i and i+1 must be equal");
  }
  for (std::size_t p = static_cast<std::size_t>(i) + 1; p < bits.size(); ++p) {
    bits[p] = (bits[p] == '0') ? '1' : '0';
  }
  return RunString::from_bits(bits);
}

RunString balance_step(const RunString& x, int i, int j) {
  const auto& runs = x.runs();
  const int r = x.run_count();
  if (i < 1 || j < 1 || i > r || j > r) reject("balance_step: run index out of range");
  if (i >= j) reject("balance_step: need i < j");
  const std::int64_t xi = runs[static_cast<std::size_t>(i - 1)];
  const std::int64_t xj = runs[static_cast<std::size_t>(j - 1)];
  if (xi - xj <= 1) reject("balance_step: need x_i - x_j > 1");
  if (!palindromic_between(runs, i - 1, j - 1)) {
    reject("balance_step: runs between i and j must form a palindrome");
  }
  return shift_run(x, i - 1, j - 1);
}

TransformTrace balance_trace(const RunString& x, std::int64_t t) {
  const int r = x.run_count();
  if (x.length() % r != 0) {
    reject("balance_trace: length not divisible by the run count (use the ceiling bound instead)");
  }
  TransformTrace trace;
  trace.direction = TraceDirection::increasing;
  trace.t = t;
  trace.steps.push_back({x, std::nullopt});

  RunString cur = x;
  while (true) {
    const auto& runs = cur.runs();
    // Minimal index gap first; among those the largest difference, then the
    // rightmost left index. Any minimal-gap pair has a constant (hence
    // palindromic) middle.
    int best_p = -1, best_q = -1;
    std::int64_t best_diff = 0;
    for (int gap = 1; gap < r && best_p < 0; ++gap) {
      for (int p = 0; p + gap < r; ++p) {
        const std::int64_t diff = std::llabs(runs[static_cast<std::size_t>(p)] -
                                             runs[static_cast<std::size_t>(p + gap)]);
        if (diff > 1 && diff >= best_diff) {
          best_diff = diff;
          best_p = p;
          best_q = p + gap;
        }
      }
    }
    if (best_p < 0) break;
    const bool left_longer = runs[static_cast<std::size_t>(best_p)] >
                             runs[static_cast<std::size_t>(best_q)];
    const int from = left_longer ? best_p : best_q;
    const int to = left_longer ? best_q : best_p;
    if (!palindromic_between(runs, best_p, best_q)) {
      throw std::logic_error("balance_trace: selected pair has a non-palindromic middle");
    }
    cur = shift_run(cur, from, to);
    trace.steps.push_back({cur, std::nullopt});
  }

  for (std::int64_t len : cur.runs()) {
    if (len != x.length() / r) {
      throw std::logic_error("balance_trace: did not terminate at the balanced string");
    }
  }
  return trace;
}

TransformTrace unbalance_trace(const RunString& x, std::int64_t t) {
  TransformTrace trace;
  trace.direction = TraceDirection::decreasing;
  trace.t = t;
  trace.steps.push_back({x, std::nullopt});

  const int r = x.run_count();
  const auto& initial = x.runs();
  int pivot = static_cast<int>(std::max_element(initial.begin(), initial.end()) -
                               initial.begin());

  RunString cur = x;
  while (true) {
    const auto& runs = cur.runs();
    // Donor: a run longer than 1 with only unit runs between it and the
    // pivot; nearest to the pivot, ties to the smaller index.
    int donor = -1;
    for (int p = 0; p < r; ++p) {
      if (p == pivot || runs[static_cast<std::size_t>(p)] < 2) continue;
      bool clear = true;
      for (int m = std::min(p, pivot) + 1; m < std::max(p, pivot) && clear; ++m) {
        clear = runs[static_cast<std::size_t>(m)] == 1;
      }
      if (!clear) continue;
      if (donor < 0 || std::abs(p - pivot) < std::abs(donor - pivot)) donor = p;
    }
    if (donor < 0) break;
    cur = shift_run(cur, donor, pivot);
    trace.steps.push_back({cur, std::nullopt});
  }

  // Closing comparison: the edge-pivot variant, its pivot run moved to the
  // front with its symbol preserved, bounds every step from below.
  const std::int64_t n = x.length();
  std::vector<std::int64_t> edge_runs(static_cast<std::size_t>(r), 1);
  edge_runs.front() = n - r + 1;
  trace.final_bound = BoundRecord{
      RunString(cur.run_symbol(pivot), std::move(edge_runs)),
      unbalanced::u_closed(n, r, t)};
  return trace;
}

MonotoneVerdict verify_monotone(const TransformTrace& trace) {
  MonotoneVerdict verdict;
  const std::vector<Count> counts = trace_counts(trace);
  const bool increasing = trace.direction == TraceDirection::increasing;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    const bool bad = increasing ? counts[i] < counts[i - 1] : counts[i] > counts[i - 1];
    if (bad) {
      verdict.ok = false;
      verdict.first_violation = i;
      std::ostringstream msg;
      msg << "count not " << (increasing ? "nondecreasing" : "nonincreasing")
          << " at step " << i << ": " << counts[i - 1] << " -> " << counts[i];
      verdict.message = msg.str();
      return verdict;
    }
  }
  if (trace.final_bound && !counts.empty() &&
      trace.final_bound->bound > counts.back()) {
    verdict.ok = false;
    verdict.first_violation = counts.size();
    std::ostringstream msg;
    msg << "final bound " << trace.final_bound->bound
        << " exceeds the last step count " << counts.back();
    verdict.message = msg.str();
    return verdict;
  }
  verdict.message = "ok";
  return verdict;
}

std::string render_trace(const TransformTrace& trace) {
  const std::vector<Count> counts = trace_counts(trace);
  const bool with_potential = trace.direction == TraceDirection::increasing;
  std::ostringstream out;
  out << "i\tX_i\truns";
  if (with_potential) out << "\tsum_x2";
  out << "\tD_" << trace.t << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const RunString& s = trace.steps[i].string;
    out << i << '\t' << s.to_bits() << '\t' << format_runs(s.runs());
    if (with_potential) out << '\t' << squared_potential(s.runs());
    out << '\t' << counts[i] << "\n";
  }
  if (trace.final_bound) {
    const RunString& s = trace.final_bound->string;
    out << "bound\t" << s.to_bits() << '\t' << format_runs(s.runs());
    if (with_potential) out << '\t' << squared_potential(s.runs());
    out << '\t' << trace.final_bound->bound << "\n";
  }
  return out.str();
}

}  // namespace subseq::transforms
