#include "subseq/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace subseq::exact {

namespace {

// Suffix table for x: cell (p, tt) holds |D_tt(x[p:])|. The first-run split
// gives, for a suffix whose first run has a symbols left and is not the last
// run:
//   |D_tt| = |D_tt(suffix at p+1)| + |D_{tt-a}(suffix at p+a+1)|
// (keep one more symbol of the first run, or delete the rest of it together
// with one symbol of the next run). Rows are filled bottom-up, so the whole
// computation is iterative. Columns are capped at t_cap.
struct SuffixTable {
  std::int64_t n;
  std::vector<std::int64_t> run_end;      // one past the run containing p
  std::vector<std::int64_t> last_run_at;  // start of the final run
  std::vector<std::vector<Count>> rows;   // rows[p][tt], tt <= min(t_cap, n-p)

  SuffixTable(const RunString& x, std::int64_t t_cap) : n(x.length()) {
    run_end.resize(static_cast<std::size_t>(n));
    std::int64_t pos = 0;
    for (std::int64_t len : x.runs()) {
      for (std::int64_t p = pos; p < pos + len; ++p) {
        run_end[static_cast<std::size_t>(p)] = pos + len;
      }
      pos += len;
    }
    const std::int64_t last_run_start = n - x.runs().back();

    rows.resize(static_cast<std::size_t>(n) + 1);
    rows[static_cast<std::size_t>(n)] = {Count(1)};  // empty suffix, tt = 0
    for (std::int64_t p = n - 1; p >= 0; --p) {
      const std::int64_t len = n - p;
      const std::int64_t cols = std::min(t_cap, len);
      auto& row = rows[static_cast<std::size_t>(p)];
      row.resize(static_cast<std::size_t>(cols) + 1);
      const bool single_run = p >= last_run_start;
      for (std::int64_t tt = 0; tt <= cols; ++tt) {
        if (tt == 0 || tt == len || single_run) {
          row[static_cast<std::size_t>(tt)] = 1;
          continue;
        }
        const std::int64_t a = run_end[static_cast<std::size_t>(p)] - p;
        Count v = rows[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(tt)];
        if (tt >= a) {
          v += rows[static_cast<std::size_t>(p + a + 1)][static_cast<std::size_t>(tt - a)];
        }
        row[static_cast<std::size_t>(tt)] = std::move(v);
      }
    }
  }
};

}  // namespace

Count count_subsequences(const RunString& x, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("count_subsequences: t must be nonnegative");
  if (t > x.length()) return 0;
  SuffixTable table(x, t);
  return table.rows[0][static_cast<std::size_t>(t)];
}

std::vector<Count> count_all_t(const RunString& x) {
  SuffixTable table(x, x.length());
  return std::move(table.rows[0]);
}

std::set<std::string> enumerate_subsequences(const RunString& x,
                                             std::int64_t t,
                                             std::int64_t length_cap) {
  if (t < 0) throw std::invalid_argument("enumerate_subsequences: t must be nonnegative");
  const std::int64_t n = x.length();
  if (n > length_cap || n > 31) {
    throw std::invalid_argument(
        "enumerate_subsequences: |x| = " + std::to_string(n) +
        " exceeds the enumeration cap " + std::to_string(std::min<std::int64_t>(length_cap, 31)));
  }
  std::set<std::string> out;
  if (t > n) return out;
  const std::int64_t keep = n - t;
  if (keep == 0) {
    out.insert("");
    return out;
  }

  const std::string bits = x.to_bits();
  std::uint32_t value = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (bits[static_cast<std::size_t>(i)] == '1') value |= 1u << i;
  }

  // Walk every keep-subset of positions (Gosper), pack each kept string as
  // an integer, dedupe, then materialize only the distinct ones.
  std::vector<std::uint32_t> codes;
  std::uint32_t mask = (keep == 32) ? 0xffffffffu : ((1u << keep) - 1);
  const std::uint32_t limit = (n == 32) ? 0xffffffffu : (1u << n);
  while (mask < limit) {
    std::uint32_t packed = 0;
    int out_bit = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const std::uint32_t low = m & (0u - m);
      if (value & low) packed |= 1u << out_bit;
      ++out_bit;
    }
    codes.push_back(packed);
    const std::uint32_t c = mask & (0u - mask);
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  for (std::uint32_t code : codes) {
    std::string s(static_cast<std::size_t>(keep), '0');
    for (std::int64_t i = 0; i < keep; ++i) {
      if (code & (1u << i)) s[static_cast<std::size_t>(i)] = '1';
    }
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace subseq::exact
