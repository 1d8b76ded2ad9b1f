#include "subseq/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>

#include "subseq/balanced.hpp"
#include "subseq/bounds.hpp"
#include "subseq/exact.hpp"
#include "subseq/patterns.hpp"
#include "subseq/runstring.hpp"
#include "subseq/transforms.hpp"
#include "subseq/unbalanced.hpp"

namespace subseq::verify {

namespace {

constexpr std::size_t kMaxFailures = 8;

bool note_failure(SuiteResult& result, const std::string& what) {
  if (result.failures.size() < kMaxFailures) result.failures.push_back(what);
  return result.failures.size() < kMaxFailures;
}

std::string bits_of(std::uint32_t mask, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::string random_bits(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> len_dist(1, max_n);
  const int n = len_dist(rng);
  std::string s(static_cast<std::size_t>(n), '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

template <typename F>
void for_each_composition(std::int64_t n, std::int64_t r, F&& f) {
  std::vector<std::int64_t> parts(static_cast<std::size_t>(r), 1);
  parts.back() = n - r + 1;
  // Odometer over compositions of n into r positive parts.
  while (true) {
    f(parts);
    std::size_t i = parts.size() - 1;
    while (i > 0 && parts[i] == 1) --i;
    if (i == 0) break;
    // Move one unit left of position i, reset the tail.
    parts[i - 1] += 1;
    std::int64_t tail = 0;
    for (std::size_t j = i; j < parts.size(); ++j) {
      tail += parts[j];
      parts[j] = 1;
    }
    parts.back() = tail - static_cast<std::int64_t>(parts.size() - i);
  }
}

std::string show_runs(const std::vector<std::int64_t>& runs) {
  std::string out = "{";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(runs[i]);
  }
  return out + "}";
}

// Middle run lengths form a palindrome between positions a and b.
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

}  // namespace

std::vector<std::uint64_t> enumeration_profile(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1 || n > 24) {
    throw std::invalid_argument("enumeration_profile: length must be in [1, 24]");
  }
  std::uint32_t value = 0;
  for (int i = 0; i < n; ++i) {
    if (bits[static_cast<std::size_t>(i)] == '1') value |= 1u << i;
  }
  // One entry per deletion mask: kept-length in the top bits, the packed
  // kept string below. Sorting groups equal subsequences together.
  std::vector<std::uint32_t> items;
  items.reserve(std::size_t{1} << n);
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::uint32_t packed = 0;
    int out_bit = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const std::uint32_t low = m & (0u - m);
      if (value & low) packed |= 1u << out_bit;
      ++out_bit;
    }
    items.push_back((static_cast<std::uint32_t>(out_bit) << 25) | packed);
  }
  std::sort(items.begin(), items.end());
  std::vector<std::uint64_t> profile(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0 && items[i] == items[i - 1]) continue;
    const int kept = static_cast<int>(items[i] >> 25);
    profile[static_cast<std::size_t>(n - kept)] += 1;
  }
  return profile;
}

SuiteResult oracle_equivalence(int max_n) {
  SuiteResult result{"oracle-equivalence", 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const std::string s = bits_of(m, n);
      const RunString x = RunString::from_bits(s);
      const auto oracle = enumeration_profile(s);
      const auto counted = exact::count_all_t(x);
      for (int t = 0; t <= n; ++t) {
        ++result.checks;
        if (counted[static_cast<std::size_t>(t)] != Count(oracle[static_cast<std::size_t>(t)])) {
          std::ostringstream msg;
          msg << "bits=" << s << " t=" << t << " dp=" << counted[static_cast<std::size_t>(t)]
              << " enumeration=" << oracle[static_cast<std::size_t>(t)];
          if (!note_failure(result, msg.str())) return result;
        }
      }
      ++result.checks;
      if (exact::count_subsequences(x, n + 1) != 0) {
        if (!note_failure(result, "bits=" + s + " t=n+1 expected 0")) return result;
      }
    }
  }
  return result;
}

SuiteResult sandwiches(int max_n, int random_trials, int random_max_n,
                       std::uint64_t seed) {
  SuiteResult result{"sandwiches", 0, {}};
  auto check_string = [&result](const std::string& s) {
    const RunString x = RunString::from_bits(s);
    const std::int64_t n = x.length();
    const std::int64_t r = x.run_count();
    const auto counts = exact::count_all_t(x);
    for (std::int64_t t = 0; t <= n; ++t) {
      const Count& c = counts[static_cast<std::size_t>(t)];
      result.checks += 4;
      if (bounds::lev_lower(r, t) > c || c > bounds::lev_upper(r, t) ||
          bounds::hr_lower(r, t) > c || c > bounds::hr_upper(n, t)) {
        std::ostringstream msg;
        msg << "bits=" << s << " t=" << t << " count=" << c
            << " lev=[" << bounds::lev_lower(r, t) << "," << bounds::lev_upper(r, t)
            << "] hr=[" << bounds::hr_lower(r, t) << "," << bounds::hr_upper(n, t) << "]";
        note_failure(result, msg.str());
        return false;
      }
    }
    return true;
  };
  for (int n = 1; n <= max_n; ++n) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (!check_string(bits_of(m, n)) && result.failures.size() >= kMaxFailures) return result;
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_trials; ++i) {
    if (!check_string(random_bits(rng, random_max_n)) &&
        result.failures.size() >= kMaxFailures) {
      return result;
    }
  }
  return result;
}

SuiteResult monotone_ops(int exhaustive_max_n, int random_trials,
                         int random_max_n, std::uint64_t seed) {
  SuiteResult result{"monotone-ops", 0, {}};

  // Compares profiles entrywise; `sign` +1 means the derived string may only
  // gain subsequences, -1 only lose them.
  auto compare = [&result](const std::string& label, const RunString& base_x,
                           const std::vector<Count>& base,
                           const RunString& derived, int sign) {
    const auto other = exact::count_all_t(derived);
    const std::size_t upto = std::min(base.size(), other.size());
    for (std::size_t t = 0; t < upto; ++t) {
      ++result.checks;
      const bool bad = sign > 0 ? other[t] < base[t] : other[t] > base[t];
      if (bad) {
        std::ostringstream msg;
        msg << label << " base=" << base_x.to_bits() << " derived=" << derived.to_bits()
            << " t=" << t << " " << base[t] << " vs " << other[t];
        note_failure(result, msg.str());
        return;
      }
    }
  };

  auto check_string = [&](const RunString& x) {
    const std::int64_t n = x.length();
    const auto base = exact::count_all_t(x);
    for (std::int64_t pos = 0; pos <= n; ++pos) {
      for (int bit = 0; bit <= 1; ++bit) {
        compare("insert", x, base, transforms::insert_symbol(x, pos, bit), +1);
      }
    }
    const std::string bits = x.to_bits();
    for (std::int64_t i = 0; i + 1 < n; ++i) {
      if (bits[static_cast<std::size_t>(i)] == bits[static_cast<std::size_t>(i + 1)]) {
        compare("flip", x, base, transforms::flip_suffix(x, i), +1);
      }
    }
    const auto& runs = x.runs();
    const int r = x.run_count();
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) {
        if (a == b || !palindromic_between(runs, a, b)) continue;
        std::vector<std::int64_t> edited = runs;
        // Balance: the longer run a gives one symbol to the shorter run b.
        if (runs[static_cast<std::size_t>(a)] - runs[static_cast<std::size_t>(b)] > 1) {
          if (a < b) {
            compare("balance", x, base, transforms::balance_step(x, a + 1, b + 1), +1);
          } else {
            edited[static_cast<std::size_t>(a)] -= 1;
            edited[static_cast<std::size_t>(b)] += 1;
            compare("balance(mirrored)", x, base, RunString(x.first_bit(), edited), +1);
          }
        }
        // Reverse balance: run a (at least as long) absorbs a symbol from b.
        if (runs[static_cast<std::size_t>(a)] >= runs[static_cast<std::size_t>(b)] &&
            runs[static_cast<std::size_t>(b)] >= 2) {
          edited = runs;
          edited[static_cast<std::size_t>(a)] += 1;
          edited[static_cast<std::size_t>(b)] -= 1;
          compare("unbalance", x, base, RunString(x.first_bit(), edited), -1);
        }
      }
    }
    // Both trace kinds must be monotone end to end.
    if (n % r == 0) {
      for (std::int64_t t : {std::int64_t{1}, n / 2, n - 1}) {
        if (t < 1 || t > n) continue;
        ++result.checks;
        auto trace = transforms::balance_trace(x, t);
        auto verdict = transforms::verify_monotone(trace);
        if (!verdict.ok) {
          note_failure(result, "balance_trace " + x.to_bits() + " t=" +
                                   std::to_string(t) + ": " + verdict.message);
        }
      }
    }
    for (std::int64_t t : {std::int64_t{1}, n / 2, n - 1}) {
      if (t < 1 || t > n) continue;
      ++result.checks;
      auto trace = transforms::unbalance_trace(x, t);
      auto verdict = transforms::verify_monotone(trace);
      if (!verdict.ok) {
        note_failure(result, "unbalance_trace " + x.to_bits() + " t=" +
                                 std::to_string(t) + ": " + verdict.message);
      }
    }
  };

  for (int n = 1; n <= exhaustive_max_n; ++n) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      check_string(RunString::from_bits(bits_of(m, n)));
      if (result.failures.size() >= kMaxFailures) return result;
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_trials; ++i) {
    check_string(RunString::from_bits(random_bits(rng, random_max_n)));
    if (result.failures.size() >= kMaxFailures) return result;
  }
  return result;
}

SuiteResult recursion_vs_closed(int b_max_r, int b_max_k, int b_oracle_max_n,
                                int u_max_n, int u_oracle_max_n) {
  SuiteResult result{"recursion-vs-closed", 0, {}};
  // Balanced family: closed form vs recursion on the full grid.
  for (std::int64_t k = 1; k <= b_max_k; ++k) {
    for (std::int64_t r = 1; r <= b_max_r; ++r) {
      const std::int64_t top = r * k + 2;
      const auto closed = balanced::b_closed_all(r, k, top);
      for (std::int64_t t = 0; t <= top; ++t) {
        ++result.checks;
        const Count rec = balanced::b_recursive(r, k, t);
        if (rec != closed[static_cast<std::size_t>(t)]) {
          std::ostringstream msg;
          msg << "b mismatch r=" << r << " k=" << k << " t=" << t
              << " recursive=" << rec << " closed=" << closed[static_cast<std::size_t>(t)];
          if (!note_failure(result, msg.str())) return result;
        }
      }
    }
  }
  // Balanced family vs the enumeration oracle.
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      if (r * k > b_oracle_max_n) continue;
      const RunString b = make_balanced(r, k);
      const auto oracle = enumeration_profile(b.to_bits());
      for (std::int64_t t = 0; t <= r * k; ++t) {
        ++result.checks;
        if (balanced::b_recursive(r, k, t) != Count(oracle[static_cast<std::size_t>(t)])) {
          std::ostringstream msg;
          msg << "b vs oracle r=" << r << " k=" << k << " t=" << t;
          if (!note_failure(result, msg.str())) return result;
        }
      }
    }
  }
  // Unbalanced family: closed form vs recursion, all t including the edges.
  for (std::int64_t n = 3; n <= u_max_n; ++n) {
    for (std::int64_t r = 3; r <= n; ++r) {
      for (std::int64_t t = 0; t <= n + 1; ++t) {
        ++result.checks;
        const Count rec = unbalanced::u_recursive(n, r, t);
        const Count cl = unbalanced::u_closed(n, r, t);
        if (rec != cl) {
          std::ostringstream msg;
          msg << "u mismatch n=" << n << " r=" << r << " t=" << t
              << " recursive=" << rec << " closed=" << cl;
          if (!note_failure(result, msg.str())) return result;
        }
      }
    }
  }
  // Unbalanced family vs the enumeration oracle.
  for (std::int64_t n = 1; n <= u_oracle_max_n; ++n) {
    for (std::int64_t r = 1; r <= n; ++r) {
      const auto oracle = enumeration_profile(make_unbalanced(n, r, 1).to_bits());
      for (std::int64_t t = 0; t <= n; ++t) {
        ++result.checks;
        if (unbalanced::u_recursive(n, r, t) != Count(oracle[static_cast<std::size_t>(t)])) {
          std::ostringstream msg;
          msg << "u vs oracle n=" << n << " r=" << r << " t=" << t
              << " u=" << unbalanced::u_recursive(n, r, t)
              << " oracle=" << oracle[static_cast<std::size_t>(t)];
          if (!note_failure(result, msg.str())) return result;
        }
      }
    }
  }
  return result;
}

SuiteResult patterns_suite(int sandwich_max_n, int symmetry_max_n,
                           int balanced_max_r, int balanced_max_k) {
  SuiteResult result{"patterns", 0, {}};
  // Sandwich with the enumeration oracle in the middle.
  for (int n = 1; n <= sandwich_max_n; ++n) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const std::string s = bits_of(m, n);
      const RunString x = RunString::from_bits(s);
      const auto oracle = enumeration_profile(s);
      std::vector<std::int64_t> shrunk = x.runs();
      for (auto& b : shrunk) --b;
      const auto lower = patterns::bounded_composition_profile(shrunk);
      const auto upper = patterns::bounded_composition_profile(x.runs());
      for (int t = 0; t <= n; ++t) {
        ++result.checks;
        const Count mid(oracle[static_cast<std::size_t>(t)]);
        const Count lo = t < static_cast<int>(lower.size()) ? lower[static_cast<std::size_t>(t)] : Count(0);
        const Count hi = upper[static_cast<std::size_t>(t)];
        if (lo > mid || mid > hi) {
          std::ostringstream msg;
          msg << "sandwich bits=" << s << " t=" << t << " " << lo << " <= " << mid
              << " <= " << hi << " violated";
          if (!note_failure(result, msg.str())) return result;
        }
      }
    }
  }
  // Symmetry across every run composition. Pattern counts depend only on the
  // run-length list, so one first symbol suffices.
  for (std::int64_t n = 1; n <= symmetry_max_n; ++n) {
    for (std::int64_t r = 1; r <= n; ++r) {
      bool keep_going = true;
      for_each_composition(n, r, [&](const std::vector<std::int64_t>& parts) {
        if (!keep_going) return;
        const auto profile = patterns::bounded_composition_profile(parts);
        for (std::int64_t t = 0; t <= n; ++t) {
          ++result.checks;
          if (profile[static_cast<std::size_t>(t)] != profile[static_cast<std::size_t>(n - t)]) {
            std::ostringstream msg;
            msg << "symmetry runs=" << show_runs(parts) << " t=" << t;
            keep_going = note_failure(result, msg.str());
            return;
          }
        }
      });
      if (!keep_going) return result;
    }
  }
  // Balanced closed form vs the DP, and its bound.
  for (std::int64_t r = 1; r <= balanced_max_r; ++r) {
    for (std::int64_t k = 1; k <= balanced_max_k; ++k) {
      const std::vector<std::int64_t> runs(static_cast<std::size_t>(r), k);
      const auto profile = patterns::bounded_composition_profile(runs);
      for (std::int64_t t = 0; t <= r * k + 2; ++t) {
        const Count closed = patterns::pattern_count_balanced(r, k, t);
        const Count dp = t <= r * k ? profile[static_cast<std::size_t>(t)] : Count(0);
        result.checks += 3;
        if (closed != dp) {
          std::ostringstream msg;
          msg << "balanced patterns r=" << r << " k=" << k << " t=" << t
              << " closed=" << closed << " dp=" << dp;
          if (!note_failure(result, msg.str())) return result;
        }
        if (closed != balanced::p0_count(r, t, k + 1)) {
          std::ostringstream msg;
          msg << "balanced patterns vs bounded tuples r=" << r << " k=" << k << " t=" << t;
          if (!note_failure(result, msg.str())) return result;
        }
        if (closed > patterns::balanced_pattern_upper(r, k, t)) {
          std::ostringstream msg;
          msg << "balanced pattern bound r=" << r << " k=" << k << " t=" << t;
          if (!note_failure(result, msg.str())) return result;
        }
      }
    }
  }
  return result;
}

SuiteResult extremality(int max_r, int max_n, int pivot_oracle_max_n) {
  SuiteResult result{"extremality", 0, {}};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t r = 1; r <= std::min<std::int64_t>(max_r, n); ++r) {
      const std::int64_t k_ceil = (n + r - 1) / r;
      const auto lower = unbalanced::lower_bound_all(n, r, n);
      const auto upper = balanced::b_closed_all(r, k_ceil, n);
      bool keep_going = true;
      for_each_composition(n, r, [&](const std::vector<std::int64_t>& parts) {
        if (!keep_going) return;
        const auto counts = exact::count_all_t(RunString(0, parts));
        for (std::int64_t t = 0; t <= n; ++t) {
          ++result.checks;
          if (lower[static_cast<std::size_t>(t)] > counts[static_cast<std::size_t>(t)] ||
              counts[static_cast<std::size_t>(t)] > upper[static_cast<std::size_t>(t)]) {
            std::ostringstream msg;
            msg << "envelope runs=" << show_runs(parts) << " t=" << t << " lower="
                << lower[static_cast<std::size_t>(t)] << " count="
                << counts[static_cast<std::size_t>(t)] << " upper="
                << upper[static_cast<std::size_t>(t)];
            keep_going = note_failure(result, msg.str());
            return;
          }
        }
      });
      if (!keep_going) return result;
    }
  }
  // Edge pivots minimize among the unbalanced strings (oracle-checked).
  for (std::int64_t n = 1; n <= pivot_oracle_max_n; ++n) {
    for (std::int64_t r = 1; r <= n; ++r) {
      const auto edge = enumeration_profile(make_unbalanced(n, r, 1).to_bits());
      for (std::int64_t j = 2; j <= r; ++j) {
        const auto other = enumeration_profile(make_unbalanced(n, r, j).to_bits());
        for (std::int64_t t = 0; t <= n; ++t) {
          ++result.checks;
          if (other[static_cast<std::size_t>(t)] < edge[static_cast<std::size_t>(t)]) {
            std::ostringstream msg;
            msg << "pivot order n=" << n << " r=" << r << " j=" << j << " t=" << t;
            if (!note_failure(result, msg.str())) return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace subseq::verify
