#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "subseq/count.hpp"
#include "subseq/runstring.hpp"

namespace subseq::exact {

/// Number of distinct strings obtainable from x by deleting exactly t
/// symbols. Conventions: 1 at t = 0 and t = |x|, 0 for t > |x|.
///
/// Memoized recursion over suffix states: peeling one symbol of the first
/// run either keeps it (suffix one position later, same t) or deletes the
/// whole remaining first run plus the first symbol of the next run
/// (t reduced by the remaining first-run length + going past one symbol).
/// O(n * t) exact-integer operations, memo local to the call.
Count count_subsequences(const RunString& x, std::int64_t t);

/// count_subsequences for every t = 0..|x|, sharing one memo table.
std::vector<Count> count_all_t(const RunString& x);

inline constexpr std::int64_t kDefaultEnumerationCap = 22;

/// Brute-force oracle: the literal set of distinct strings reachable by
/// exactly t deletions. Refuses strings longer than length_cap (the work and
/// memory grow like 2^|x|).
std::set<std::string> enumerate_subsequences(
    const RunString& x, std::int64_t t,
    std::int64_t length_cap = kDefaultEnumerationCap);

}  // namespace subseq::exact
