#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subseq/report.hpp"
#include "subseq/runstring.hpp"

namespace subseq::cli {

/// Accepts either a literal bit string ("0011") or a run list in the form
/// FIRSTBIT:len,len,... ("0:3,7,2,1,2"). Throws std::invalid_argument with a
/// diagnostic on malformed input.
RunString parse_string_spec(const std::string& spec);

struct SweepOptions {
  std::int64_t n = 0;
  std::int64_t r = 0;
  /// Run length for the new_upper column; defaults to ceil(n/r). Values
  /// below ceil(n/r) are rejected.
  std::optional<std::int64_t> k;
  /// When set, an exact column is computed for this string (must have
  /// length n and r runs).
  std::optional<RunString> exact_string;
};

/// One row per t = 0..n with every bound column. Deterministic for fixed
/// options.
std::vector<bounds::BoundsReport> sweep_rows(const SweepOptions& options);

/// Full CSV file contents: header
/// t,lev_lower,hr_lower,new_lower,exact,new_upper,hr_upper,lev_upper,naive_upper
/// then one row per t. Exact integers in base 10, empty exact field when no
/// string was supplied, LF line endings.
std::string sweep_csv(const SweepOptions& options);

/// bounds_report rendered as "key: value" lines in column order.
std::string format_report(const bounds::BoundsReport& report);

}  // namespace subseq::cli
