#include "subseq/cli.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "subseq/balanced.hpp"
#include "subseq/bounds.hpp"
#include "subseq/exact.hpp"
#include "subseq/unbalanced.hpp"

namespace subseq::cli {

namespace {

std::int64_t parse_int(std::string_view token, const char* context) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string("invalid integer in ") + context + ": '" +
                                std::string(token) + "'");
  }
  return value;
}

}  // namespace

RunString parse_string_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    return RunString::from_bits(spec);
  }
  // FIRSTBIT:len,len,...
  const std::string_view head(spec.data(), colon);
  if (head != "0" && head != "1") {
    throw std::invalid_argument("run form must start with 0: or 1:, got '" + spec + "'");
  }
  std::vector<std::int64_t> runs;
  std::string_view rest(spec.data() + colon + 1, spec.size() - colon - 1);
  if (rest.empty()) throw std::invalid_argument("run form has no run lengths: '" + spec + "'");
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    const std::int64_t len = parse_int(token, "run list");
    if (len < 1) throw std::invalid_argument("run lengths must be positive: '" + spec + "'");
    runs.push_back(len);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw std::invalid_argument("trailing comma in run list: '" + spec + "'");
  }
  return RunString(head == "1" ? 1 : 0, std::move(runs));
}

std::vector<bounds::BoundsReport> sweep_rows(const SweepOptions& options) {
  const std::int64_t n = options.n;
  const std::int64_t r = options.r;
  if (r < 1 || r > n) throw std::invalid_argument("sweep: need 1 <= r <= n");
  const std::int64_t k_ceil = (n + r - 1) / r;
  const std::int64_t k = options.k.value_or(k_ceil);
  if (k < k_ceil) {
    throw std::invalid_argument("sweep: k must be at least ceil(n/r) = " +
                                std::to_string(k_ceil));
  }
  std::vector<Count> exact_column;
  if (options.exact_string) {
    const RunString& x = *options.exact_string;
    if (x.length() != n || x.run_count() != r) {
      throw std::invalid_argument("sweep: --exact string must have length n and r runs");
    }
    exact_column = exact::count_all_t(x);
  }

  const auto new_upper = balanced::b_closed_all(r, k, n);
  const auto new_lower = unbalanced::lower_bound_all(n, r, n);

  std::vector<bounds::BoundsReport> rows;
  rows.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t t = 0; t <= n; ++t) {
    bounds::BoundsReport row;
    row.n = n;
    row.r = r;
    row.t = t;
    row.k_ceil = k;
    row.lev_lower = bounds::lev_lower(r, t);
    row.hr_lower = bounds::hr_lower(r, t);
    row.new_lower = new_lower[static_cast<std::size_t>(t)];
    row.new_upper = new_upper[static_cast<std::size_t>(t)];
    row.hr_upper = bounds::hr_upper(n, t);
    row.lev_upper = bounds::lev_upper(r, t);
    row.naive_upper = bounds::naive_upper(n, t);
    if (!exact_column.empty()) row.exact = exact_column[static_cast<std::size_t>(t)];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const SweepOptions& options) {
  const auto rows = sweep_rows(options);
  std::ostringstream out;
  out << "t,lev_lower,hr_lower,new_lower,exact,new_upper,hr_upper,lev_upper,naive_upper\n";
  for (const auto& row : rows) {
    out << row.t << ',' << row.lev_lower << ',' << row.hr_lower << ','
        << row.new_lower << ',';
    if (row.exact) out << *row.exact;
    out << ',' << row.new_upper << ',' << row.hr_upper << ',' << row.lev_upper
        << ',' << row.naive_upper << '\n';
  }
  return out.str();
}

std::string format_report(const bounds::BoundsReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << "\n"
      << "r: " << report.r << "\n"
      << "t: " << report.t << "\n"
      << "k_ceil: " << report.k_ceil << "\n"
      << "lev_lower: " << report.lev_lower << "\n"
      << "hr_lower: " << report.hr_lower << "\n"
      << "new_lower: " << report.new_lower << "\n";
  if (report.exact) out << "exact: " << *report.exact << "\n";
  out << "new_upper: " << report.new_upper << "\n"
      << "hr_upper: " << report.hr_upper << "\n"
      << "lev_upper: " << report.lev_upper << "\n"
      << "naive_upper: " << report.naive_upper << "\n";
  return out.str();
}

}  // namespace subseq::cli
