#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "landen/general.hpp"

namespace landen::report {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Degenerate };

[[nodiscard]] std::string_view to_string(Status status);

enum class NumberFormat { Paper, Full };

/// Parses "paper" or "full"; throws DomainError otherwise.
[[nodiscard]] NumberFormat parse_format(std::string_view name);

/// Leading-dot mantissa with four significant figures: 0.02944 -> ".2944e-1",
/// 0.1111 -> ".1111". Exact 0 and 1 print as "0" and "1".
[[nodiscard]] std::string format_paper(double value);
/// Shortest text that parses back to the same double.
[[nodiscard]] std::string format_full(double value);
[[nodiscard]] std::string format_number(double value, NumberFormat format);
/// Fifteen significant digits, keeping a ".0" on integral values ("1.0").
[[nodiscard]] std::string format_eval(double value);

/// One entry of a report. A record with a residual passes when
/// residual <= tolerance; a degenerate record carries no residual.
struct Record {
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::optional<double> residual;
  std::optional<double> tolerance;
  bool degenerate = false;

  [[nodiscard]] bool passed() const;
};

struct ReportDocument {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<Record> results;

  /// Fail if any record fails, otherwise Degenerate if any record is, else Pass.
  [[nodiscard]] Status status() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
  /// Two-space indented JSON followed by a newline.
  [[nodiscard]] std::string dump() const;
};

/// 0 for Pass, 1 for Fail, 2 for Degenerate.
[[nodiscard]] int exit_code(Status status);

/// The m grid of the published table of m~ values.
[[nodiscard]] std::vector<double> default_table_m();

struct TableRow {
  double m;
  std::vector<double> m_tilde;  ///< one entry per p, p_min first
};

struct Table {
  int p_min = 2;
  int p_max = 7;
  std::vector<TableRow> rows;
};

/// m~ from the dn family for every (m, p). Requires 2 <= p_min <= p_max.
[[nodiscard]] Table compute_table(int p_min, int p_max, std::span<const double> m_list);

/// Header "m,p2,...", one LF-terminated row per m. The m column always uses
/// the shortest round-trip form.
[[nodiscard]] std::string table_csv(const Table& table, NumberFormat format);

/// Inverse of table_csv for either format. Throws DomainError on malformed input.
[[nodiscard]] Table parse_table_csv(std::string_view csv);

/// Parses a comma-separated list of reals.
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);

[[nodiscard]] ReportDocument coeffs_report(Family family, int p, double m);

enum class VerifyScope { Classic, Family, SineGordon, All };

[[nodiscard]] VerifyScope parse_scope(std::string_view name);
[[nodiscard]] std::string_view to_string(VerifyScope scope);

/// p range and m grid swept by verify.
inline constexpr int kVerifyPMin = 2;
inline constexpr int kVerifyPMax = 7;
[[nodiscard]] std::vector<double> verify_m_grid();

/// Relative tolerance of the first-integral checks; --tol does not apply to them.
inline constexpr double kFirstIntegralTol = 1e-8;

/// Classic and generalized identity residuals and cross-family m~ differences
/// are checked against tol. Requires tol > 0 and grid >= 16.
[[nodiscard]] ReportDocument verify_report(VerifyScope scope, double tol, int grid);

/// Largest acceptable ODE residual reported by sg-check.
inline constexpr double kOdeTol = 1e-6;

/// First integral, classification and ODE residual of one superposed solution.
[[nodiscard]] ReportDocument sg_check_report(Family family, int p, double m, int grid);

}  // namespace landen::report
