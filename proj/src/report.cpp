#include "landen/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <system_error>

#include <fmt/format.h>

#include "landen/classic.hpp"
#include "landen/errors.hpp"
#include "landen/sine_gordon.hpp"

namespace landen::report {
namespace {

using json = nlohmann::ordered_json;

// Sample offset for the first-integral grids; keeps x = 0 (where several
// kinds touch |psi| = 1) off the grid.
constexpr double kSampleOffset = 0.0123;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) {
  return v ? number_or_null(*v) : json(nullptr);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError(fmt::format("not a number: '{}'", text));
  }
  return value;
}

std::string_view kind_label(ClassicKind kind) {
  switch (kind) {
    case ClassicKind::Sn: return "sn";
    case ClassicKind::Cn: return "cn";
    case ClassicKind::Dn: return "dn";
  }
  return "?";
}

Record residual_record(json data, double residual, double tol) {
  data["max_abs"] = number_or_null(residual);
  data["tolerance"] = tol;
  Record r;
  r.data = std::move(data);
  r.residual = residual;
  r.tolerance = tol;
  return r;
}

Record degenerate_record(json data, const std::exception& e) {
  data["degenerate"] = e.what();
  Record r;
  r.data = std::move(data);
  r.degenerate = true;
  return r;
}

void classic_suite(ReportDocument& doc, double tol, int grid) {
  for (double m : verify_m_grid()) {
    for (ClassicKind kind : {ClassicKind::Sn, ClassicKind::Cn, ClassicKind::Dn}) {
      const auto r = classic_residual(kind, m, grid);
      doc.results.push_back(residual_record(
          json{{"suite", "classic"}, {"identity", kind_label(kind)}, {"m", m}, {"grid", grid}},
          r.max_abs, tol));
    }
    const auto two = classic_two_term_residual(m, grid);
    doc.results.push_back(residual_record(
        json{{"suite", "classic"}, {"identity", "dn-two-term"}, {"m", m}, {"grid", grid}},
        two.max_abs, tol));
  }
}

void family_suite(ReportDocument& doc, double tol, int grid) {
  const auto ms = verify_m_grid();
  for (Family family : {Family::Dn, Family::Cn, Family::Sn}) {
    for (int p = kVerifyPMin; p <= kVerifyPMax; ++p) {
      for (double m : ms) {
        json data{{"suite", "family"}, {"family", to_string(family)}, {"p", p}, {"m", m},
                  {"grid", grid}};
        try {
          const auto r = verify_identity(LandenSpec(family, p), m, grid);
          doc.results.push_back(residual_record(std::move(data), r.max_abs, tol));
        } catch (const DegenerateError& e) {
          doc.results.push_back(degenerate_record(std::move(data), e));
        }
      }
    }
  }
  for (int p = kVerifyPMin; p <= kVerifyPMax; ++p) {
    for (double m : ms) {
      const double dn = coefficients(LandenSpec(Family::Dn, p), m).m_tilde;
      const double cn = coefficients(LandenSpec(Family::Cn, p), m).m_tilde;
      const double sn = coefficients(LandenSpec(Family::Sn, p), m).m_tilde;
      const double diff = std::max({std::abs(dn - cn), std::abs(dn - sn), std::abs(cn - sn)});
      doc.results.push_back(residual_record(json{{"suite", "cross-family"},
                                                 {"p", p},
                                                 {"m", m},
                                                 {"m_tilde_dn", dn},
                                                 {"m_tilde_cn", cn},
                                                 {"m_tilde_sn", sn}},
                                            diff, tol));
    }
  }
  for (double m : ms) {
    const auto c3 = closed_form_p3(m);
    const double g3 = coefficients(LandenSpec(Family::Dn, 3), m).m_tilde;
    doc.results.push_back(residual_record(
        json{{"suite", "closed-form"}, {"p", 3}, {"m", m}, {"m_tilde_closed", c3.m_tilde},
             {"m_tilde_general", g3}, {"quartic_residual", c3.quartic_residual},
             {"cn_residual", c3.cn_residual}},
        std::max({std::abs(c3.m_tilde - g3), c3.quartic_residual, c3.cn_residual}), tol));
    const auto c4 = closed_form_p4(m);
    const double g4 = coefficients(LandenSpec(Family::Dn, 4), m).m_tilde;
    doc.results.push_back(residual_record(
        json{{"suite", "closed-form"}, {"p", 4}, {"m", m}, {"m_tilde_closed", c4.m_tilde},
             {"m_tilde_general", g4}, {"half_residual", c4.half_residual},
             {"quarter_residual", c4.quarter_residual}},
        std::max({std::abs(c4.m_tilde - g4), c4.half_residual, c4.quarter_residual}), tol));
  }
}

// Distance of c outside the range stated for its kind, relative to c_scale.
double range_violation(sg::SolutionKind kind, double c) {
  using K = sg::SolutionKind;
  const bool cn_kind = kind == K::CnOdd || kind == K::CnEvenAlt;
  const double outside = cn_kind ? std::max(0.0, 2.0 - c)
                                 : std::max({0.0, c - 2.0, -2.0 - c});
  return outside / sg::c_scale(c);
}

// The four first-integral checks folded into one record; the residual is the
// largest of them.
Record first_integral_record(Family family, int p, double m, int grid) {
  const auto fam = sg::SolutionFamily::of(family, p, m);
  json data{{"suite", "sine-gordon"}, {"kind", sg::to_string(fam.kind())}, {"p", p}, {"m", m}};
  const auto closed = sg::closed_form_c(fam);
  try {
    const auto xs = sg::period_samples(fam, grid, kSampleOffset);
    const auto fi = sg::first_integral(fam, xs);
    const double scale = sg::c_scale(fi.c);
    const double spread = fi.spread / scale;
    const double range = range_violation(fam.kind(), fi.c);
    const double closed_diff = closed ? std::abs(*closed - fi.c) / scale : 0.0;
    const auto cls = sg::classify(fi);
    const double mt = coefficients(fam.spec(), m).m_tilde;
    const double mt_diff =
        cls.m_tilde ? std::abs(*cls.m_tilde - mt) : std::numeric_limits<double>::infinity();

    data["c"] = fi.c;
    data["spread_rel"] = spread;
    data["samples_used"] = fi.samples_used;
    data["samples_skipped"] = fi.samples_skipped;
    data["range_violation"] = range;
    data["closed_form_c"] = optional_number(closed);
    data["closed_form_diff_rel"] = closed ? json(closed_diff) : json(nullptr);
    data["branch"] = sg::to_string(cls.branch);
    data["implied_m_tilde"] = optional_number(cls.m_tilde);
    data["m_tilde"] = mt;
    data["m_tilde_diff"] = number_or_null(mt_diff);
    return residual_record(std::move(data), std::max({spread, range, closed_diff, mt_diff}),
                           kFirstIntegralTol);
  } catch (const DegenerateError& e) {
    data["closed_form_c"] = optional_number(closed);
    return degenerate_record(std::move(data), e);
  }
}

void sine_gordon_suite(ReportDocument& doc, int grid) {
  for (Family family : {Family::Dn, Family::Cn, Family::Sn}) {
    for (int p = kVerifyPMin; p <= kVerifyPMax; ++p) {
      for (double m : verify_m_grid()) {
        doc.results.push_back(first_integral_record(family, p, m, grid));
      }
    }
  }
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::Degenerate: return "Degenerate";
  }
  return "?";
}

NumberFormat parse_format(std::string_view name) {
  if (name == "paper") return NumberFormat::Paper;
  if (name == "full") return NumberFormat::Full;
  throw DomainError(fmt::format("unknown format '{}' (expected paper or full)", name));
}

std::string format_paper(double value) {
  if (value == 0.0) return "0";
  if (value == 1.0) return "1";
  if (!std::isfinite(value)) return format_full(value);
  // d.ddde+XX -> .dddd e(XX+1)
  const std::string sci = fmt::format("{:.3e}", std::abs(value));
  const std::size_t e = sci.find('e');
  const int exponent = std::atoi(sci.c_str() + e + 1) + 1;
  std::string out = value < 0 ? "-." : ".";
  out += sci[0];
  out += sci.substr(2, e - 2);
  if (exponent != 0) out += fmt::format("e{}", exponent);
  return out;
}

std::string format_full(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_number(double value, NumberFormat format) {
  return format == NumberFormat::Paper ? format_paper(value) : format_full(value);
}

std::string format_eval(double value) {
  std::string out = fmt::format("{:.15g}", value);
  if (std::isfinite(value) && out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

bool Record::passed() const {
  if (!residual || !tolerance) return true;
  return *residual <= *tolerance;
}

Status ReportDocument::status() const {
  bool degenerate = false;
  for (const auto& r : results) {
    if (!r.passed()) return Status::Fail;
    degenerate = degenerate || r.degenerate;
  }
  return degenerate ? Status::Degenerate : Status::Pass;
}

nlohmann::ordered_json ReportDocument::to_json() const {
  json doc;
  doc["tool_version"] = kToolVersion;
  doc["command"] = command;
  doc["parameters"] = parameters;
  json list = json::array();
  for (const auto& r : results) {
    json entry = r.data;
    if (r.residual) entry["pass"] = r.passed();
    list.push_back(std::move(entry));
  }
  doc["results"] = std::move(list);
  doc["status"] = to_string(status());
  return doc;
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

int exit_code(Status status) {
  switch (status) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Degenerate: return 2;
  }
  return 1;
}

std::vector<double> default_table_m() {
  return {0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 0.9999, 0.99999, 1.0};
}

Table compute_table(int p_min, int p_max, std::span<const double> m_list) {
  if (p_min < 2 || p_max < p_min) {
    throw DomainError(fmt::format("table needs 2 <= p_min <= p_max, got {}..{}", p_min, p_max));
  }
  Table table{p_min, p_max, {}};
  for (double m : m_list) {
    TableRow row{m, {}};
    for (int p = p_min; p <= p_max; ++p) {
      row.m_tilde.push_back(coefficients(LandenSpec(Family::Dn, p), m).m_tilde);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string table_csv(const Table& table, NumberFormat format) {
  std::string out = "m";
  for (int p = table.p_min; p <= table.p_max; ++p) out += fmt::format(",p{}", p);
  out += '\n';
  for (const auto& row : table.rows) {
    out += format_full(row.m);
    for (double v : row.m_tilde) {
      out += ',';
      out += format_number(v, format);
    }
    out += '\n';
  }
  return out;
}

Table parse_table_csv(std::string_view csv) {
  auto lines = split(csv, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw DomainError("empty table");

  const auto header = split(lines.front(), ',');
  if (header.size() < 2 || trim(header[0]) != "m") throw DomainError("table header must start with m");
  std::vector<int> ps;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const auto h = trim(header[i]);
    int p = 0;
    const auto [ptr, ec] = std::from_chars(h.data() + 1, h.data() + h.size(), p);
    if (h.size() < 2 || h[0] != 'p' || ec != std::errc{} || ptr != h.data() + h.size()) {
      throw DomainError(fmt::format("bad table column '{}'", h));
    }
    if (!ps.empty() && p != ps.back() + 1) throw DomainError("table columns must be consecutive p");
    ps.push_back(p);
  }

  Table table{ps.front(), ps.back(), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != header.size()) {
      throw DomainError(fmt::format("table row {} has {} cells, expected {}", i, cells.size(),
                                    header.size()));
    }
    TableRow row{parse_real(cells[0]), {}};
    for (std::size_t j = 1; j < cells.size(); ++j) row.m_tilde.push_back(parse_real(cells[j]));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part));
  if (out.empty()) throw DomainError("empty list");
  return out;
}

ReportDocument coeffs_report(Family family, int p, double m) {
  ReportDocument doc;
  doc.command = "coeffs";
  doc.parameters = json{{"family", to_string(family)}, {"p", p}, {"m", m}};
  json data{{"family", to_string(family)}, {"p", p}, {"m", m}};
  try {
    const auto c = coefficients(LandenSpec(family, p), m);
    data["alpha"] = number_or_null(c.alpha);
    data["a_sum"] = optional_number(c.a_sum);
    data["m_tilde"] = number_or_null(c.m_tilde);
    data["arg_scale"] = number_or_null(c.arg_scale);
    data["clamped_to_unit"] = c.clamped_to_unit;
    Record r;
    r.data = std::move(data);
    doc.results.push_back(std::move(r));
  } catch (const DegenerateError& e) {
    doc.results.push_back(degenerate_record(std::move(data), e));
  }
  return doc;
}

VerifyScope parse_scope(std::string_view name) {
  if (name == "classic") return VerifyScope::Classic;
  if (name == "family") return VerifyScope::Family;
  if (name == "sine-gordon") return VerifyScope::SineGordon;
  if (name == "all") return VerifyScope::All;
  throw DomainError(
      fmt::format("unknown scope '{}' (expected classic, family, sine-gordon or all)", name));
}

std::string_view to_string(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::Classic: return "classic";
    case VerifyScope::Family: return "family";
    case VerifyScope::SineGordon: return "sine-gordon";
    case VerifyScope::All: return "all";
  }
  return "?";
}

std::vector<double> verify_m_grid() { return {0.1, 0.25, 0.5, 0.75, 0.9, 0.99}; }

ReportDocument verify_report(VerifyScope scope, double tol, int grid) {
  if (!(tol > 0.0)) throw DomainError(fmt::format("verify needs tol > 0, got {}", tol));
  if (grid < 16) throw DomainError(fmt::format("verify needs grid >= 16, got {}", grid));
  ReportDocument doc;
  doc.command = "verify";
  doc.parameters = json{{"scope", to_string(scope)}, {"tol", tol}, {"grid", grid}};
  const bool all = scope == VerifyScope::All;
  if (all || scope == VerifyScope::Classic) classic_suite(doc, tol, grid);
  if (all || scope == VerifyScope::Family) family_suite(doc, tol, grid);
  if (all || scope == VerifyScope::SineGordon) sine_gordon_suite(doc, grid);
  return doc;
}

ReportDocument sg_check_report(Family family, int p, double m, int grid) {
  const auto fam = sg::SolutionFamily::of(family, p, m);
  ReportDocument doc;
  doc.command = "sg-check";
  doc.parameters = json{{"family", to_string(family)}, {"p", p}, {"m", m}, {"grid", grid}};
  doc.results.push_back(first_integral_record(family, p, m, grid));

  json data{{"suite", "ode"}, {"kind", sg::to_string(fam.kind())}, {"p", p}, {"m", m},
            {"grid", grid}};
  try {
    const auto ode = sg::ode_residual(fam, grid);
    data["step"] = ode.step;
    data["branch_ok"] = ode.branch_ok;
    if (!ode.note.empty()) data["note"] = ode.note;
    const double residual =
        ode.branch_ok ? ode.max_abs : std::numeric_limits<double>::infinity();
    doc.results.push_back(residual_record(std::move(data), residual, kOdeTol));
  } catch (const DegenerateError& e) {
    doc.results.push_back(degenerate_record(std::move(data), e));
  }
  return doc;
}

}  // namespace landen::report
