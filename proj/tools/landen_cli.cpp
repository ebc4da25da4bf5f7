// landen: evaluate Jacobi functions, generalized Landen coefficients, the m~
// table, and the verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "landen/elliptic.hpp"
#include "landen/errors.hpp"
#include "landen/general.hpp"
#include "landen/report.hpp"

namespace {

using namespace landen;

// "1.25", "K", "0.5K" or "-3K"; K is the quarter period at m.
double parse_argument(const std::string& text, double m) {
  if (!text.empty() && text.back() == 'K') {
    const std::string coef = text.substr(0, text.size() - 1);
    double factor = 1.0;
    if (coef == "-") {
      factor = -1.0;
    } else if (!coef.empty()) {
      factor = report::parse_real_list(coef).at(0);
    }
    return factor * compute_k(m);
  }
  const auto values = report::parse_real_list(text);
  if (values.size() != 1) throw DomainError("--x takes a single value");
  return values.front();
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  out << text;
  return 0;
}

int emit_report(const report::ReportDocument& doc, const std::string& out_path) {
  const int written = emit(doc.dump(), out_path);
  return written != 0 ? written : report::exit_code(doc.status());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Landen transformations of Jacobi elliptic functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(report::kToolVersion));

  std::string out_path;
  std::string fn = "sn";
  std::string x_text = "0";
  double m = 0.5;
  std::string family_name = "dn";
  int p = 2;
  int p_min = 2;
  int p_max = 7;
  std::string m_list;
  double tol = 1e-10;
  int grid = 128;
  std::string format_name = "paper";
  std::string scope_name = "all";

  auto* eval = app.add_subcommand("eval", "Print sn, cn, dn at (x, m) or K(m)");
  eval->add_option("--fn", fn, "sn, cn, dn or K")->check(CLI::IsMember({"sn", "cn", "dn", "K"}));
  eval->add_option("--x", x_text, "Argument; a multiple of K such as 0.5K is accepted");
  eval->add_option("--m", m, "Parameter m in [0, 1]");
  eval->add_option("--out", out_path, "Output path (default stdout)");

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients of one generalized formula as JSON");
  coeffs->add_option("--family", family_name, "dn, cn or sn");
  coeffs->add_option("--p", p, "Number of terms, p >= 2");
  coeffs->add_option("--m", m, "Parameter m in [0, 1]");
  coeffs->add_option("--out", out_path, "Output path (default stdout)");

  auto* table = app.add_subcommand("table", "CSV table of m~ over p and m");
  table->add_option("--p-min", p_min, "Smallest p");
  table->add_option("--p-max", p_max, "Largest p");
  table->add_option("--m-list", m_list, "Comma-separated m values");
  table->add_option("--format", format_name, "paper or full");
  table->add_option("--out", out_path, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite, JSON report");
  verify->add_option("--scope", scope_name, "classic, family, sine-gordon or all");
  verify->add_option("--tol", tol, "Tolerance on identity residuals");
  verify->add_option("--grid", grid, "Points per period, >= 16");
  verify->add_option("--out", out_path, "Output path (default stdout)");

  auto* sg_check = app.add_subcommand("sg-check", "First integral and ODE residual of one solution");
  sg_check->add_option("--family", family_name, "dn, cn or sn");
  sg_check->add_option("--p", p, "Number of terms, p >= 2");
  sg_check->add_option("--m", m, "Parameter m in [0, 1]");
  sg_check->add_option("--grid", grid, "Points per period, >= 64")->default_val(256);
  sg_check->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      double value = 0.0;
      if (fn == "K") {
        value = compute_k(m);
      } else {
        const auto t = jacobi_eval(parse_argument(x_text, m), m);
        value = fn == "sn" ? t.sn : fn == "cn" ? t.cn : t.dn;
      }
      return emit(report::format_eval(value) + "\n", out_path);
    }
    if (*coeffs) {
      return emit_report(report::coeffs_report(parse_family(family_name), p, m), out_path);
    }
    if (*table) {
      const auto ms = m_list.empty() ? report::default_table_m() : report::parse_real_list(m_list);
      const auto t = report::compute_table(p_min, p_max, ms);
      return emit(report::table_csv(t, report::parse_format(format_name)), out_path);
    }
    if (*verify) {
      return emit_report(report::verify_report(report::parse_scope(scope_name), tol, grid),
                         out_path);
    }
    if (*sg_check) {
      return emit_report(report::sg_check_report(parse_family(family_name), p, m, grid),
                         out_path);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return 2;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violated: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
