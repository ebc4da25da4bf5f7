#include "landen/general.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "landen/elliptic.hpp"
#include "landen/errors.hpp"
#include "landen/summation.hpp"

namespace landen {
namespace {

using xreal = long double;
using detail::CompensatedSum;
using detail::WideCoefficients;

// A p-term sum whose value is below this fraction of the sum of its
// magnitudes has lost more than six significant digits to cancellation.
constexpr xreal kCancellationFloor = 1e6L * std::numeric_limits<xreal>::epsilon();

void require_parameter(double m, const char* op) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError(fmt::format("{}: parameter m = {} outside [0, 1]", op, m));
  }
}

xreal reciprocal_of(const CompensatedSum<xreal>& sum, const LandenSpec& spec, double m) {
  const xreal value = sum.value();
  if (std::abs(value) <= kCancellationFloor * sum.magnitude()) {
    throw DegenerateError(fmt::format(
        "{} p={} at m={}: normalising sum cancelled below rounding level", to_string(spec.family()),
        spec.p(), m));
  }
  return 1 / value;
}

struct ShiftedSums {
  CompensatedSum<xreal> first;
  CompensatedSum<xreal> cubes;
};

// sum_i sign_i f(s_i) and sum_i sign_i f(s_i)^3 over the p shifts of spec.
template <typename Pick>
ShiftedSums shifted_sums(const LandenSpec& spec, xreal m, xreal quarter, bool alternate,
                         Pick pick) {
  ShiftedSums sums;
  for (int i = 0; i < spec.p(); ++i) {
    const xreal f = pick(jacobi(detail::term_shift(spec, quarter, i), m));
    const xreal sign = (alternate && i % 2 != 0) ? -1 : 1;
    sums.first.add(sign * f);
    sums.cubes.add(sign * f * f * f);
  }
  return sums;
}

WideCoefficients at_zero(const LandenSpec& spec) {
  WideCoefficients c;
  c.at_zero = true;
  c.quarter = std::numbers::pi_v<xreal> / 2;
  const xreal p = spec.p();
  const bool cancelling = spec.family() == Family::Cn || (spec.family() == Family::Sn && spec.odd());
  if (cancelling) {
    c.alpha = std::numeric_limits<xreal>::infinity();
    c.arg_scale = std::numeric_limits<xreal>::quiet_NaN();
    if (spec.family() == Family::Cn) {
      CompensatedSum<xreal> cubes;
      for (int i = 0; i < spec.p(); ++i) {
        const xreal sign = (!spec.odd() && i % 2 != 0) ? -1 : 1;
        const xreal f = spec.odd() ? std::cos(detail::term_shift(spec, c.quarter, i)) : xreal(1);
        cubes.add(sign * f * f * f);
      }
      c.a_sum = cubes.value();
    } else {
      c.has_a_sum = false;
    }
  } else {
    c.alpha = 1 / p;
    c.arg_scale = c.alpha;
    if (spec.family() == Family::Sn) {
      xreal product = 1;
      for (int i = 1; i < spec.p(); ++i) {
        product *= std::sin(std::numbers::pi_v<xreal> * i / p);
      }
      c.a_sum = product;
    } else {
      c.a_sum = p;
    }
  }
  c.m_tilde = 0;
  return c;
}

WideCoefficients at_unit(const LandenSpec& spec, double m) {
  WideCoefficients c;
  c.m = 1;
  c.at_unit = true;
  c.clamped = m < 1.0;
  c.quarter = std::numeric_limits<xreal>::infinity();
  c.alpha = 1;
  c.a_sum = 1;
  c.has_a_sum = !(spec.family() == Family::Sn && spec.odd());
  c.m_tilde = 1;
  c.arg_scale = 1;
  return c;
}

WideCoefficients interior(const LandenSpec& spec, double m_in) {
  WideCoefficients c;
  const xreal m = m_in;
  c.m = m;
  c.quarter = complete_k(m);
  const xreal p = spec.p();
  const bool odd = spec.odd();
  auto dn_of = [](const BasicTriple<xreal>& t) { return t.dn; };
  auto cn_of = [](const BasicTriple<xreal>& t) { return t.cn; };

  switch (spec.family()) {
    case Family::Dn: {
      const auto sums = shifted_sums(spec, m, c.quarter, false, dn_of);
      c.alpha = reciprocal_of(sums.first, spec, m_in);
      c.a_sum = sums.cubes.value();
      const xreal a = c.alpha;
      c.m_tilde = (m - 2) * a * a + 2 * a * a * a * c.a_sum;
      c.arg_scale = a;
      break;
    }
    case Family::Cn: {
      if (odd) {
        const auto sums = shifted_sums(spec, m, c.quarter, false, cn_of);
        c.alpha = reciprocal_of(sums.first, spec, m_in);
        c.a_sum = sums.cubes.value();
        const xreal a = c.alpha;
        c.m_tilde = m / ((1 - 2 * m) * a * a + 2 * m * a * a * a * c.a_sum);
        c.arg_scale = a * std::sqrt(c.m_tilde / m);
      } else {
        if (m_in < kCnEvenDegenerateBelow) {
          throw DegenerateError(fmt::format(
              "cn p={} at m={}: alternating-sum degenerate below m = {}", spec.p(), m_in,
              kCnEvenDegenerateBelow));
        }
        const auto sums = shifted_sums(spec, m, c.quarter, true, dn_of);
        c.alpha = reciprocal_of(sums.first, spec, m_in);
        c.a_sum = sums.cubes.value();
        const xreal a = c.alpha;
        c.m_tilde = 1 / ((m - 2) * a * a + 2 * a * a * a * c.a_sum);
        c.arg_scale = a * std::sqrt(c.m_tilde);
      }
      break;
    }
    case Family::Sn: {
      if (odd) {
        const auto dn_sums = shifted_sums(spec, m, c.quarter, false, dn_of);
        const auto cn_sums = shifted_sums(spec, m, c.quarter, false, cn_of);
        const xreal a1 = reciprocal_of(dn_sums.first, spec, m_in);
        const xreal a3 = reciprocal_of(cn_sums.first, spec, m_in);
        c.alpha = a3;
        c.has_a_sum = false;
        c.m_tilde = m * (a1 * a1) / (a3 * a3);
        c.arg_scale = a1;
      } else {
        const auto dn_sums = shifted_sums(spec, m, c.quarter, false, dn_of);
        const xreal a2 = reciprocal_of(dn_sums.first, spec, m_in);
        xreal a5 = 1;
        for (int i = 1; i < spec.p(); ++i) {
          a5 *= jacobi(detail::term_shift(spec, c.quarter, i), m).sn;
        }
        c.alpha = a2;
        c.a_sum = a5;
        const xreal scaled = a2 * a5;
        c.m_tilde = std::pow(m, p) * scaled * scaled * scaled * scaled;
        c.arg_scale = a2;
      }
      break;
    }
  }
  return c;
}

xreal limit_value(Family family, xreal x) {
  // f(x, 1): sn -> tanh, cn and dn -> sech.
  return family == Family::Sn ? std::tanh(x) : 1 / std::cosh(x);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Dn:
      return "dn";
    case Family::Cn:
      return "cn";
    case Family::Sn:
      return "sn";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "dn") return Family::Dn;
  if (name == "cn") return Family::Cn;
  if (name == "sn") return Family::Sn;
  throw DomainError(fmt::format("unknown family '{}' (expected dn, cn or sn)", name));
}

LandenSpec::LandenSpec(Family family, int p) : family_(family), p_(p) {
  if (p < 2) {
    throw DomainError(fmt::format("Landen formula needs p >= 2, got {}", p));
  }
}

namespace detail {

long double term_shift(const LandenSpec& spec, long double quarter, int i) {
  const int periods = spec.odd() ? 4 * i : 2 * i;
  return quarter * static_cast<long double>(periods) / static_cast<long double>(spec.p());
}

WideCoefficients wide_coefficients(const LandenSpec& spec, double m) {
  require_parameter(m, "coefficients");
  if (m == 0.0) return at_zero(spec);
  if (m == 1.0 || is_clamped_to_unit(m)) return at_unit(spec, m);
  return interior(spec, m);
}

}  // namespace detail

LandenCoefficients coefficients(const LandenSpec& spec, double m) {
  return LandenTransform(spec, m).coefficients();
}

LandenTransform::LandenTransform(const LandenSpec& spec, double m)
    : spec_(spec), m_(m), wide_(detail::wide_coefficients(spec, m)) {}

LandenCoefficients LandenTransform::coefficients() const {
  LandenCoefficients out{static_cast<double>(wide_.alpha), std::nullopt,
                         static_cast<double>(wide_.m_tilde), static_cast<double>(wide_.arg_scale),
                         wide_.clamped};
  if (wide_.has_a_sum) out.a_sum = static_cast<double>(wide_.a_sum);
  return out;
}

double LandenTransform::lhs(double x) const {
  const auto t = jacobi_eval(x, static_cast<double>(wide_.m_tilde));
  switch (spec_.family()) {
    case Family::Dn:
      return t.dn;
    case Family::Cn:
      return t.cn;
    case Family::Sn:
      return t.sn;
  }
  return 0.0;
}

double LandenTransform::rhs(double x_in) const {
  if (!std::isfinite(x_in)) {
    throw DomainError("transform_rhs: argument must be finite");
  }
  const xreal x = x_in;
  if (wide_.at_unit) {
    return static_cast<double>(limit_value(spec_.family(), x));
  }
  if (wide_.at_zero && !std::isfinite(wide_.arg_scale)) {
    throw DegenerateError(fmt::format("{} p={}: right-hand side undefined at m = 0",
                                      to_string(spec_.family()), spec_.p()));
  }
  const xreal m = wide_.m;
  const xreal y = wide_.arg_scale * x;
  const bool alternate = spec_.family() == Family::Cn && !spec_.odd();

  if (spec_.family() == Family::Sn && !spec_.odd()) {
    xreal product = 1;
    for (int i = 0; i < spec_.p(); ++i) {
      product *= jacobi(y + detail::term_shift(spec_, wide_.quarter, i), m).sn;
    }
    return static_cast<double>(product / (wide_.a_sum * wide_.alpha));
  }

  CompensatedSum<xreal> sum;
  for (int i = 0; i < spec_.p(); ++i) {
    const auto t = jacobi(y + detail::term_shift(spec_, wide_.quarter, i), m);
    const xreal f = spec_.family() == Family::Sn ? t.sn
                   : (spec_.family() == Family::Cn && spec_.odd()) ? t.cn
                                                                   : t.dn;
    sum.add((alternate && i % 2 != 0) ? -f : f);
  }
  return static_cast<double>(wide_.alpha * sum.value());
}

double LandenTransform::lhs_period() const {
  const double quarter = complete_k(static_cast<double>(wide_.m_tilde));
  return (spec_.family() == Family::Dn ? 2.0 : 4.0) * quarter;
}

double transform_rhs(const LandenSpec& spec, double m, double x) {
  return LandenTransform(spec, m).rhs(x);
}

IdentityResidual verify_identity(const LandenSpec& spec, double m, int grid_points) {
  if (grid_points < 16) {
    throw DomainError(fmt::format("verify_identity: grid_points = {} < 16", grid_points));
  }
  const LandenTransform transform(spec, m);
  return detail::sample_residual([&](double x) { return transform.lhs(x) - transform.rhs(x); },
                                 transform.lhs_period(), grid_points);
}

ClosedFormP3 closed_form_p3(double m_in) {
  if (!(m_in > 0.0 && m_in < 1.0)) {
    throw DomainError("closed_form_p3: requires 0 < m < 1");
  }
  const xreal m = m_in;
  const xreal quarter = complete_k(m);
  const xreal q = jacobi(2 * quarter / 3, m).dn;
  const xreal cn43 = jacobi(4 * quarter / 3, m).cn;
  const xreal mc = 1 - m;
  const xreal one_minus_q = 1 - q;
  const xreal denom = (1 + q) * (1 + 2 * q);
  ClosedFormP3 out{};
  out.m_tilde = static_cast<double>(m * one_minus_q * one_minus_q / (denom * denom));
  out.q = static_cast<double>(q);
  out.quartic_residual =
      static_cast<double>(std::abs(q * q * q * q + 2 * q * q * q - 2 * mc * q - mc));
  out.cn_residual = static_cast<double>(std::abs(cn43 + q / (1 + q)));
  return out;
}

ClosedFormP4 closed_form_p4(double m_in) {
  if (!(m_in > 0.0 && m_in < 1.0)) {
    throw DomainError("closed_form_p4: requires 0 < m < 1");
  }
  const xreal m = m_in;
  const xreal quarter = complete_k(m);
  const xreal t = std::sqrt(std::sqrt(1 - m));
  // 1 - t = m / ((1 + t)(1 + t^2))
  const xreal ratio = m / ((1 + t) * (1 + t) * (1 + t * t));
  ClosedFormP4 out{};
  out.m_tilde = static_cast<double>(ratio * ratio * ratio * ratio);
  out.t = static_cast<double>(t);
  const xreal half = jacobi(quarter / 2, m).dn;
  const xreal three_half = jacobi(3 * quarter / 2, m).dn;
  out.half_residual = static_cast<double>(std::fmax(std::abs(half - t), std::abs(three_half - t)));
  out.quarter_residual = static_cast<double>(std::abs(jacobi(quarter, m).dn - t * t));
  return out;
}

double m_tilde_closed_p3(double m) {
  const auto c = closed_form_p3(m);
  if (!(c.quartic_residual < kClosedFormIdentityTol) || !(c.cn_residual < kClosedFormIdentityTol)) {
    throw IdentityViolation(fmt::format(
        "p=3 closed form at m={}: quartic residual {:.3e}, cn(4K/3) residual {:.3e}", m,
        c.quartic_residual, c.cn_residual));
  }
  return c.m_tilde;
}

double m_tilde_closed_p4(double m) {
  const auto c = closed_form_p4(m);
  if (!(c.half_residual < kClosedFormIdentityTol) ||
      !(c.quarter_residual < kClosedFormIdentityTol)) {
    throw IdentityViolation(fmt::format(
        "p=4 closed form at m={}: dn(K/2) residual {:.3e}, dn(K) residual {:.3e}", m,
        c.half_residual, c.quarter_residual));
  }
  return c.m_tilde;
}

double a5_product(int p, double m) {
  if (p < 2 || p % 2 != 0) {
    throw DomainError(fmt::format("a5_product: p must be even and >= 2, got {}", p));
  }
  if (!(m >= 0.0 && m < 1.0)) {
    throw DomainError("a5_product: requires 0 <= m < 1");
  }
  const LandenSpec spec(Family::Sn, p);
  if (m == 0.0) {
    double product = 1.0;
    for (int i = 1; i < p; ++i) {
      product *= std::sin(std::numbers::pi * i / p);
    }
    return product;
  }
  const xreal quarter = complete_k(static_cast<xreal>(m));
  xreal product = 1;
  for (int i = 1; i < p; ++i) {
    product *= jacobi(detail::term_shift(spec, quarter, i), static_cast<xreal>(m)).sn;
  }
  return static_cast<double>(product);
}

}  // namespace landen
