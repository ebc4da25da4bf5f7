#include "landen/sine_gordon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "landen/elliptic.hpp"
#include "landen/errors.hpp"
#include "landen/summation.hpp"

namespace landen::sg {
namespace {

using wide = long double;
using detail::CompensatedSum;

// Below this distance from |psi| = 1 the solution is numerically the constant
// psi = +-1 and C cannot be measured from the functional.
constexpr wide kFlatFloor = 1e3L * std::numeric_limits<wide>::epsilon();

// Rounding bound per evaluated term, including the rounded argument.
constexpr wide kEps = 16 * std::numeric_limits<wide>::epsilon();

// A sample whose C value could be off by more than this share of max(1, |C|)
// through the rounding of psi is not used.
constexpr wide kNoiseShare = 1e-10L;

bool odd_kind(SolutionKind kind) {
  return kind == SolutionKind::DnOdd || kind == SolutionKind::CnOdd || kind == SolutionKind::SnOdd;
}

Family family_of(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::DnOdd:
    case SolutionKind::DnEven:
      return Family::Dn;
    case SolutionKind::CnOdd:
    case SolutionKind::CnEvenAlt:
      return Family::Cn;
    case SolutionKind::SnOdd:
    case SolutionKind::SnEvenProd:
      return Family::Sn;
  }
  return Family::Dn;
}

wide first_integral_at(SignConvention convention, wide psi, wide dpsi) {
  const wide ratio = 4 * dpsi * dpsi / ((1 - psi) * (1 + psi));
  return convention == SignConvention::Static ? 2 - 4 * psi * psi + ratio
                                              : -2 + 4 * psi * psi + ratio;
}

}  // namespace

std::string_view to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::DnOdd:
      return "dn-odd";
    case SolutionKind::DnEven:
      return "dn-even";
    case SolutionKind::CnOdd:
      return "cn-odd";
    case SolutionKind::CnEvenAlt:
      return "cn-even-alt";
    case SolutionKind::SnOdd:
      return "sn-odd";
    case SolutionKind::SnEvenProd:
      return "sn-even-prod";
  }
  return "?";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::SechKink:
      return "sech-kink";
    case Branch::DnBranch:
      return "dn-branch";
    case Branch::CnBranch:
      return "cn-branch";
    case Branch::NoRealSolution:
      return "no-real-solution";
  }
  return "?";
}

SolutionFamily::SolutionFamily(SolutionKind kind, int p, double m) : kind_(kind), p_(p), m_(m) {
  if (p < 2) {
    throw DomainError(fmt::format("solution family needs p >= 2, got {}", p));
  }
  if (odd_kind(kind) != (p % 2 != 0)) {
    throw DomainError(fmt::format("{} requires {} p, got p = {}", to_string(kind),
                                  odd_kind(kind) ? "odd" : "even", p));
  }
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError(fmt::format("solution family: m = {} outside [0, 1]", m));
  }
}

SolutionFamily SolutionFamily::of(Family family, int p, double m) {
  const bool odd = p % 2 != 0;
  switch (family) {
    case Family::Dn:
      return {odd ? SolutionKind::DnOdd : SolutionKind::DnEven, p, m};
    case Family::Cn:
      return {odd ? SolutionKind::CnOdd : SolutionKind::CnEvenAlt, p, m};
    case Family::Sn:
      return {odd ? SolutionKind::SnOdd : SolutionKind::SnEvenProd, p, m};
  }
  return {SolutionKind::DnOdd, p, m};
}

LandenSpec SolutionFamily::spec() const { return {family_of(kind_), p_}; }

SignConvention SolutionFamily::convention() const {
  return family_of(kind_) == Family::Sn ? SignConvention::Traveling : SignConvention::Static;
}

Superposition::Superposition(const SolutionFamily& family)
    : family_(family), coeffs_(detail::wide_coefficients(family.spec(), family.m())) {
  if (coeffs_.at_zero && !std::isfinite(coeffs_.arg_scale)) {
    throw DegenerateError(fmt::format("{} p={}: superposition undefined at m = 0",
                                      to_string(family.kind()), family.p()));
  }
}

Superposition::WideSample Superposition::sample_wide(wide x) const {
  const auto& c = coeffs_;
  const LandenSpec spec = family_.spec();
  const int p = family_.p();

  if (c.at_unit) {
    // Only the unshifted term survives: sech for static kinds, tanh for travelling.
    if (family_.convention() == SignConvention::Traveling) {
      const wide sech = 1 / std::cosh(x);
      return {std::tanh(x), sech * sech, kEps};
    }
    const wide sech = 1 / std::cosh(x);
    return {sech, -sech * std::tanh(x), kEps};
  }

  const wide m = c.m;
  switch (family_.kind()) {
    case SolutionKind::DnOdd:
    case SolutionKind::DnEven:
    case SolutionKind::CnEvenAlt: {
      const bool alternate = family_.kind() == SolutionKind::CnEvenAlt;
      const wide a = c.alpha;
      CompensatedSum<wide> value;
      CompensatedSum<wide> slope;
      for (int i = 0; i < p; ++i) {
        const auto t = jacobi(a * x + detail::term_shift(spec, c.quarter, i), m);
        const wide sign = (alternate && i % 2 != 0) ? -1 : 1;
        value.add(sign * t.dn);
        slope.add(-sign * m * t.sn * t.cn);
      }
      return {a * value.value(), a * a * slope.value(), kEps * std::abs(a) * value.magnitude()};
    }
    case SolutionKind::CnOdd: {
      const wide a = c.alpha;
      const wide scale = a / std::sqrt(m);
      CompensatedSum<wide> value;
      CompensatedSum<wide> slope;
      for (int i = 0; i < p; ++i) {
        const auto t = jacobi(scale * x + detail::term_shift(spec, c.quarter, i), m);
        value.add(t.cn);
        slope.add(-t.sn * t.dn);
      }
      return {a * value.value(), a * scale * slope.value(),
              kEps * std::abs(a) * value.magnitude()};
    }
    case SolutionKind::SnOdd: {
      const wide a1 = c.arg_scale;
      const wide amplitude = std::sqrt(m) * a1;
      CompensatedSum<wide> value;
      CompensatedSum<wide> slope;
      for (int i = 0; i < p; ++i) {
        const auto t = jacobi(a1 * x + detail::term_shift(spec, c.quarter, i), m);
        value.add(t.sn);
        slope.add(t.cn * t.dn);
      }
      return {amplitude * value.value(), amplitude * a1 * slope.value(),
              kEps * std::abs(amplitude) * value.magnitude()};
    }
    case SolutionKind::SnEvenProd: {
      const wide a2 = c.alpha;
      const wide amplitude = std::pow(m, static_cast<wide>(p) / 2) * a2 * c.a_sum;
      std::vector<BasicTriple<wide>> terms;
      terms.reserve(static_cast<std::size_t>(p));
      for (int i = 0; i < p; ++i) {
        terms.push_back(jacobi(a2 * x + detail::term_shift(spec, c.quarter, i), m));
      }
      wide product = 1;
      for (const auto& t : terms) product *= t.sn;
      CompensatedSum<wide> slope;
      for (std::size_t j = 0; j < terms.size(); ++j) {
        wide partial = terms[j].cn * terms[j].dn;
        for (std::size_t i = 0; i < terms.size(); ++i) {
          if (i != j) partial *= terms[i].sn;
        }
        slope.add(partial);
      }
      return {amplitude * product, amplitude * a2 * slope.value(),
              kEps * p * std::abs(amplitude * product)};
    }
  }
  return {0, 0};
}

double Superposition::psi(double x) const { return static_cast<double>(sample_wide(x).psi); }

PsiSample Superposition::sample(double x) const {
  const auto s = sample_wide(x);
  return {static_cast<double>(s.psi), static_cast<double>(s.dpsi)};
}

double Superposition::period() const {
  const double m_tilde = static_cast<double>(coeffs_.m_tilde);
  const double quarter = complete_k(m_tilde);
  switch (family_.kind()) {
    case SolutionKind::DnOdd:
    case SolutionKind::DnEven:
      return 2.0 * quarter;
    case SolutionKind::CnOdd:
    case SolutionKind::CnEvenAlt:
      return 4.0 * quarter * std::sqrt(m_tilde);
    case SolutionKind::SnOdd:
    case SolutionKind::SnEvenProd:
      return 4.0 * quarter;
  }
  return 0.0;
}

double psi_value(const SolutionFamily& family, double x) { return Superposition(family).psi(x); }

std::vector<double> period_samples(const SolutionFamily& family, int n, double offset) {
  if (n < 1) {
    throw DomainError("period_samples: n must be positive");
  }
  const double period = Superposition(family).period();
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs.push_back(period * (offset + static_cast<double>(i) / n));
  }
  return xs;
}

double c_scale(double c) { return std::max(1.0, std::abs(c)); }

FirstIntegralValue first_integral(const SolutionFamily& family, std::span<const double> x_samples,
                                  DerivativeMode mode) {
  const Superposition solution(family);
  std::vector<Superposition::WideSample> samples;
  samples.reserve(x_samples.size());

  // Central-difference step for the cross-check path, Richardson-extrapolated once.
  const wide h = mode == DerivativeMode::FiniteDifference
                     ? static_cast<wide>(solution.period()) / 512
                     : wide(0);
  auto central = [&](wide x, wide step) {
    return (solution.sample_wide(x + step).psi - solution.sample_wide(x - step).psi) / (2 * step);
  };

  wide widest = 0;
  for (double x : x_samples) {
    auto s = solution.sample_wide(x);
    if (mode == DerivativeMode::FiniteDifference) {
      s.dpsi = (4 * central(x, h / 2) - central(x, h)) / 3;
    }
    widest = std::max(widest, 1 - std::abs(s.psi));
    samples.push_back(s);
  }
  if (widest <= kFlatFloor) {
    throw DegenerateError(fmt::format("{} p={} m={}: psi is indistinguishable from +-1",
                                      to_string(family.kind()), family.p(), family.m()));
  }

  FirstIntegralValue out;
  out.sign_convention = family.convention();
  CompensatedSum<wide> total;
  std::vector<wide> values;
  const wide band = static_cast<wide>(kTouchBand) * widest;
  for (const auto& s : samples) {
    if (1 - std::abs(s.psi) < band) {
      ++out.samples_skipped;
      continue;
    }
    const wide c = first_integral_at(out.sign_convention, s.psi, s.dpsi);
    // dC / dpsi is dominated by the 4 psi_x^2 / (1 - psi^2) term near |psi| = 1.
    const wide gap = (1 - s.psi) * (1 + s.psi);
    const wide error = 8 * s.dpsi * s.dpsi * std::abs(s.psi) * s.noise / (gap * gap);
    if (error > kNoiseShare * std::max(wide(1), std::abs(c))) {
      ++out.samples_skipped;
      continue;
    }
    values.push_back(c);
    total.add(c);
  }
  out.samples_used = static_cast<int>(values.size());
  if (values.empty()) {
    throw DegenerateError("first_integral: every sample lies in the |psi| = 1 band");
  }
  const wide mean = total.value() / static_cast<wide>(values.size());
  CompensatedSum<wide> squares;
  for (wide v : values) squares.add((v - mean) * (v - mean));
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  out.c = static_cast<double>(mean);
  out.spread = static_cast<double>(*hi - *lo);
  out.stddev = static_cast<double>(std::sqrt(squares.value() / static_cast<wide>(values.size())));
  return out;
}

bool has_closed_form_c(SolutionKind kind) {
  return kind != SolutionKind::DnEven && kind != SolutionKind::CnEvenAlt;
}

std::optional<double> closed_form_c(const SolutionFamily& family) {
  if (!has_closed_form_c(family.kind())) {
    return std::nullopt;
  }
  const auto c = detail::wide_coefficients(family.spec(), family.m());
  const wide m = c.m;
  switch (family.kind()) {
    case SolutionKind::DnOdd: {
      const wide a = c.alpha;
      return static_cast<double>(-2 + 4 * (m - 2) * a * a + 8 * a * a * a * c.a_sum);
    }
    case SolutionKind::CnOdd: {
      if (c.at_zero) {
        throw DegenerateError("cn-odd closed-form C undefined at m = 0");
      }
      const wide a = c.alpha;
      return static_cast<double>(-2 + 4 * (1 - 2 * m) * a * a / m + 8 * a * a * a * c.a_sum);
    }
    case SolutionKind::SnOdd: {
      if (c.at_zero) return -2.0;
      const wide ratio = c.arg_scale / c.alpha;
      return static_cast<double>(-2 + 4 * m * ratio * ratio);
    }
    case SolutionKind::SnEvenProd: {
      const wide scaled = c.alpha * c.a_sum;
      return static_cast<double>(-2 + 4 * std::pow(m, static_cast<wide>(family.p())) * scaled *
                                          scaled * scaled * scaled);
    }
    case SolutionKind::DnEven:
    case SolutionKind::CnEvenAlt:
      break;
  }
  return std::nullopt;
}

Classification classify(const FirstIntegralValue& value) {
  const double c = value.c;
  if (std::abs(c - 2.0) <= kBoundaryBand) {
    return {Branch::SechKink, 1.0};
  }
  if (c < -2.0 - kBoundaryBand) {
    return {Branch::NoRealSolution, std::nullopt};
  }
  if (c < 2.0) {
    return {Branch::DnBranch, std::max(0.0, (c + 2.0) / 4.0)};
  }
  return {Branch::CnBranch, 4.0 / (c + 2.0)};
}

OdeResidual ode_residual(const SolutionFamily& family, int grid_points) {
  if (grid_points < 64) {
    throw DomainError(fmt::format("ode_residual: grid_points = {} < 64", grid_points));
  }
  const Superposition solution(family);
  const bool traveling = family.convention() == SignConvention::Traveling;
  const wide period = solution.period();
  const wide h = period / grid_points;
  // Start away from the symmetry points where psi touches +-1 or vanishes.
  const wide x0 = wide(0.1234567) * period;
  constexpr int kGhost = 2;
  const int total = grid_points + 2 * kGhost;

  std::vector<Superposition::WideSample> samples;
  samples.reserve(static_cast<std::size_t>(total));
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(total));
  for (int j = 0; j < total; ++j) {
    const wide x = x0 + static_cast<wide>(j - kGhost) * h;
    samples.push_back(solution.sample_wide(x));
    xs.push_back(static_cast<double>(x));
  }

  OdeResidual out;
  out.step = static_cast<double>(h);

  // |cos(phi/2)| two ways: sqrt(1 - psi^2), or 2|psi_x| / |phi_x| with
  // phi_x^2 = C -+ 2 cos phi. The first degrades where psi -> +-1, the second
  // at turning points of phi; each sample takes whichever has the larger
  // radicand.
  double c = 0.0;
  bool have_c = false;
  try {
    c = first_integral(family, xs).c;
    have_c = true;
  } catch (const DegenerateError&) {
    have_c = false;
  }

  std::vector<wide> chi(static_cast<std::size_t>(total));
  for (int j = 0; j < total; ++j) {
    const wide psi = samples[static_cast<std::size_t>(j)].psi;
    const wide dpsi = samples[static_cast<std::size_t>(j)].dpsi;
    const wide gap = (1 - psi) * (1 + psi);
    wide magnitude = std::sqrt(std::max(wide(0), gap));
    if (have_c) {
      const wide speed_sq = traveling ? c + 2 - 4 * psi * psi : c - 2 + 4 * psi * psi;
      if (speed_sq > 4 * gap) {
        magnitude = 2 * std::abs(dpsi) / std::sqrt(speed_sq);
      }
    }
    chi[static_cast<std::size_t>(j)] = magnitude;
  }

  // Orient cos(phi/2) by continuity so phi is smooth through |psi| = 1.
  for (int j = 1; j < total; ++j) {
    auto& current = chi[static_cast<std::size_t>(j)];
    const wide previous = chi[static_cast<std::size_t>(j - 1)];
    const wide predicted = j >= 2 ? 2 * previous - chi[static_cast<std::size_t>(j - 2)] : previous;
    if (std::abs(-current - predicted) < std::abs(current - predicted)) {
      current = -current;
    }
  }

  // Differences phi_k - phi_j from the half-angle pairs directly, so no
  // unwrapped absolute angle (and its rounding) enters the stencil.
  auto delta = [&](int j, int k) {
    const auto& a = samples[static_cast<std::size_t>(j)];
    const auto& b = samples[static_cast<std::size_t>(k)];
    const wide ca = chi[static_cast<std::size_t>(j)];
    const wide cb = chi[static_cast<std::size_t>(k)];
    return 2 * std::atan2(b.psi * ca - cb * a.psi, ca * cb + a.psi * b.psi);
  };

  wide worst = 0;
  for (int j = kGhost; j < grid_points + kGhost; ++j) {
    const wide second = (-delta(j, j - 2) + 16 * delta(j, j - 1) + 16 * delta(j, j + 1) -
                         delta(j, j + 2)) /
                        (12 * h * h);
    const wide psi = samples[static_cast<std::size_t>(j)].psi;
    const wide x = chi[static_cast<std::size_t>(j)];
    const wide sin_phi = 2 * psi * x / (psi * psi + x * x);
    const wide residual = traveling ? second + sin_phi : second - sin_phi;
    worst = std::max(worst, std::abs(residual));
  }
  out.max_abs = static_cast<double>(worst);

  // A mis-oriented branch shows up as a jump of order pi between neighbours.
  for (int j = 0; j + 1 < total; ++j) {
    if (std::abs(delta(j, j + 1)) > 1.0L) {
      out.branch_ok = false;
      out.note = "phi jumps between neighbouring grid points; branch tracking failed";
      break;
    }
  }
  return out;
}

}  // namespace landen::sg
