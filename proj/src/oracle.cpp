#include "landen/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "landen/errors.hpp"

namespace landen {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr unsigned kMaxDepth = 10;
constexpr double kQuadratureTol = 1e-14;
constexpr int kMaxNewtonSteps = 80;

void require_parameter(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError("oracle: parameter m must lie in [0, 1]");
  }
}

// Amplitude phi in [0, pi/2] with F(phi | m) = u, for 0 <= u <= K.
double invert_incomplete_f(double u, double m, double quarter) {
  if (u <= 0.0) return 0.0;
  if (u >= quarter) return kHalfPi;
  double lo = 0.0;
  double hi = kHalfPi;
  double phi = kHalfPi * u / quarter;
  for (int i = 0; i < kMaxNewtonSteps; ++i) {
    const double residual = incomplete_f_quadrature(phi, m) - u;
    if (residual > 0.0) {
      hi = phi;
    } else {
      lo = phi;
    }
    const double s = std::sin(phi);
    double next = phi - residual * std::sqrt(1.0 - m * s * s);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - phi) <= 1e-16 * kHalfPi) {
      return next;
    }
    phi = next;
  }
  return phi;
}

}  // namespace

double incomplete_f_quadrature(double phi, double m) {
  require_parameter(m);
  auto integrand = [m](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - m * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, phi, kMaxDepth, kQuadratureTol);
}

double complete_k_quadrature(double m) {
  require_parameter(m);
  if (m == 1.0) {
    throw DomainError("complete_k_quadrature: K(m) diverges at m = 1");
  }
  return incomplete_f_quadrature(kHalfPi, m);
}

EllipticTriple jacobi_oracle(double x, double m) {
  if (!std::isfinite(x)) {
    throw DomainError("jacobi_oracle: argument must be finite");
  }
  require_parameter(m);
  if (m == 1.0) {
    const double sech = 1.0 / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }

  const double quarter = complete_k_quadrature(m);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  const double y = std::fmod(std::abs(x), 4.0 * quarter);

  // Fold onto [0, K]: sn is odd about 2K, cn changes sign across K and 3K,
  // dn has period 2K.
  double u = y;
  double sn_sign = 1.0;
  double cn_sign = 1.0;
  if (y < quarter) {
    u = y;
  } else if (y < 2.0 * quarter) {
    u = 2.0 * quarter - y;
    cn_sign = -1.0;
  } else if (y < 3.0 * quarter) {
    u = y - 2.0 * quarter;
    sn_sign = -1.0;
    cn_sign = -1.0;
  } else {
    u = 4.0 * quarter - y;
    sn_sign = -1.0;
  }

  const double phi = invert_incomplete_f(u, m, quarter);
  const double s = std::sin(phi);
  return {sign * sn_sign * s, cn_sign * std::cos(phi), std::sqrt(1.0 - m * s * s)};
}

}  // namespace landen
