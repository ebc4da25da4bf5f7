#include "landen/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "landen/errors.hpp"

namespace landen {
namespace {

constexpr int kMaxAgmSteps = 32;

template <typename T>
constexpr T agm_tolerance() {
  return std::min<T>(T(1e-16), std::numeric_limits<T>::epsilon());
}

template <typename T>
void require_parameter(T m, const char* op) {
  if (!(m >= T(0) && m <= T(1))) {
    throw DomainError(std::string(op) + ": parameter m must lie in [0, 1]");
  }
}

}  // namespace

template <std::floating_point T>
T complete_k(T m) {
  require_parameter(m, "complete_k");
  if (m == T(1)) {
    throw DomainError("complete_k: K(m) diverges at m = 1");
  }
  T a = 1;
  T b = std::sqrt(T(1) - m);
  for (int n = 0; n < kMaxAgmSteps && std::abs(a - b) >= agm_tolerance<T>() * a; ++n) {
    const T next_a = (a + b) / 2;
    b = std::sqrt(a * b);
    a = next_a;
  }
  return std::numbers::pi_v<T> / (2 * a);
}

template <std::floating_point T>
BasicTriple<T> jacobi(T x, T m) {
  if (!std::isfinite(x)) {
    throw DomainError("jacobi: argument must be finite");
  }
  require_parameter(m, "jacobi");
  if (m == T(0)) {
    return {std::sin(x), std::cos(x), T(1)};
  }
  if (m > T(1) - T(kUnitClampBand)) {
    const T sech = T(1) / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }

  const T quarter = complete_k(m);
  const T u = std::remainder(x, 4 * quarter);

  std::array<T, kMaxAgmSteps + 1> a{};
  std::array<T, kMaxAgmSteps + 1> c{};
  a[0] = 1;
  c[0] = std::sqrt(m);
  T b = std::sqrt(T(1) - m);
  int steps = 0;
  while (steps < kMaxAgmSteps && std::abs(a[steps] - b) >= agm_tolerance<T>() * a[steps]) {
    a[steps + 1] = (a[steps] + b) / 2;
    c[steps + 1] = (a[steps] - b) / 2;
    b = std::sqrt(a[steps] * b);
    ++steps;
  }

  T phi = std::ldexp(a[steps] * u, steps);
  for (int n = steps; n > 0; --n) {
    phi = (phi + std::asin(c[n] / a[n] * std::sin(phi))) / 2;
  }
  const T sn = std::sin(phi);
  const T cn = std::cos(phi);
  // dn^2 = cn^2 + m' sn^2 has no cancellation, unlike 1 - m sn^2.
  const T dn = std::sqrt(cn * cn + (T(1) - m) * sn * sn);
  return {sn, cn, dn};
}

template double complete_k<double>(double);
template long double complete_k<long double>(long double);
template BasicTriple<double> jacobi<double>(double, double);
template BasicTriple<long double> jacobi<long double>(long double, long double);

ModulusParameter::ModulusParameter(double m)
    : m_(m), k_(0), k_prime_(0), big_k_(complete_k(m)) {
  k_ = std::sqrt(m);
  k_prime_ = std::sqrt(1.0 - m);
}

}  // namespace landen
