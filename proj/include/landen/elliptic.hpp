#pragma once

#include <concepts>

namespace landen {

/// Parameters within this distance of 1 are evaluated on the hyperbolic
/// (m = 1) branch.
inline constexpr double kUnitClampBand = 1e-12;

/// True when m lies in the band that is clamped to m = 1.
[[nodiscard]] constexpr bool is_clamped_to_unit(double m) {
  return m < 1.0 && m > 1.0 - kUnitClampBand;
}

/// sn, cn and dn evaluated together at one (x, m).
template <std::floating_point T>
struct BasicTriple {
  T sn;
  T cn;
  T dn;
};

using EllipticTriple = BasicTriple<double>;

/// Complete elliptic integral of the first kind K(m) = pi / (2 AGM(1, k')).
/// Throws DomainError unless 0 <= m < 1.
template <std::floating_point T>
[[nodiscard]] T complete_k(T m);

/// Jacobi elliptic functions by the descending Landen (AGM) recursion.
///
/// The argument is reduced modulo 4K(m) first, so accuracy is uniform over
/// shifted arguments. m = 0 and m = 1 are evaluated in closed form (circular
/// and hyperbolic limits); parameters within kUnitClampBand of 1 use the
/// hyperbolic branch. Throws DomainError for non-finite x or m outside [0,1].
template <std::floating_point T>
[[nodiscard]] BasicTriple<T> jacobi(T x, T m);

extern template double complete_k<double>(double);
extern template long double complete_k<long double>(long double);
extern template BasicTriple<double> jacobi<double>(double, double);
extern template BasicTriple<long double> jacobi<long double>(long double, long double);

[[nodiscard]] inline double compute_k(double m) { return complete_k(m); }
[[nodiscard]] inline EllipticTriple jacobi_eval(double x, double m) { return jacobi(x, m); }

/// The parameter m together with k, k' and the quarter period K(m).
class ModulusParameter {
 public:
  /// Throws DomainError unless 0 <= m < 1.
  explicit ModulusParameter(double m);

  [[nodiscard]] double m() const { return m_; }
  [[nodiscard]] double k() const { return k_; }
  [[nodiscard]] double k_prime() const { return k_prime_; }
  [[nodiscard]] double big_k() const { return big_k_; }

 private:
  double m_;
  double k_;
  double k_prime_;
  double big_k_;
};

}  // namespace landen
