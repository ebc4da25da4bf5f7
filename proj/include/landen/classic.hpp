#pragma once

#include <optional>

#include "landen/residual.hpp"

namespace landen {

/// Both sides of a classical (p = 2) Landen formula at one argument.
struct ClassicLandenResult {
  double lhs;      ///< elliptic function at the transformed parameter
  double rhs;      ///< classical combination at parameter m
  double m_tilde;  ///< (1 - k')^2 / (1 + k')^2
  /// dn only: the two-term form [dn(x/(1+k'), m) + dn(x/(1+k') + K, m)] / (1+k')
  /// evaluated at the same lhs argument x = (1+k') u.
  std::optional<double> two_term;
};

enum class ClassicKind { Sn, Cn, Dn };

/// Transformed parameter of the classical formulas. Cancellation-free for small m.
[[nodiscard]] double classic_m_tilde(double m);

// All three throw DomainError for m outside [0, 1) or non-finite u.
[[nodiscard]] ClassicLandenResult classic_sn(double u, double m);
[[nodiscard]] ClassicLandenResult classic_cn(double u, double m);
[[nodiscard]] ClassicLandenResult classic_dn(double u, double m);

/// |lhs - rhs| over grid_points samples of one lhs period, [0, 4K(m~)] for sn
/// and cn, [0, 2K(m~)] for dn. The grid runs over the lhs argument x = (1+k') u.
[[nodiscard]] IdentityResidual classic_residual(ClassicKind kind, double m, int grid_points);

/// Largest |two_term - rhs| of classic_dn over the same grid as classic_residual.
[[nodiscard]] IdentityResidual classic_two_term_residual(double m, int grid_points);

}  // namespace landen
