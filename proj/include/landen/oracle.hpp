#pragma once

#include "landen/elliptic.hpp"

namespace landen {

/// K(m) by adaptive Gauss-Kronrod quadrature of the defining integral.
/// Independent of the AGM path; intended for tests.
[[nodiscard]] double complete_k_quadrature(double m);

/// Incomplete integral F(phi | m) = int_0^phi dtheta / sqrt(1 - m sin^2 theta).
[[nodiscard]] double incomplete_f_quadrature(double phi, double m);

/// sn, cn, dn by inverting F(phi | m) = u with a safeguarded Newton
/// iteration, after reducing x to [0, K] with the quarter-period symmetries.
/// Slow. Used to cross-check jacobi_eval.
[[nodiscard]] EllipticTriple jacobi_oracle(double x, double m);

}  // namespace landen
