#pragma once

#include <cmath>
#include <cstddef>

namespace landen {

/// Absolute residual |lhs - rhs| of an identity sampled on [0, x_span].
struct IdentityResidual {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  int grid_points = 0;
  double x_span = 0.0;
};

namespace detail {

/// Samples f on grid_points equally spaced points of [0, span] (both ends
/// included) and reduces |f| to max and mean in index order.
template <typename Residual>
IdentityResidual sample_residual(Residual&& f, double span, int grid_points) {
  IdentityResidual out;
  out.grid_points = grid_points;
  out.x_span = span;
  double total = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = span * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const double r = std::abs(f(x));
    out.max_abs = std::fmax(out.max_abs, r);
    total += r;
  }
  out.mean_abs = total / static_cast<double>(grid_points);
  return out;
}

}  // namespace detail
}  // namespace landen
