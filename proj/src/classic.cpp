#include "landen/classic.hpp"

#include <cmath>

#include "landen/elliptic.hpp"
#include "landen/errors.hpp"

namespace landen {
namespace {

struct Prepared {
  double k_prime;
  double m_tilde;
};

Prepared prepare(double u, double m, const char* op) {
  if (!(m >= 0.0 && m < 1.0)) {
    throw DomainError(std::string(op) + ": requires 0 <= m < 1");
  }
  if (!std::isfinite(u)) {
    throw DomainError(std::string(op) + ": argument must be finite");
  }
  return {std::sqrt(1.0 - m), classic_m_tilde(m)};
}

}  // namespace

double classic_m_tilde(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError("classic_m_tilde: requires 0 <= m <= 1");
  }
  const double k_prime = std::sqrt(1.0 - m);
  // 1 - k' = m / (1 + k')
  const double l = m / ((1.0 + k_prime) * (1.0 + k_prime));
  return l * l;
}

ClassicLandenResult classic_sn(double u, double m) {
  const auto [k_prime, m_tilde] = prepare(u, m, "classic_sn");
  const auto f = jacobi_eval(u, m);
  return {jacobi_eval((1.0 + k_prime) * u, m_tilde).sn,
          (1.0 + k_prime) * f.sn * f.cn / f.dn, m_tilde, std::nullopt};
}

ClassicLandenResult classic_cn(double u, double m) {
  const auto [k_prime, m_tilde] = prepare(u, m, "classic_cn");
  const auto f = jacobi_eval(u, m);
  return {jacobi_eval((1.0 + k_prime) * u, m_tilde).cn,
          (1.0 - (1.0 + k_prime) * f.sn * f.sn) / f.dn, m_tilde, std::nullopt};
}

ClassicLandenResult classic_dn(double u, double m) {
  const auto [k_prime, m_tilde] = prepare(u, m, "classic_dn");
  const auto f = jacobi_eval(u, m);
  const double x = (1.0 + k_prime) * u;
  const double quarter = complete_k(m);
  const double two_term =
      (f.dn + jacobi_eval(u + quarter, m).dn) / (1.0 + k_prime);
  return {jacobi_eval(x, m_tilde).dn, (1.0 - (1.0 - k_prime) * f.sn * f.sn) / f.dn, m_tilde,
          two_term};
}

IdentityResidual classic_residual(ClassicKind kind, double m, int grid_points) {
  const double k_prime = std::sqrt(1.0 - m);
  const double quarter = complete_k(classic_m_tilde(m));
  const double span = (kind == ClassicKind::Dn ? 2.0 : 4.0) * quarter;
  return detail::sample_residual(
      [&](double x) {
        const double u = x / (1.0 + k_prime);
        const auto r = kind == ClassicKind::Sn   ? classic_sn(u, m)
                       : kind == ClassicKind::Cn ? classic_cn(u, m)
                                                 : classic_dn(u, m);
        return r.lhs - r.rhs;
      },
      span, grid_points);
}

IdentityResidual classic_two_term_residual(double m, int grid_points) {
  const double k_prime = std::sqrt(1.0 - m);
  const double span = 2.0 * complete_k(classic_m_tilde(m));
  return detail::sample_residual(
      [&](double x) {
        const auto r = classic_dn(x / (1.0 + k_prime), m);
        return *r.two_term - r.rhs;
      },
      span, grid_points);
}

}  // namespace landen
