#pragma once

#include <optional>
#include <string_view>

#include "landen/residual.hpp"

namespace landen {

/// Which elliptic function sits on the single-function side of the formula.
enum class Family { Dn, Cn, Sn };

[[nodiscard]] std::string_view to_string(Family family);
/// Parses "dn", "cn" or "sn"; throws DomainError otherwise.
[[nodiscard]] Family parse_family(std::string_view name);

/// A generalized Landen formula: function family and number of terms p >= 2.
/// The parity of p selects the odd or even variant.
class LandenSpec {
 public:
  /// Throws DomainError for p < 2.
  LandenSpec(Family family, int p);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] bool odd() const { return p_ % 2 != 0; }

 private:
  Family family_;
  int p_;
};

/// Coefficients of one generalized formula at parameter m.
///
/// | family, parity | alpha | a_sum        | arg_scale         |
/// |----------------|-------|--------------|-------------------|
/// | dn odd         | a1    | sum dn^3     | a1                |
/// | dn even        | a2    | sum dn^3     | a2                |
/// | cn odd         | a3    | sum cn^3     | a3 sqrt(m~ / m)   |
/// | cn even        | a4    | alt. dn^3    | a4 sqrt(m~)       |
/// | sn odd         | a3    | (none)       | a1                |
/// | sn even        | a2    | prod sn (A5) | a2                |
///
/// At m = 0 the cancelling sums of the cn and sn-odd families vanish: alpha
/// is +inf and arg_scale is NaN there, while m_tilde is still the exact limit 0.
struct LandenCoefficients {
  double alpha;
  std::optional<double> a_sum;
  double m_tilde;
  double arg_scale;
  /// m was within kUnitClampBand of 1 and was evaluated as m = 1.
  bool clamped_to_unit = false;
};

/// Below this parameter the cn-even alternating sum is treated as degenerate.
inline constexpr double kCnEvenDegenerateBelow = 1e-8;

namespace detail {

/// The same coefficients carried in extended precision. The cn and sn-odd
/// sums cancel down to O(q^(p/2)), so alpha reaches ~1e6 for p = 7 at small m
/// and the right-hand sides need extra guard digits.
struct WideCoefficients {
  long double m = 0;
  long double quarter = 0;  ///< K(m); +inf at the m = 1 limit
  long double alpha = 0;
  long double a_sum = 0;
  bool has_a_sum = true;
  long double m_tilde = 0;
  long double arg_scale = 0;
  bool at_zero = false;  ///< m == 0 analytic limit
  bool at_unit = false;  ///< m == 1 analytic limit (or clamped band)
  bool clamped = false;
};

[[nodiscard]] WideCoefficients wide_coefficients(const LandenSpec& spec, double m);

/// Shift of the i-th term: i 4K/p for odd p, i 2K/p for even p.
[[nodiscard]] long double term_shift(const LandenSpec& spec, long double quarter, int i);

}  // namespace detail

/// alpha, A, m~ and argument scale for spec at m in [0, 1].
/// Throws DomainError outside [0, 1], DegenerateError when a cancelling sum
/// collapses (cn-even below kCnEvenDegenerateBelow, or any sum lost to rounding).
[[nodiscard]] LandenCoefficients coefficients(const LandenSpec& spec, double m);

/// Both sides of one generalized formula at a fixed m, coefficients computed once.
class LandenTransform {
 public:
  LandenTransform(const LandenSpec& spec, double m);

  [[nodiscard]] const LandenSpec& spec() const { return spec_; }
  [[nodiscard]] double m() const { return m_; }
  [[nodiscard]] LandenCoefficients coefficients() const;
  [[nodiscard]] const detail::WideCoefficients& wide() const { return wide_; }

  /// The single function f(x, m~).
  [[nodiscard]] double lhs(double x) const;
  /// The p-term sum or product at parameter m, normalised to compare with lhs.
  [[nodiscard]] double rhs(double x) const;
  /// Length of one fundamental period of lhs: 2K(m~) for dn, 4K(m~) otherwise.
  [[nodiscard]] double lhs_period() const;

 private:
  LandenSpec spec_;
  double m_;
  detail::WideCoefficients wide_;
};

/// Right-hand side of the generalized formula, comparable to f(x, m~).
[[nodiscard]] double transform_rhs(const LandenSpec& spec, double m, double x);

/// |f(x, m~) - rhs(x)| over one lhs period. Requires grid_points >= 16.
[[nodiscard]] IdentityResidual verify_identity(const LandenSpec& spec, double m,
                                               int grid_points);

/// Internals of the p = 3 closed form.
struct ClosedFormP3 {
  double m_tilde;
  double q;                 ///< dn(2K/3, m)
  double quartic_residual;  ///< |q^4 + 2q^3 - 2(1-m)q - (1-m)|
  double cn_residual;       ///< |cn(4K/3, m) + q/(1+q)|
};

struct ClosedFormP4 {
  double m_tilde;
  double t;                  ///< (1-m)^(1/4)
  double half_residual;      ///< max |dn(K/2) - t|, |dn(3K/2) - t|
  double quarter_residual;   ///< |dn(K) - t^2|
};

/// Tolerance on the internal identities checked by the closed forms.
inline constexpr double kClosedFormIdentityTol = 1e-12;

[[nodiscard]] ClosedFormP3 closed_form_p3(double m);
[[nodiscard]] ClosedFormP4 closed_form_p4(double m);

/// m (1-q)^2 / ((1+q)^2 (1+2q)^2), q = dn(2K/3, m). Requires 0 < m < 1;
/// throws IdentityViolation if the quartic or the cn(4K/3) relation fails.
[[nodiscard]] double m_tilde_closed_p3(double m);
/// (1-t)^4 / (1+t)^4, t = (1-m)^(1/4). Requires 0 < m < 1; throws
/// IdentityViolation if dn(K/2) = dn(3K/2) = t or dn(K) = t^2 fails.
[[nodiscard]] double m_tilde_closed_p4(double m);

/// prod_{i=1}^{p-1} sn(2iK/p, m) for even p; the exact sine product at m = 0.
[[nodiscard]] double a5_product(int p, double m);

}  // namespace landen
