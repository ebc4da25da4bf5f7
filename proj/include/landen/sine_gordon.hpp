#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "landen/general.hpp"

namespace landen::sg {

/// The six superposed solutions of the sine-Gordon reductions.
/// Dn and Cn kinds solve the static equation phi_xx = sin phi; Sn kinds solve
/// the travelling-wave form phi_ee = -sin phi.
enum class SolutionKind { DnOdd, DnEven, CnOdd, CnEvenAlt, SnOdd, SnEvenProd };

enum class SignConvention { Static, Traveling };

[[nodiscard]] std::string_view to_string(SolutionKind kind);

/// A superposed solution: kind, number of terms p (parity must match kind) and m.
class SolutionFamily {
 public:
  /// Throws DomainError on parity mismatch, p < 2, or m outside [0, 1].
  SolutionFamily(SolutionKind kind, int p, double m);

  /// The kind matching family and the parity of p.
  [[nodiscard]] static SolutionFamily of(Family family, int p, double m);

  [[nodiscard]] SolutionKind kind() const { return kind_; }
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] double m() const { return m_; }
  [[nodiscard]] LandenSpec spec() const;
  [[nodiscard]] SignConvention convention() const;

 private:
  SolutionKind kind_;
  int p_;
  double m_;
};

/// psi = sin(phi/2) and its derivative, evaluated analytically.
struct PsiSample {
  double psi;
  double dpsi;
};

/// Evaluates one superposed solution. Costs one coefficient computation at
/// construction; each evaluation is p Jacobi calls in extended precision.
class Superposition {
 public:
  explicit Superposition(const SolutionFamily& family);

  [[nodiscard]] const SolutionFamily& family() const { return family_; }
  [[nodiscard]] const detail::WideCoefficients& coefficients() const { return coeffs_; }

  struct WideSample {
    long double psi;
    long double dpsi;
    long double noise = 0;  ///< rounding bound on psi
  };

  [[nodiscard]] double psi(double x) const;
  [[nodiscard]] PsiSample sample(double x) const;
  [[nodiscard]] WideSample sample_wide(long double x) const;
  /// 2K(m~) for dn kinds, 4K(m~) sqrt(m~) for cn kinds, 4K(m~) for sn kinds.
  [[nodiscard]] double period() const;

 private:
  SolutionFamily family_;
  detail::WideCoefficients coeffs_;
};

[[nodiscard]] double psi_value(const SolutionFamily& family, double x);

/// n equally spaced points covering one period, starting at offset * period.
[[nodiscard]] std::vector<double> period_samples(const SolutionFamily& family, int n,
                                                 double offset = 0.0);

enum class DerivativeMode { Analytic, FiniteDifference };

/// Samples closer to |psi| = 1 than this fraction of the largest distance
/// max(1 - |psi|) seen on the sample set are skipped (0/0 in the functional).
inline constexpr double kTouchBand = 1e-6;

/// First-integral constant C measured along a solution.
struct FirstIntegralValue {
  double c = 0.0;  ///< mean over the used samples
  SignConvention sign_convention = SignConvention::Static;
  double spread = 0.0;  ///< max - min of the per-sample values
  double stddev = 0.0;
  int samples_used = 0;
  int samples_skipped = 0;
};

/// C = 2 - 4 psi^2 + 4 psi_x^2 / (1 - psi^2) for static kinds and
/// C = -2 + 4 psi^2 + 4 psi_e^2 / (1 - psi^2) for travelling kinds.
/// FiniteDifference uses a Richardson-extrapolated central difference.
/// Throws DegenerateError when psi is indistinguishable from +-1 everywhere.
[[nodiscard]] FirstIntegralValue first_integral(const SolutionFamily& family,
                                                std::span<const double> x_samples,
                                                DerivativeMode mode = DerivativeMode::Analytic);

/// Relative scale for comparing C values: max(1, |c|).
[[nodiscard]] double c_scale(double c);

/// Printed closed-form C for DnOdd, CnOdd, SnOdd and SnEvenProd. Returns
/// nullopt for DnEven and CnEvenAlt, where only the range of C is known.
[[nodiscard]] std::optional<double> closed_form_c(const SolutionFamily& family);
[[nodiscard]] bool has_closed_form_c(SolutionKind kind);

enum class Branch { SechKink, DnBranch, CnBranch, NoRealSolution };

[[nodiscard]] std::string_view to_string(Branch branch);

struct Classification {
  Branch branch;
  /// m~ implied by matching C with the basic solution; 1 for the kink.
  std::optional<double> m_tilde;
};

/// Band around C = +-2 assigned to the limiting branch.
inline constexpr double kBoundaryBand = 1e-9;

/// Maps C onto the basic solution with the same constant: C = 4m~ - 2 on the
/// dn (static) or sqrt(m~) sn (travelling) branch, C = 4/m~ - 2 on the cn or sn branch.
[[nodiscard]] Classification classify(const FirstIntegralValue& value);

struct OdeResidual {
  double max_abs = 0.0;
  double step = 0.0;
  bool branch_ok = true;
  std::string note;
};

/// Reconstructs phi on one period and returns max |phi'' - sin phi| (static)
/// or |phi'' + sin phi| (travelling) with a five-point central difference.
/// Requires grid_points >= 64.
[[nodiscard]] OdeResidual ode_residual(const SolutionFamily& family, int grid_points);

}  // namespace landen::sg
