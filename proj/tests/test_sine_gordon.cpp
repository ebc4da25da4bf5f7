#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "landen/elliptic.hpp"
#include "landen/errors.hpp"
#include "landen/sine_gordon.hpp"
#include "reference_values.hpp"

namespace landen::sg {
namespace {

constexpr Family kFamilies[] = {Family::Dn, Family::Cn, Family::Sn};
constexpr double kMs[] = {0.1, 0.25, 0.5, 0.75, 0.9, 0.99};

FirstIntegralValue measure(const SolutionFamily& fam, int n = 200) {
  const auto xs = period_samples(fam, n, 0.0123);
  return first_integral(fam, xs);
}

bool cn_kind(SolutionKind k) { return k == SolutionKind::CnOdd || k == SolutionKind::CnEvenAlt; }

TEST(SolutionFamily, ParityMustMatchKind) {
  EXPECT_THROW(SolutionFamily(SolutionKind::DnOdd, 4, 0.5), DomainError);
  EXPECT_THROW(SolutionFamily(SolutionKind::SnEvenProd, 3, 0.5), DomainError);
  EXPECT_THROW(SolutionFamily(SolutionKind::CnOdd, 3, 1.5), DomainError);
  EXPECT_EQ(SolutionFamily::of(Family::Cn, 4, 0.5).kind(), SolutionKind::CnEvenAlt);
  EXPECT_EQ(SolutionFamily::of(Family::Sn, 5, 0.5).kind(), SolutionKind::SnOdd);
  EXPECT_EQ(SolutionFamily::of(Family::Sn, 5, 0.5).convention(), SignConvention::Traveling);
  EXPECT_EQ(SolutionFamily::of(Family::Dn, 2, 0.5).convention(), SignConvention::Static);
}

// Equal C means equal solutions: each superposition is the basic solution at m~.
TEST(Superposition, DnKindsAreDnAtTransformedParameter) {
  for (int p = 2; p <= 7; ++p) {
    const auto fam = SolutionFamily::of(Family::Dn, p, 0.7);
    const double mt = coefficients(fam.spec(), 0.7).m_tilde;
    for (double x : {0.0, 0.4, 1.3, 2.9}) {
      EXPECT_NEAR(psi_value(fam, x), jacobi_eval(x, mt).dn, 1e-12) << p;
    }
  }
}

TEST(Superposition, SnKindsAreScaledSnAtTransformedParameter) {
  for (int p = 2; p <= 7; ++p) {
    const auto fam = SolutionFamily::of(Family::Sn, p, 0.8);
    const double mt = coefficients(fam.spec(), 0.8).m_tilde;
    for (double x : {0.0, 0.4, 1.3, 2.9}) {
      EXPECT_NEAR(psi_value(fam, x), std::sqrt(mt) * jacobi_eval(x, mt).sn, 1e-12) << p;
    }
  }
}

TEST(Superposition, KinkLimit) {
  const Superposition dn(SolutionFamily::of(Family::Dn, 3, 1.0));
  const Superposition sn(SolutionFamily::of(Family::Sn, 4, 1.0));
  EXPECT_DOUBLE_EQ(dn.psi(0.7), 1.0 / std::cosh(0.7));
  EXPECT_DOUBLE_EQ(sn.psi(0.7), std::tanh(0.7));
}

TEST(Superposition, UndefinedAtZeroForCancellingKinds) {
  EXPECT_THROW(Superposition(SolutionFamily::of(Family::Cn, 3, 0.0)), DegenerateError);
  EXPECT_THROW(Superposition(SolutionFamily::of(Family::Sn, 5, 0.0)), DegenerateError);
  EXPECT_DOUBLE_EQ(psi_value(SolutionFamily::of(Family::Dn, 3, 0.0), 0.4), 1.0);
}

TEST(Superposition, AnalyticDerivative) {
  for (Family f : kFamilies) {
    for (int p : {3, 4}) {
      const Superposition s(SolutionFamily::of(f, p, 0.6));
      const double h = 1e-5;
      for (double x : {0.21, 0.9, 1.7}) {
        const double fd = (s.psi(x + h) - s.psi(x - h)) / (2 * h);
        EXPECT_NEAR(s.sample(x).dpsi, fd, 1e-7 * std::max(1.0, std::abs(fd)));
      }
    }
  }
}

TEST(FirstIntegral, ConstantAlongTheSolution) {
  for (Family f : kFamilies) {
    for (int p = 2; p <= 7; ++p) {
      for (double m : kMs) {
        const auto fam = SolutionFamily::of(f, p, m);
        const auto fi = measure(fam);
        EXPECT_LE(fi.spread / c_scale(fi.c), 1e-8)
            << to_string(fam.kind()) << " p = " << p << " m = " << m;
        EXPECT_GT(fi.samples_used, 150);
      }
    }
  }
}

TEST(FirstIntegral, RangesByKind) {
  for (Family f : kFamilies) {
    for (int p = 2; p <= 7; ++p) {
      for (double m : kMs) {
        const auto fam = SolutionFamily::of(f, p, m);
        const double c = measure(fam).c;
        if (cn_kind(fam.kind())) {
          EXPECT_GE(c, 2.0) << to_string(fam.kind()) << " p = " << p << " m = " << m;
        } else {
          EXPECT_GE(c, -2.0);
          EXPECT_LE(c, 2.0);
        }
      }
    }
  }
}

TEST(FirstIntegral, MatchesPrintedClosedForms) {
  for (Family f : kFamilies) {
    for (int p = 2; p <= 7; ++p) {
      for (double m : kMs) {
        const auto fam = SolutionFamily::of(f, p, m);
        const auto closed = closed_form_c(fam);
        EXPECT_EQ(closed.has_value(), has_closed_form_c(fam.kind()));
        if (!closed) continue;
        const double c = measure(fam).c;
        EXPECT_LE(std::abs(*closed - c) / c_scale(c), 1e-8)
            << to_string(fam.kind()) << " p = " << p << " m = " << m;
      }
    }
  }
}

TEST(FirstIntegral, ClassifiedParameterEqualsLandenParameter) {
  for (Family f : kFamilies) {
    for (int p = 2; p <= 7; ++p) {
      for (double m : kMs) {
        const auto fam = SolutionFamily::of(f, p, m);
        const auto cls = classify(measure(fam));
        ASSERT_TRUE(cls.m_tilde.has_value());
        EXPECT_NEAR(*cls.m_tilde, coefficients(fam.spec(), m).m_tilde, 1e-8)
            << to_string(fam.kind()) << " p = " << p << " m = " << m;
        EXPECT_EQ(cls.branch, cn_kind(fam.kind()) ? Branch::CnBranch : Branch::DnBranch);
      }
    }
  }
}

TEST(FirstIntegral, SnEvenAgainstNomeReference) {
  // C = -2 + 4 m~ for the travelling sn branch.
  double mt = 0.0;
  for (const auto& r : reference::kMTilde) {
    if (r.m == 0.5 && r.p == 4) mt = r.m_tilde;
  }
  const auto fam = SolutionFamily::of(Family::Sn, 4, 0.5);
  EXPECT_NEAR(measure(fam).c, -2 + 4 * mt, 1e-12);
  EXPECT_NEAR(*closed_form_c(fam), -2 + 4 * mt, 1e-12);
}

TEST(FirstIntegral, DnOddLimits) {
  EXPECT_NEAR(*closed_form_c(SolutionFamily::of(Family::Dn, 3, 0.0)), -2.0, 1e-15);
  EXPECT_NEAR(*closed_form_c(SolutionFamily::of(Family::Dn, 3, 1.0)), 2.0, 1e-15);
  EXPECT_NEAR(measure(SolutionFamily::of(Family::Dn, 3, 1e-4)).c, -2.0, 1e-8);
  EXPECT_THROW((void)measure(SolutionFamily::of(Family::Dn, 3, 0.0)), DegenerateError);
}

TEST(FirstIntegral, StatedRangesAtSampleParameters) {
  EXPECT_GT(measure(SolutionFamily::of(Family::Cn, 3, 0.5)).c, 2.0);
  const double c = measure(SolutionFamily::of(Family::Sn, 3, 0.5)).c;
  EXPECT_GT(c, -2.0);
  EXPECT_LT(c, 2.0);
}

TEST(FirstIntegral, FiniteDifferenceAgrees) {
  for (Family f : kFamilies) {
    const auto fam = SolutionFamily::of(f, 3, 0.8);
    const auto xs = period_samples(fam, 100, 0.0123);
    const auto a = first_integral(fam, xs, DerivativeMode::Analytic);
    const auto d = first_integral(fam, xs, DerivativeMode::FiniteDifference);
    EXPECT_NEAR(a.c, d.c, 1e-7 * c_scale(a.c));
  }
}

TEST(FirstIntegral, SkipsSamplesTouchingUnity) {
  // dn kinds reach psi = 1 at x = 0.
  const auto fam = SolutionFamily::of(Family::Dn, 3, 0.5);
  const std::vector<double> xs{0.0, 0.3, 0.6};
  const auto fi = first_integral(fam, xs);
  EXPECT_EQ(fi.samples_skipped, 1);
  EXPECT_EQ(fi.samples_used, 2);
}

TEST(Classify, Branches) {
  FirstIntegralValue v;
  v.c = 2.0;
  EXPECT_EQ(classify(v).branch, Branch::SechKink);
  v.c = 2.0 + 5e-10;
  EXPECT_EQ(classify(v).branch, Branch::SechKink);
  v.c = -2 + 4 * 0.04311;
  auto cls = classify(v);
  EXPECT_EQ(cls.branch, Branch::DnBranch);
  EXPECT_NEAR(*cls.m_tilde, 0.04311, 1e-15);
  v.c = 10.0;
  cls = classify(v);
  EXPECT_EQ(cls.branch, Branch::CnBranch);
  EXPECT_NEAR(*cls.m_tilde, 4.0 / 12.0, 1e-15);
  v.c = -3.0;
  cls = classify(v);
  EXPECT_EQ(cls.branch, Branch::NoRealSolution);
  EXPECT_FALSE(cls.m_tilde.has_value());
}

TEST(Ode, DnOddSample) {
  const auto r = ode_residual(SolutionFamily::of(Family::Dn, 3, 0.5), 256);
  EXPECT_LT(r.max_abs, 1e-6);
  EXPECT_TRUE(r.branch_ok);
}

TEST(Ode, CnOddSample) {
  const auto r = ode_residual(SolutionFamily::of(Family::Cn, 5, 0.75), 256);
  EXPECT_LT(r.max_abs, 1e-6);
  EXPECT_TRUE(r.branch_ok);
}

TEST(Ode, AllKindsAtModerateParameters) {
  for (Family f : kFamilies) {
    for (int p = 2; p <= 5; ++p) {
      for (double m : {0.5, 0.9, 0.99}) {
        const auto fam = SolutionFamily::of(f, p, m);
        const auto r = ode_residual(fam, 256);
        EXPECT_LT(r.max_abs, 1e-6) << to_string(fam.kind()) << " p = " << p << " m = " << m;
        EXPECT_TRUE(r.branch_ok);
      }
    }
  }
}

TEST(Ode, ConvergesWithResolution) {
  const auto fam = SolutionFamily::of(Family::Dn, 3, 0.9);
  const double coarse = ode_residual(fam, 64).max_abs;
  const double fine = ode_residual(fam, 128).max_abs;
  EXPECT_LT(fine, coarse / 8);
}

TEST(Ode, CircularLimitIsFlat) {
  const auto r = ode_residual(SolutionFamily::of(Family::Dn, 3, 0.0), 256);
  EXPECT_LT(r.max_abs, 1e-15);
}

TEST(Ode, RequiresGrid) {
  EXPECT_THROW((void)ode_residual(SolutionFamily::of(Family::Dn, 3, 0.5), 32), DomainError);
}

}  // namespace
}  // namespace landen::sg
