#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "schwinger/bogoliubov.hpp"

using namespace schwinger;

namespace {

constexpr auto B = Statistics::boson;
constexpr auto F = Statistics::fermion;

void expect_rel(double got, double want, double rtol) { EXPECT_NEAR(got, want, rtol * std::fabs(want)); }

}  // namespace

TEST(ConstantField, BosonValue) {
  const auto m = constant_field_moduli(ModeParams(1, 1, 1, 0), 10.0, B);
  expect_rel(m.beta2.linear(), std::exp(-kPi / 5.0), 1e-15);
  EXPECT_NEAR(m.beta2.linear(), 0.533488, 1e-6);
  expect_rel(m.alpha2.linear(), 1.0 + m.beta2.linear(), 1e-15);
}

TEST(ConstantField, WeakFieldLimit) {
  for (auto stat : {B, F}) {
    const auto m = constant_field_moduli(ModeParams(1, 1, 1, 0), 1e-6, stat);
    EXPECT_LT(m.beta2.log, -1e6);
    EXPECT_EQ(m.beta2.linear(), 0.0);
    EXPECT_NEAR(m.alpha2.linear(), 1.0, 1e-300);
  }
}

TEST(ConstantField, FermionHalfAtMaximizingField) {
  const ModeParams p(1, 1, 1, 0);
  const double E = kPi * p.transverse_mass_sq() / (p.q() * kLn2);
  const auto m = constant_field_moduli(p, E, F);
  EXPECT_NEAR(m.beta2.linear(), 0.5, 1e-15);
  EXPECT_NEAR(m.alpha2.linear(), 0.5, 1e-15);
}

TEST(ConstantField, HalfExponentConvention) {
  const ModeParams p(1, 1, 1, 0);
  const auto c = constant_field_moduli(p, 1.0, F, FermionConvention::consistent);
  const auto h = constant_field_moduli(p, 1.0, F, FermionConvention::half_exponent);
  EXPECT_NEAR(c.beta2.log, -2.0 * kPi, 1e-14);
  EXPECT_NEAR(h.beta2.log, -kPi, 1e-14);
  EXPECT_NEAR(h.alpha2.linear() + h.beta2.linear(), 1.0, 1e-15);
  // bosons ignore the convention
  EXPECT_EQ(constant_field_moduli(p, 1.0, B, FermionConvention::half_exponent).beta2.log,
            constant_field_moduli(p, 1.0, B).beta2.log);
}

TEST(ConstantField, Monotonicity) {
  for (auto stat : {B, F}) {
    double prev = -INFINITY;
    for (double E = 0.1; E < 50; E *= 1.3) {
      const double b = constant_field_moduli(ModeParams(1, 1, 1, 0), E, stat).beta2.log;
      EXPECT_GT(b, prev);
      prev = b;
    }
    prev = INFINITY;
    for (double m = 0.0; m < 5; m += 0.25) {
      const double b = constant_field_moduli(ModeParams(m, 1, 1, 0), 3.0, stat).beta2.log;
      EXPECT_LT(b, prev);
      prev = b;
    }
    prev = INFINITY;
    for (double k = 0.0; k < 5; k += 0.25) {
      const double b = constant_field_moduli(ModeParams(1, 1, k, 0), 3.0, stat).beta2.log;
      EXPECT_LT(b, prev);
      prev = b;
    }
  }
}

TEST(Sauter, HighPrecisionReferences) {
  // 60-digit evaluations of the cosh/sinh quotients.
  auto f = sauter_moduli(ModeParams(1, 1, 0.5, 0.9), SauterField(2, 0.7), F);
  expect_rel(f.beta2.linear(), 0.11127834842519118, 1e-13);
  expect_rel(f.alpha2.linear(), 0.88872165157480882, 1e-13);

  auto b = sauter_moduli(ModeParams(1, 1, 1, 1), SauterField(1, 1), B);
  expect_rel(b.beta2.linear(), 0.0013736417862789591, 1e-13);
  expect_rel(b.alpha2.linear(), 1.001373641786279, 1e-13);

  // imaginary lambda (qE0 tau^2 < 1/2)
  b = sauter_moduli(ModeParams(1, 1, 1, 1), SauterField(1, 0.3), B);
  expect_rel(b.beta2.linear(), 0.0043244493720499518, 1e-13);

  // every cosh and sinh argument near 2e4
  b = sauter_moduli(ModeParams(0.3, 2, 1.5, -4), SauterField(50, 8), B);
  expect_rel(b.beta2.linear(), 0.92900815938626362, 1e-13);
  expect_rel(b.alpha2.linear(), 1.9290081593862636, 1e-13);
  f = sauter_moduli(ModeParams(0.3, 2, 1.5, -4), SauterField(50, 8), F);
  expect_rel(f.beta2.linear(), 0.92912217283553514, 1e-13);
  expect_rel(f.alpha2.linear(), 0.070877827164464861, 1e-13);
}

TEST(Sauter, Normalization) {
  std::mt19937_64 rng(7);
  const auto lu = [&](double lo, double hi) {
    return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
  };
  for (int i = 0; i < 1000; ++i) {
    const ModeParams p(lu(1e-3, 10), lu(0.1, 10), lu(1e-3, 10), std::uniform_real_distribution<double>(-10, 10)(rng));
    const SauterField f(lu(0.01, 100), lu(0.01, 10));
    const auto b = sauter_moduli(p, f, B);
    EXPECT_LT(std::fabs(std::expm1(log_add_exp(0.0, b.beta2.log) - b.alpha2.log)), 1e-10) << i;
    const auto q = sauter_moduli(p, f, F);
    EXPECT_LT(std::fabs(std::expm1(log_add_exp(q.alpha2.log, q.beta2.log))), 1e-10) << i;
  }
}

TEST(Sauter, KzReflection) {
  for (auto stat : {B, F})
    for (double kz : {0.3, 1.0, 4.0}) {
      const auto a = sauter_moduli(ModeParams(1, 1.3, 0.4, kz), SauterField(2, 0.6), stat);
      const auto b = sauter_moduli(ModeParams(1, 1.3, 0.4, -kz), SauterField(2, 0.6), stat);
      EXPECT_DOUBLE_EQ(a.beta2.log, b.beta2.log);
      EXPECT_DOUBLE_EQ(a.alpha2.log, b.alpha2.log);
    }
}

TEST(Sauter, LongPulseApproachesConstantField) {
  const ModeParams p(1, 1, 1, 0);
  const double ref = std::exp(-2.0 * kPi);
  expect_rel(sauter_moduli(p, SauterField(1, 50), B).beta2.linear(), ref, 0.01);
  expect_rel(sauter_moduli(p, SauterField(1, 50), F).beta2.linear(), ref, 0.01);
}

TEST(Sauter, ShortPulseFermionVanishes) {
  const ModeParams p(1, 1, 1, 0);
  double prev = 1.0;
  for (double tau : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double b = sauter_moduli(p, SauterField(1, tau), F).beta2.linear();
    EXPECT_LT(b, prev);
    prev = b;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(Sauter, FermionMasslessModeRejected) {
  try {
    sauter_moduli(ModeParams(0, 1, 0, 0.5), SauterField(1, 1), F);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == Errc::degenerate_normalization || e.code() == Errc::degenerate_frequency);
  }
}

TEST(Moduli, DispatchesOnProfile) {
  const ModeParams p(1, 1, 1, 0);
  EXPECT_EQ(moduli(p, ConstantField(2), B).beta2.log, constant_field_moduli(p, 2.0, B).beta2.log);
  EXPECT_EQ(moduli(p, SauterField(2, 1), F).beta2.log, sauter_moduli(p, SauterField(2, 1), F).beta2.log);
}

TEST(GammaRoute, BosonMatchesClosedForm) {
  const ModeParams p(1, 1, 1, 1);
  const SauterField f(1, 1);
  const auto r = sauter_ratio_via_gamma(p, f, B);
  const auto m = sauter_moduli(p, f, B);
  const double x = std::exp(m.beta2.log - m.alpha2.log);
  expect_rel(x, 0.0013717574828798345, 1e-12);
  expect_rel(r.first(), x, 1e-9);
  expect_rel(r.second(), x, 1e-9);
  expect_rel(r.transposed(), 1.0 / x, 1e-9);
}

TEST(GammaRoute, FermionBranchesAgree) {
  for (double kz : {-1.5, 0.0, 0.9, 3.0}) {
    const ModeParams p(1, 1, 0.5, kz);
    const SauterField f(2, 0.7);
    const auto m = sauter_moduli(p, f, F);
    const double x = std::exp(m.beta2.log - m.alpha2.log);
    for (auto br : {FermionBranch::plus, FermionBranch::minus}) {
      const auto r = sauter_ratio_via_gamma(p, f, F, br);
      expect_rel(r.first(), x, 1e-9);
      expect_rel(r.second(), x, 1e-9);
    }
  }
}
