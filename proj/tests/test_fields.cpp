#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "schwinger/fields.hpp"

using namespace schwinger;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::cross_check;
}

}  // namespace

TEST(GaugePotential, Values) {
  EXPECT_EQ(gauge_potential(ConstantField(1.0), 0.0), 0.0);
  EXPECT_NEAR(gauge_potential(SauterField(1.0, 1.0), 1e3), -1.0, 1e-15);
  EXPECT_NEAR(gauge_potential(SauterField(2.0, 3.0), 3.0), -6.0 * std::tanh(1.0), 1e-14);
}

TEST(GaugePotential, DerivativeIsMinusField) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double h = 1e-4;
  for (int i = 0; i < 20; ++i) {
    const double E0 = 0.1 + 10.0 * u(rng);
    const double tau = 0.2 + 5.0 * u(rng);
    const FieldProfile f = i % 2 ? FieldProfile(ConstantField(E0)) : FieldProfile(SauterField(E0, tau));
    const double t = (u(rng) - 0.5) * 4.0 * tau;
    const double d = (gauge_potential(f, t + h) - gauge_potential(f, t - h)) / (2.0 * h);
    EXPECT_NEAR(-d, electric_field(f, t), 1e-6 * std::fabs(electric_field(f, t))) << i;
  }
}

TEST(Omega, Values) {
  EXPECT_DOUBLE_EQ(omega(ModeParams(1, 1, 0, 0), SauterField(1, 1), 0.0), 1.0);
  EXPECT_NEAR(omega(ModeParams(1, 1, 1, 1), ConstantField(1.0), 1.0), std::sqrt(2.0), 1e-15);
  const ModeParams p(0.3, 1.2, 0.7, -2.0);
  for (double t : {-5.0, -1.0, 0.0, 0.5, 3.0}) EXPECT_GE(omega(p, SauterField(2, 1), t), p.transverse_mass());
}

TEST(Omega, ApproachesAsymptoticFrequencies) {
  const ModeParams p(0.5, 1.5, 1.0, 0.8);
  const SauterField f(2.0, 0.7);
  const auto w = asymptotic_frequencies(p, f);
  EXPECT_NEAR(omega(p, f, -50 * f.tau()), w.in, 1e-10);
  EXPECT_NEAR(omega(p, f, 50 * f.tau()), w.out, 1e-10);
}

TEST(AsymptoticFrequencies, Values) {
  auto w = asymptotic_frequencies(ModeParams(1, 1, 1, 1), SauterField(1, 1));
  EXPECT_NEAR(w.in, std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(w.out, std::sqrt(2.0), 1e-15);
  w = asymptotic_frequencies(ModeParams(0, 1, 0, 0), SauterField(1, 2));
  EXPECT_DOUBLE_EQ(w.in, 2.0);
  EXPECT_DOUBLE_EQ(w.out, 2.0);
  w = asymptotic_frequencies(ModeParams(1.3, 0.4, 2, 0), SauterField(3, 0.2));
  EXPECT_DOUBLE_EQ(w.in, w.out);
}

TEST(AsymptoticFrequencies, ReflectionSwaps) {
  const ModeParams p(0.5, 1.5, 1.0, 0.8);
  const SauterField f(2.0, 0.7);
  const auto a = asymptotic_frequencies(p, f);
  const auto b = asymptotic_frequencies(p.with_k_z(-0.8), f);
  EXPECT_DOUBLE_EQ(a.in, b.out);
  EXPECT_DOUBLE_EQ(a.out, b.in);
}

TEST(AsymptoticFrequencies, ConstantFieldRejected) {
  EXPECT_EQ(code_of([] { asymptotic_frequencies(ModeParams(1, 1, 1, 0), FieldProfile(ConstantField(1))); }),
            Errc::unsupported_profile);
}

TEST(Dimensionless, Values) {
  const auto d = dimensionless(ModeParams(1, 1, 1, 0), ConstantField(2.0), Statistics::boson);
  EXPECT_DOUBLE_EQ(d.mu, 1.0);
  EXPECT_FALSE(d.lambda.has_value());
  EXPECT_FALSE(d.tau_omega_in.has_value());

  // qE0 tau^2 = 1/2
  const auto b = dimensionless(ModeParams(1, 1, 1, 0), SauterField(2.0, 0.5), Statistics::boson);
  EXPECT_EQ(*b.lambda, std::complex<double>(0.0, 0.0));

  const auto f = dimensionless(ModeParams(1, 1, 1, 0), SauterField(2.0, 3.0), Statistics::fermion);
  EXPECT_EQ(*f.lambda, std::complex<double>(18.0, 0.0));
}

TEST(Dimensionless, BosonLambdaBranches) {
  EXPECT_DOUBLE_EQ(boson_sauter_lambda(1.0).real(), std::sqrt(0.75));
  EXPECT_EQ(boson_sauter_lambda(1.0).imag(), 0.0);
  EXPECT_EQ(boson_sauter_lambda(0.25).real(), 0.0);
  EXPECT_DOUBLE_EQ(boson_sauter_lambda(0.25).imag(), std::sqrt(0.1875));
}

TEST(Validation, RejectsBadInput) {
  EXPECT_EQ(code_of([] { ConstantField(0.0); }), Errc::zero_field);
  EXPECT_EQ(code_of([] { SauterField(0.0, 1.0); }), Errc::zero_field);
  EXPECT_EQ(code_of([] { SauterField(1.0, 0.0); }), Errc::zero_width);
  EXPECT_EQ(code_of([] { ConstantField(-1.0); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { SauterField(1.0, -1.0); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { ConstantField(NAN); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { ModeParams(-1, 1, 1, 0); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { ModeParams(1, 0, 1, 0); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { ModeParams(1, 1, -1, 0); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { ModeParams(1, 1, 1, INFINITY); }), Errc::invalid_argument);
}
