#include <gtest/gtest.h>

#include <cmath>

#include "schwinger/presets.hpp"
#include "schwinger/sweep.hpp"

using namespace schwinger;

namespace {

SweepSpec spec(Statistics stat, FieldKind kind, SweepAxis axis, double a, double b, std::size_t n,
               SweepScale scale = SweepScale::linear) {
  SweepSpec s;
  s.stat = stat;
  s.field_kind = kind;
  s.axis = axis;
  s.start = a;
  s.stop = b;
  s.steps = n;
  s.scale = scale;
  return s;
}

}  // namespace

TEST(Sweep, AxisValues) {
  auto s = spec(Statistics::boson, FieldKind::constant, SweepAxis::E0, 1.0, 3.0, 5);
  EXPECT_EQ(s.axis_values(), (std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0}));
  s = spec(Statistics::boson, FieldKind::constant, SweepAxis::E0, 0.01, 100.0, 5, SweepScale::log);
  const auto v = s.axis_values();
  EXPECT_EQ(v.front(), 0.01);
  EXPECT_EQ(v.back(), 100.0);
  EXPECT_NEAR(v[2], 1.0, 1e-14);
}

TEST(Sweep, BosonConstantEntropyIncreasing) {
  auto s = spec(Statistics::boson, FieldKind::constant, SweepAxis::E0, 0.1, 20.0, 400);
  s.fixed.m = 0;
  const auto rows = run_sweep(s);
  ASSERT_EQ(rows.size(), 400u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].entropy_bits, rows[i - 1].entropy_bits) << i;
}

TEST(Sweep, FermionPeakAtMaximizingField) {
  auto s = spec(Statistics::fermion, FieldKind::constant, SweepAxis::E0, 0.1, 20.0, 400);
  s.fixed.m = 0;
  const auto rows = run_sweep(s);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].entropy_bits > rows[best].entropy_bits) best = i;
  const double step = (s.stop - s.start) / (s.steps - 1);
  EXPECT_NEAR(rows[best].axis_value, kPi / kLn2, step);
}

TEST(Sweep, ShortSauterPulseHasLocalMaximum) {
  auto s = spec(Statistics::boson, FieldKind::sauter, SweepAxis::E0, 0.1, 1000.0, 400, SweepScale::log);
  s.fixed = {1, 1, 1, 1, 1, 0.02};
  const auto rows = run_sweep(s);
  bool found = false;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i)
    found |= rows[i].entropy_bits > rows[i - 1].entropy_bits && rows[i].entropy_bits > rows[i + 1].entropy_bits;
  EXPECT_TRUE(found);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  auto s = spec(Statistics::fermion, FieldKind::sauter, SweepAxis::k_z, -5, 5, 101);
  const auto a = run_sweep(s, 1);
  const auto b = run_sweep(s, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].axis_value, b[i].axis_value);
    EXPECT_EQ(a[i].entropy_bits, b[i].entropy_bits);
  }
}

TEST(Sweep, PointErrorsAreRecorded) {
  // massless fermion in a Sauter pulse fails at every point
  auto s = spec(Statistics::fermion, FieldKind::sauter, SweepAxis::k_z, 0.1, 0.9, 4);
  s.fixed.m = 0;
  s.fixed.k_perp = 0;
  for (const auto& r : run_sweep(s)) {
    EXPECT_FALSE(r.error.empty());
    EXPECT_TRUE(std::isnan(r.entropy_bits));
  }
  // axis crossing zero field
  s = spec(Statistics::boson, FieldKind::constant, SweepAxis::E0, 0.0, 1.0, 3);
  const auto rows = run_sweep(s);
  EXPECT_EQ(rows[0].error, "zero_field");
  EXPECT_TRUE(rows[1].error.empty());
}

TEST(Sweep, Validation) {
  EXPECT_THROW(spec(Statistics::boson, FieldKind::constant, SweepAxis::E0, 2, 1, 5).validate(), Error);
  EXPECT_THROW(spec(Statistics::boson, FieldKind::constant, SweepAxis::E0, 1, 2, 1).validate(), Error);
  EXPECT_THROW(spec(Statistics::boson, FieldKind::constant, SweepAxis::E0, 0, 2, 5, SweepScale::log).validate(), Error);
  EXPECT_THROW(spec(Statistics::boson, FieldKind::constant, SweepAxis::tau, 1, 2, 5).validate(), Error);
  EXPECT_EQ(parse_axis("kperp"), SweepAxis::k_perp);
  EXPECT_EQ(parse_axis("k_z"), SweepAxis::k_z);
  EXPECT_THROW(parse_axis("omega"), Error);
}

TEST(Presets, CurveCounts) {
  auto f1 = figure_preset("fig1");
  ASSERT_EQ(f1.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(f1[i].fixed.m, static_cast<double>(i));
    EXPECT_EQ(f1[i].stat, Statistics::boson);
    EXPECT_EQ(f1[i].field_kind, FieldKind::constant);
    EXPECT_EQ(f1[i].axis, SweepAxis::E0);
    EXPECT_EQ(f1[i].fixed.q, 1.0);
    EXPECT_EQ(f1[i].fixed.k_perp, 1.0);
  }
  const auto f5 = figure_preset("fig5");
  ASSERT_EQ(f5.size(), 4u);
  const double taus[] = {0.3, 0.2, 0.02, 0.01};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(f5[i].fixed.tau, taus[i]);

  const auto f10 = figure_preset("fig10");
  ASSERT_EQ(f10.size(), 4u);
  const double ek[][2] = {{2, 0}, {2, 1}, {1, 0}, {1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(f10[i].fixed.E0, ek[i][0]);
    EXPECT_EQ(f10[i].fixed.k_perp, ek[i][1]);
    EXPECT_EQ(f10[i].stat, Statistics::fermion);
    EXPECT_EQ(f10[i].field_kind, FieldKind::sauter);
    EXPECT_EQ(f10[i].axis, SweepAxis::tau);
  }
}

TEST(Presets, FermionConstantInBothConventions) {
  const auto f3 = figure_preset("fig3");
  ASSERT_EQ(f3.size(), 6u);
  EXPECT_EQ(f3[0].convention, FermionConvention::consistent);
  EXPECT_EQ(f3[1].convention, FermionConvention::half_exponent);
  EXPECT_NE(f3[0].label, f3[1].label);
}

TEST(Presets, AllRunWithoutErrors) {
  for (auto name : kFigurePresets)
    for (const auto& s : figure_preset(name)) {
      s.validate();
      for (const auto& r : run_sweep(s)) EXPECT_TRUE(r.error.empty()) << s.label << " at " << r.axis_value << ": " << r.error;
    }
}

TEST(Presets, UnknownName) {
  try {
    figure_preset("fig11");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}
