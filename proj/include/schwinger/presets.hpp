#pragma once

// Parameter sets for the ten standard entropy curves, one SweepSpec per
// plotted line.

#include <array>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schwinger/errors.hpp"
#include "schwinger/sweep.hpp"

namespace schwinger {

inline constexpr std::array<std::string_view, 10> kFigurePresets = {"fig1", "fig2", "fig3", "fig4", "fig5",
                                                                     "fig6", "fig7", "fig8", "fig9", "fig10"};

namespace detail {

inline std::string tag(std::string_view key, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return std::string(key) + buf;
}

inline SweepSpec curve(std::string label, Statistics stat, FieldKind kind, SweepAxis axis, double start, double stop,
                       std::size_t steps, SweepScale scale, FixedParams fixed) {
  SweepSpec s;
  s.label = std::move(label);
  s.stat = stat;
  s.field_kind = kind;
  s.axis = axis;
  s.start = start;
  s.stop = stop;
  s.steps = steps;
  s.scale = scale;
  s.fixed = fixed;
  return s;
}

// Constant-field fermion curves come in both exponent conventions.
inline void push_both_conventions(std::vector<SweepSpec>& out, SweepSpec s) {
  const std::string base = s.label;
  s.label = base + "_consistent";
  s.convention = FermionConvention::consistent;
  out.push_back(s);
  s.label = base + "_half";
  s.convention = FermionConvention::half_exponent;
  out.push_back(std::move(s));
}

}  // namespace detail

inline std::vector<SweepSpec> figure_preset(std::string_view name) {
  using detail::curve;
  using detail::tag;
  constexpr auto B = Statistics::boson;
  constexpr auto F = Statistics::fermion;
  constexpr auto C = FieldKind::constant;
  constexpr auto S = FieldKind::sauter;
  constexpr auto lin = SweepScale::linear;
  constexpr auto log = SweepScale::log;
  const std::string n(name);
  std::vector<SweepSpec> out;

  if (name == "fig1") {
    for (double m : {0.0, 1.0, 2.0})
      out.push_back(curve(n + "_" + tag("m", m), B, C, SweepAxis::E0, 0.1, 20.0, 400, lin, {m, 1, 1, 0, 1, 1}));
  } else if (name == "fig2") {
    for (double E : {10.0, 5.0, 3.0})
      out.push_back(curve(n + "_" + tag("E", E), B, C, SweepAxis::m, 0.0, 5.0, 400, lin, {1, 1, 1, 0, E, 1}));
  } else if (name == "fig3") {
    for (double m : {0.0, 1.0, 2.0})
      detail::push_both_conventions(
          out, curve(n + "_" + tag("m", m), F, C, SweepAxis::E0, 0.1, 60.0, 600, lin, {m, 1, 1, 0, 1, 1}));
  } else if (name == "fig4") {
    for (double E : {7.0, 12.0, 20.0})
      detail::push_both_conventions(
          out, curve(n + "_" + tag("E", E), F, C, SweepAxis::m, 0.0, 5.0, 400, lin, {1, 1, 1, 0, E, 1}));
  } else if (name == "fig5") {
    for (double tau : {0.3, 0.2, 0.02, 0.01})
      out.push_back(curve(n + "_" + tag("tau", tau), B, S, SweepAxis::E0, 0.1, 1000.0, 400, log, {1, 1, 1, 1, 1, tau}));
  } else if (name == "fig6") {
    for (double tau : {0.5, 0.2, 0.1})
      out.push_back(curve(n + "_" + tag("tau", tau), B, S, SweepAxis::k_z, -10.0, 10.0, 401, lin, {1, 1, 1, 0, 10, tau}));
  } else if (name == "fig7") {
    for (auto [E, kp] : {std::pair{2.0, 0.0}, {2.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}})
      out.push_back(curve(n + "_" + tag("E", E) + "_" + tag("kperp", kp), B, S, SweepAxis::tau, 0.01, 10.0, 400, log,
                          {1, 1, kp, 1, E, 1}));
  } else if (name == "fig8") {
    for (double tau : {2.0, 0.02, 0.01})
      out.push_back(curve(n + "_" + tag("tau", tau), F, S, SweepAxis::E0, 0.1, 1000.0, 400, log, {1, 1, 1, 1, 1, tau}));
  } else if (name == "fig9") {
    for (auto [E, tau] : {std::pair{20.0, 1.0}, {4.0, 2.0}, {2.0, 3.0}}) {
      auto s = curve(n + "_" + tag("E", E) + "_" + tag("tau", tau), F, S, SweepAxis::k_z, -10.0, 10.0, 401, lin,
                     {1, 1, 1, 0, E, tau});
      s.note = "E0 and tau are set per curve";
      out.push_back(std::move(s));
    }
  } else if (name == "fig10") {
    for (auto [E, kp] : {std::pair{2.0, 0.0}, {2.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}})
      out.push_back(curve(n + "_" + tag("E", E) + "_" + tag("kperp", kp), F, S, SweepAxis::tau, 0.001, 5.0, 400, log,
                          {1, 1, kp, 1, E, 1}));
  } else {
    throw Error(Errc::invalid_argument, "unknown preset '" + n + "' (expected fig1..fig10)");
  }
  return out;
}

}  // namespace schwinger
