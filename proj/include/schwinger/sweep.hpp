#pragma once

// One-dimensional parameter sweeps over the closed-form coefficients.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "schwinger/bogoliubov.hpp"
#include "schwinger/entanglement.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/fields.hpp"

namespace schwinger {

enum class SweepAxis { E0, m, k_perp, k_z, tau };
enum class SweepScale { linear, log };
enum class FieldKind { constant, sauter };

constexpr const char* to_string(SweepAxis a) noexcept {
  switch (a) {
    case SweepAxis::E0: return "E0";
    case SweepAxis::m: return "m";
    case SweepAxis::k_perp: return "k_perp";
    case SweepAxis::k_z: return "k_z";
    case SweepAxis::tau: return "tau";
  }
  return "?";
}
constexpr const char* to_string(SweepScale s) noexcept { return s == SweepScale::log ? "log" : "linear"; }
constexpr const char* to_string(FieldKind f) noexcept { return f == FieldKind::sauter ? "sauter" : "constant"; }
constexpr const char* to_string(FermionConvention c) noexcept {
  return c == FermionConvention::half_exponent ? "half" : "consistent";
}

inline SweepAxis parse_axis(std::string_view s) {
  if (s == "E0") return SweepAxis::E0;
  if (s == "m") return SweepAxis::m;
  if (s == "k_perp" || s == "kperp") return SweepAxis::k_perp;
  if (s == "k_z" || s == "kz") return SweepAxis::k_z;
  if (s == "tau") return SweepAxis::tau;
  throw Error(Errc::invalid_argument, "unknown sweep axis '" + std::string(s) + "'");
}

/// Values of every quantity not being swept.
struct FixedParams {
  double m = 1.0;
  double q = 1.0;
  double k_perp = 1.0;
  double k_z = 0.0;
  double E0 = 1.0;
  double tau = 1.0;

  double& operator[](SweepAxis a) {
    switch (a) {
      case SweepAxis::E0: return E0;
      case SweepAxis::m: return m;
      case SweepAxis::k_perp: return k_perp;
      case SweepAxis::k_z: return k_z;
      case SweepAxis::tau: return tau;
    }
    return E0;
  }
};

struct SweepSpec {
  std::string label;
  SweepAxis axis = SweepAxis::E0;
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 2;
  SweepScale scale = SweepScale::linear;
  FixedParams fixed;
  Statistics stat = Statistics::boson;
  FieldKind field_kind = FieldKind::constant;
  FermionConvention convention = FermionConvention::consistent;
  /// Free text carried into the output header.
  std::string note;

  void validate() const {
    using detail::require;
    require(std::isfinite(start) && std::isfinite(stop), Errc::invalid_argument, "sweep bounds must be finite");
    require(steps >= 2, Errc::invalid_argument, "sweep needs at least 2 steps");
    require(start < stop, Errc::invalid_argument, "sweep needs start < stop");
    require(scale == SweepScale::linear || start > 0.0, Errc::invalid_argument, "log sweep needs start > 0");
    require(axis != SweepAxis::tau || field_kind == FieldKind::sauter, Errc::invalid_argument,
            "a tau sweep needs a Sauter field");
  }

  std::vector<double> axis_values() const {
    std::vector<double> v(steps);
    const double n = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
      const double u = static_cast<double>(i) / n;
      v[i] = scale == SweepScale::log ? std::exp(std::log(start) + u * (std::log(stop) - std::log(start)))
                                      : start + u * (stop - start);
    }
    v.front() = start;
    v.back() = stop;
    return v;
  }
};

struct SweepRow {
  double axis_value;
  double beta2;
  double alpha2;
  double entropy_bits;
  double c0_sq;
  double mean_pairs;
  /// Empty on success, otherwise the error code of the failed point.
  std::string error;
};

inline SweepRow evaluate_point(const SweepSpec& spec, double axis_value) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  SweepRow row{axis_value, kNaN, kNaN, kNaN, kNaN, kNaN, {}};
  try {
    FixedParams v = spec.fixed;
    v[spec.axis] = axis_value;
    const ModeParams p(v.m, v.q, v.k_perp, v.k_z);
    const FieldProfile field =
        spec.field_kind == FieldKind::sauter ? FieldProfile(SauterField(v.E0, v.tau)) : FieldProfile(ConstantField(v.E0));
    const auto mod = moduli(p, field, spec.stat, spec.convention);
    if (mod.alpha2.to_linear().saturated) {
      row.error = "overflow";
      return row;
    }
    const auto rep = entropy(mod);
    row.beta2 = rep.beta2;
    row.alpha2 = rep.alpha2;
    row.entropy_bits = rep.S_bits;
    row.c0_sq = rep.c0_sq;
    row.mean_pairs = rep.mean_pairs;
  } catch (const Error& e) {
    row.error = std::string(to_string(e.code()));
  }
  return row;
}

/// Rows come back in axis order whatever the thread count; 0 threads means
/// one per hardware core.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 1) {
  spec.validate();
  const auto xs = spec.axis_values();
  std::vector<SweepRow> rows(xs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, xs.size()));

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) rows[i] = evaluate_point(spec, xs[i]);
  };
  if (threads <= 1) {
    work();
    return rows;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  pool.clear();
  return rows;
}

}  // namespace schwinger
