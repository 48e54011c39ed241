#pragma once

// Background field profiles, gauge potential and mode frequencies.
//
// Natural units (c = hbar = 1). The field points along z and is spatially
// homogeneous, so each momentum mode evolves independently. The kinetic
// longitudinal momentum is k_z + q A_z(t), with A_z = -E0 t (constant field)
// or A_z = -E0 tau tanh(t/tau) (Sauter pulse).

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "schwinger/errors.hpp"

namespace schwinger {

enum class Statistics { boson, fermion };

constexpr const char* to_string(Statistics s) noexcept {
  return s == Statistics::boson ? "boson" : "fermion";
}

/// One charged field mode: rest mass, charge magnitude, transverse momentum
/// magnitude and longitudinal momentum.
class ModeParams {
 public:
  ModeParams(double m, double q, double k_perp, double k_z) : m_(m), q_(q), k_perp_(k_perp), k_z_(k_z) {
    using detail::require;
    require(std::isfinite(m) && std::isfinite(q) && std::isfinite(k_perp) && std::isfinite(k_z),
            Errc::invalid_argument, "mode parameters must be finite");
    require(m >= 0.0, Errc::invalid_argument, "mass must be >= 0");
    require(q > 0.0, Errc::invalid_argument, "charge must be > 0");
    require(k_perp >= 0.0, Errc::invalid_argument, "k_perp must be >= 0");
  }

  double m() const noexcept { return m_; }
  double q() const noexcept { return q_; }
  double k_perp() const noexcept { return k_perp_; }
  double k_z() const noexcept { return k_z_; }

  /// m^2 + k_perp^2; the only way m and k_perp enter any coefficient.
  double transverse_mass_sq() const noexcept { return m_ * m_ + k_perp_ * k_perp_; }
  double transverse_mass() const noexcept { return std::hypot(m_, k_perp_); }

  ModeParams with_k_z(double k_z) const { return {m_, q_, k_perp_, k_z}; }

 private:
  double m_;
  double q_;
  double k_perp_;
  double k_z_;
};

namespace detail {

inline void check_amplitude(double E0) {
  require(std::isfinite(E0), Errc::invalid_argument, "field amplitude must be finite");
  require(E0 != 0.0, Errc::zero_field, "field amplitude E0 = 0 has no evaluable coefficients");
  require(E0 > 0.0, Errc::invalid_argument, "field amplitude must be > 0");
}

}  // namespace detail

class ConstantField {
 public:
  explicit ConstantField(double E0) : E0_(E0) { detail::check_amplitude(E0); }
  double E0() const noexcept { return E0_; }

 private:
  double E0_;
};

/// E(t) = E0 sech^2(t / tau).
class SauterField {
 public:
  SauterField(double E0, double tau) : E0_(E0), tau_(tau) {
    detail::check_amplitude(E0);
    detail::require(std::isfinite(tau), Errc::invalid_argument, "pulse width must be finite");
    detail::require(tau != 0.0, Errc::zero_width, "pulse width tau = 0 is a limit, not a profile");
    detail::require(tau > 0.0, Errc::invalid_argument, "pulse width must be > 0");
  }
  double E0() const noexcept { return E0_; }
  double tau() const noexcept { return tau_; }

 private:
  double E0_;
  double tau_;
};

using FieldProfile = std::variant<ConstantField, SauterField>;

inline double amplitude(const FieldProfile& field) {
  return std::visit([](const auto& f) { return f.E0(); }, field);
}

inline bool is_sauter(const FieldProfile& field) noexcept {
  return std::holds_alternative<SauterField>(field);
}

inline double electric_field(const FieldProfile& field, double t) {
  if (const auto* s = std::get_if<SauterField>(&field)) {
    const double sech = 1.0 / std::cosh(t / s->tau());
    return s->E0() * sech * sech;
  }
  return std::get<ConstantField>(field).E0();
}

/// A_z(t), chosen so that E(t) = -dA_z/dt.
inline double gauge_potential(const FieldProfile& field, double t) {
  if (const auto* s = std::get_if<SauterField>(&field)) return -s->E0() * s->tau() * std::tanh(t / s->tau());
  return -std::get<ConstantField>(field).E0() * t;
}

/// Kinetic longitudinal momentum: k_z - qE0 t (constant) or
/// k_z - qE0 tau tanh(t/tau) (Sauter).
inline double kinetic_momentum(const ModeParams& p, const FieldProfile& field, double t) {
  return p.k_z() + p.q() * gauge_potential(field, t);
}

inline double omega(const ModeParams& p, const FieldProfile& field, double t) {
  return std::hypot(kinetic_momentum(p, field, t), p.transverse_mass());
}

struct AsymptoticFrequencies {
  double in;
  double out;
};

inline AsymptoticFrequencies asymptotic_frequencies(const ModeParams& p, const SauterField& field) {
  const double s = p.q() * field.E0() * field.tau();
  const double mt = p.transverse_mass();
  return {std::hypot(p.k_z() + s, mt), std::hypot(p.k_z() - s, mt)};
}

inline AsymptoticFrequencies asymptotic_frequencies(const ModeParams& p, const FieldProfile& field) {
  const auto* s = std::get_if<SauterField>(&field);
  detail::require(s != nullptr, Errc::unsupported_profile,
                  "a constant field has no finite asymptotic frequencies");
  return asymptotic_frequencies(p, *s);
}

struct DimensionlessParams {
  /// (m^2 + k_perp^2) / (q E0)
  double mu;
  /// Boson: sqrt((qE0 tau^2)^2 - 1/4), real or purely imaginary.
  /// Fermion: qE0 tau^2. Empty for a constant field.
  std::optional<std::complex<double>> lambda;
  std::optional<double> tau_omega_in;
  std::optional<double> tau_omega_out;
};

/// sqrt(s^2 - 1/4) for s >= 0, returned as real or purely imaginary.
inline std::complex<double> boson_sauter_lambda(double s) {
  // (s - 1/2)(s + 1/2) avoids cancellation near s = 1/2.
  const double rad = (s - 0.5) * (s + 0.5);
  if (rad >= 0.0) return {std::sqrt(rad), 0.0};
  return {0.0, std::sqrt(-rad)};
}

inline DimensionlessParams dimensionless(const ModeParams& p, const FieldProfile& field, Statistics stat) {
  DimensionlessParams out{p.transverse_mass_sq() / (p.q() * amplitude(field)), std::nullopt, std::nullopt,
                          std::nullopt};
  if (const auto* s = std::get_if<SauterField>(&field)) {
    const double qEt2 = p.q() * s->E0() * s->tau() * s->tau();
    out.lambda = stat == Statistics::boson ? boson_sauter_lambda(qEt2) : std::complex<double>(qEt2, 0.0);
    const auto w = asymptotic_frequencies(p, *s);
    out.tau_omega_in = s->tau() * w.in;
    out.tau_omega_out = s->tau() * w.out;
  }
  return out;
}

}  // namespace schwinger
