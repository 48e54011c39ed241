#pragma once

// Closed-form Bogoliubov coefficient moduli |alpha|^2, |beta|^2 for scalar and
// Dirac modes in constant and Sauter-pulse fields, and the independent
// gamma-function (hypergeometric connection) route for the Sauter ratio
// |beta|^2 / |alpha|^2.

#include <cmath>
#include <complex>
#include <string>

#include "schwinger/errors.hpp"
#include "schwinger/fields.hpp"
#include "schwinger/specfun.hpp"

namespace schwinger {

/// Exponent used for the fermionic constant-field |beta|^2.
///   consistent:    |beta|^2 = exp(-pi mu), unitary partner 1 - |beta|^2,
///                  maximal entropy exactly at E0 = pi (m^2 + k_perp^2) / (q ln 2).
///   half_exponent: |beta|^2 = exp(-pi mu / 2); kept only to regenerate curves
///                  drawn with the halved exponent.
enum class FermionConvention { consistent, half_exponent };

struct BogoliubovModuli {
  LogValue beta2;
  LogValue alpha2;
  Statistics stat;

  double beta2_linear() const noexcept { return beta2.linear(); }
  double alpha2_linear() const noexcept { return alpha2.linear(); }
};

namespace detail {

// Fermion |alpha|^2 and |beta|^2 may leave [0, 1] by rounding only.
inline void clamp_unit(LogValue& v, const char* name) {
  constexpr double kWindow = 1e-12;
  if (v.log > 0.0) {
    require(v.log <= kWindow, Errc::normalization_violation,
            std::string("fermionic ") + name + " exceeds 1 beyond rounding");
    v.log = 0.0;
  }
}

}  // namespace detail

inline BogoliubovModuli constant_field_moduli(const ModeParams& p, const ConstantField& field, Statistics stat,
                                              FermionConvention conv = FermionConvention::consistent) {
  const double mu = p.transverse_mass_sq() / (p.q() * field.E0());
  if (stat == Statistics::boson) {
    const double lb = -kPi * mu;
    return {{lb}, {std::log1p(std::exp(lb))}, stat};
  }
  detail::require(mu > 0.0, Errc::degenerate_normalization,
                  "fermion with m = k_perp = 0 has |beta|^2 = 1 and |alpha|^2 = 0");
  const double lb = conv == FermionConvention::consistent ? -kPi * mu : -0.5 * kPi * mu;
  return {{lb}, {std::log(-std::expm1(lb))}, stat};
}

inline BogoliubovModuli constant_field_moduli(const ModeParams& p, double E0, Statistics stat,
                                              FermionConvention conv = FermionConvention::consistent) {
  return constant_field_moduli(p, ConstantField(E0), stat, conv);
}

namespace detail {

// Kinematic combinations of the Sauter asymptotic frequencies, each built
// from nonnegative terms only so none of them suffers cancellation.
struct SauterKinematics {
  double w_in, w_out;
  double abs_dw;        // |w_out - w_in|
  double sum_minus_2kz;  // w_in + w_out - 2|k_z|
  double sum_minus_2s;   // w_in + w_out - 2 qE0 tau
};

inline SauterKinematics sauter_kinematics(const ModeParams& p, const SauterField& f) {
  const double s = p.q() * f.E0() * f.tau();
  const double k = std::fabs(p.k_z());
  const double m2 = p.transverse_mass_sq();
  const auto w = asymptotic_frequencies(p, f);
  require(w.in > 0.0 && w.out > 0.0, Errc::degenerate_frequency,
          "an asymptotic frequency vanishes (m = k_perp = 0 with |k_z| = qE0 tau)");
  const double w_plus = std::hypot(k + s, p.transverse_mass());
  const double w_minus = std::hypot(k - s, p.transverse_mass());
  const double up = m2 / (w_plus + k + s);           // w_plus - (k + s)
  const double down = m2 / (w_minus + std::fabs(k - s));  // w_minus - |k - s|
  SauterKinematics out{};
  out.w_in = w.in;
  out.w_out = w.out;
  out.abs_dw = 4.0 * k * s / (w.in + w.out);
  out.sum_minus_2kz = up + (k >= s ? down : w_minus + (s - k));
  out.sum_minus_2s = up + down + 2.0 * std::fmax(k - s, 0.0);
  return out;
}

}  // namespace detail

/// Sauter-pulse moduli from the cosh/sinh quotients. Boson:
///   |beta|^2  = [cosh(pi tau |dw|) + cosh(2 pi lambda)] / (2 sinh(pi tau w_in) sinh(pi tau w_out))
///   |alpha|^2 = [cosh(pi tau (w_in + w_out)) + cosh(2 pi lambda)] / (same)
/// Fermion: the same with cosh(2 pi lambda) entering with opposite sign.
///
/// Each numerator is rewritten as a product of two cosh or sinh factors.
/// log cosh and log sinh are split into |x| plus a bounded excess; the linear
/// parts of numerator and denominator cancel in closed form, so no large
/// logarithms are subtracted and the two moduli keep full relative accuracy
/// even when every term is far beyond the double range.
inline BogoliubovModuli sauter_moduli(const ModeParams& p, const SauterField& f, Statistics stat) {
  const auto kin = detail::sauter_kinematics(p, f);
  const double tau = f.tau();
  const double s = p.q() * f.E0() * tau;  // qE0 tau
  const double qEt2 = s * tau;
  const double big_p = kPi * tau * kin.w_in;
  const double big_q = kPi * tau * kin.w_out;
  const double a_diff = kPi * tau * kin.abs_dw;
  const double a_sum = big_p + big_q;
  const double gap = kPi * tau * kin.sum_minus_2s;          // a_sum - 2 pi qE0 tau^2 >= 0
  const double min_gap = 2.0 * kPi * tau * std::fmin(kin.w_in, kin.w_out);  // a_sum - a_diff
  const double den_excess = log_sinh_excess(big_p) + log_sinh_excess(big_q);

  BogoliubovModuli out{{}, {}, stat};
  if (stat == Statistics::boson) {
    const auto lambda = boson_sauter_lambda(qEt2);
    if (lambda.imag() == 0.0) {
      // cosh A + cosh B = 2 cosh((A + B)/2) cosh((A - B)/2), B = 2 pi lambda.
      const double lam = lambda.real();
      const double b = 2.0 * kPi * lam;
      // a_sum - b = gap + pi (2 qE0 tau^2 - 2 lambda), the latter = pi / (2 (lambda + qE0 tau^2))
      const double sum_minus_b = gap + 0.5 * kPi / (lam + qEt2);
      const double beta_linear = b >= a_diff ? -sum_minus_b : -min_gap;
      out.beta2 = {beta_linear + log_cosh_excess(0.5 * (b + a_diff)) + log_cosh_excess(0.5 * (b - a_diff)) -
                   den_excess};
      out.alpha2 = {log_cosh_excess(0.5 * (a_sum + b)) + log_cosh_excess(0.5 * sum_minus_b) - den_excess};
    } else {
      // cosh X + cos(2 pi y) = 2 [sinh^2(X/2) + cos^2(pi y)], and
      // cos(pi y) = sin(pi (1/2 - y)) with 1/2 - y = qEt2^2 / (1/2 + y).
      const double y = lambda.imag();
      const double log_cos2 = 2.0 * std::log(std::sin(kPi * qEt2 * qEt2 / (0.5 + y)));
      const double lead_beta = -min_gap + 2.0 * log_sinh_excess(0.5 * a_diff);
      const double lead_alpha = 2.0 * log_sinh_excess(0.5 * a_sum);
      out.beta2 = {log_add_exp(lead_beta, log_cos2 - a_sum) - den_excess};
      out.alpha2 = {log_add_exp(lead_alpha, log_cos2 - a_sum) - den_excess};
    }
    return out;
  }

  // cosh B - cosh A = 2 sinh((B + A)/2) sinh((B - A)/2), B = 2 pi qE0 tau^2.
  const double b = 2.0 * kPi * qEt2;
  const double b_minus_a = 2.0 * kPi * tau * s * kin.sum_minus_2kz / (kin.w_in + kin.w_out);
  detail::require(gap > 0.0, Errc::degenerate_normalization, "fermion Sauter mode with |alpha|^2 = 0 (m = k_perp = 0)");
  out.beta2 = b_minus_a > 0.0 ? LogValue{-gap + log_sinh_excess(0.5 * (b + a_diff)) +
                                         log_sinh_excess(0.5 * b_minus_a) - den_excess}
                              : LogValue::zero();
  out.alpha2 = {log_sinh_excess(0.5 * (a_sum + b)) + log_sinh_excess(0.5 * gap) - den_excess};
  detail::clamp_unit(out.beta2, "|beta|^2");
  detail::clamp_unit(out.alpha2, "|alpha|^2");
  return out;
}

inline BogoliubovModuli moduli(const ModeParams& p, const FieldProfile& field, Statistics stat,
                               FermionConvention conv = FermionConvention::consistent) {
  if (const auto* s = std::get_if<SauterField>(&field)) return sauter_moduli(p, *s, stat);
  return constant_field_moduli(p, std::get<ConstantField>(field), stat, conv);
}

// ---------------------------------------------------------------------------
// Hypergeometric connection route

/// Sign choice a = ... +/- i lambda, b = ... -/+ i lambda in the fermionic
/// hypergeometric parameters.
enum class FermionBranch { plus, minus };

struct HypergeomParams {
  std::complex<double> a, b, c;
};

inline HypergeomParams hypergeom_params(const ModeParams& p, const SauterField& f, Statistics stat,
                                        FermionBranch branch = FermionBranch::plus) {
  const auto w = asymptotic_frequencies(p, f);
  const double tau = f.tau();
  const double half_dw = 0.5 * (tau * w.out - tau * w.in);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> c = 1.0 - i * (tau * w.in);
  if (stat == Statistics::boson) {
    const auto lambda = boson_sauter_lambda(p.q() * f.E0() * tau * tau);
    return {0.5 + i * half_dw - i * lambda, 0.5 + i * half_dw + i * lambda, c};
  }
  const double sign = branch == FermionBranch::plus ? 1.0 : -1.0;
  const double lambda = p.q() * f.E0() * tau * tau;
  return {i * half_dw + sign * i * lambda, 1.0 + i * half_dw - sign * i * lambda, c};
}

/// Connection coefficients of F(a, b, c; z) and z^{1-c} F(a-c+1, b-c+1, 2-c; z)
/// onto the two solutions regular around z = 1, as log-moduli-squared.
struct ConnectionCoefficients {
  double log_l11, log_l12, log_l21, log_l22;
};

inline ConnectionCoefficients connection_coefficients(const HypergeomParams& h) {
  const auto lg = [](std::complex<double> z) { return ln_gamma_complex(z); };
  const auto a = h.a, b = h.b, c = h.c;
  const std::complex<double> one(1.0, 0.0), two(2.0, 0.0);
  const auto l11 = lg(c) + lg(c - a - b) - lg(c - a) - lg(c - b);
  const auto l12 = lg(c) + lg(a + b - c) - lg(a) - lg(b);
  const auto l21 = lg(two - c) + lg(c - a - b) - lg(one - a) - lg(one - b);
  const auto l22 = lg(two - c) + lg(a + b - c) - lg(a - c + one) - lg(b - c + one);
  return {2.0 * l11.real(), 2.0 * l12.real(), 2.0 * l21.real(), 2.0 * l22.real()};
}

/// The Sauter ratio x = |beta|^2 / |alpha|^2 from gamma functions alone.
///
/// The in-mode F(a,b,c;z) connects to the out positive/negative frequency
/// solutions with weights lambda_11, lambda_12; its partner z^{1-c}F(...)
/// with lambda_21, lambda_22. Two routes follow:
///   first  = |lambda_12|^2 / |lambda_11|^2
///   second = |lambda_21|^2 / |lambda_22|^2
/// (note |lambda_22|^2 / |lambda_21|^2 is the reciprocal, kept in
/// `transposed` for inspection).
/// For Dirac modes the scalar solutions carry different spinor norms at
/// t -> +inf; the out-norm ratio (w_out + p_out) / (w_out - p_out), raised to
/// +1 or -1 depending on branch and route, is `log_spinor_weight`.
struct GammaRatio {
  double log_first_raw;
  double log_second_raw;
  double log_spinor_weight;
  double log_first;   // log x via lambda_12 / lambda_11
  double log_second;  // log x via lambda_21 / lambda_22
  double log_transposed;

  double first() const { return std::exp(log_first); }
  double second() const { return std::exp(log_second); }
  double transposed() const { return std::exp(log_transposed); }
};

inline GammaRatio sauter_ratio_via_gamma(const ModeParams& p, const SauterField& f, Statistics stat,
                                         FermionBranch branch = FermionBranch::plus) {
  const auto cc = connection_coefficients(hypergeom_params(p, f, stat, branch));
  GammaRatio r{};
  r.log_first_raw = cc.log_l12 - cc.log_l11;
  r.log_second_raw = cc.log_l21 - cc.log_l22;
  r.log_transposed = cc.log_l22 - cc.log_l21;
  if (stat == Statistics::fermion) {
    const double m2 = p.transverse_mass_sq();
    detail::require(m2 > 0.0, Errc::degenerate_normalization, "spinor weight undefined for m = k_perp = 0");
    const double p_out = p.k_z() - p.q() * f.E0() * f.tau();
    const double w_out = asymptotic_frequencies(p, f).out;
    // log((w + |p|) / (w - |p|)) with w - |p| = m^2 / (w + |p|)
    const double log_far = 2.0 * std::log(w_out + std::fabs(p_out)) - std::log(m2);
    const double sign_p = p_out >= 0.0 ? 1.0 : -1.0;
    const double sign_branch = branch == FermionBranch::plus ? 1.0 : -1.0;
    r.log_spinor_weight = sign_branch * sign_p * log_far;
  }
  r.log_first = r.log_first_raw + r.log_spinor_weight;
  r.log_second = r.log_second_raw - r.log_spinor_weight;
  return r;
}

}  // namespace schwinger
