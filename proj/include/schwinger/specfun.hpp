#pragma once

// Special-function kernel: complex log-gamma and log-domain hyperbolic
// arithmetic. Coefficient formulas downstream work on logarithms so that
// products like cosh(pi tau (w_in + w_out)) never overflow.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "schwinger/errors.hpp"

namespace schwinger {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kLogPi = 1.1447298858494001741434273513530587116472948129153;

struct LinearValue {
  double value;
  bool saturated;
};

/// A nonnegative real held as its natural logarithm; -inf represents zero.
struct LogValue {
  double log = -std::numeric_limits<double>::infinity();

  static LogValue zero() noexcept { return {}; }
  static LogValue one() noexcept { return {0.0}; }
  static LogValue from_linear(double x) noexcept { return {std::log(x)}; }

  bool is_zero() const noexcept { return std::isinf(log) && log < 0; }

  /// exp(log), flagging values beyond the double range instead of
  /// returning a silent infinity.
  LinearValue to_linear() const noexcept {
    constexpr double kMaxLog = 709.782712893383973096;  // log(DBL_MAX)
    if (log > kMaxLog) return {std::numeric_limits<double>::max(), true};
    return {std::exp(log), false};
  }

  double linear() const noexcept { return std::exp(log); }

  friend LogValue operator*(LogValue a, LogValue b) noexcept { return {a.log + b.log}; }
  friend LogValue operator/(LogValue a, LogValue b) noexcept { return {a.log - b.log}; }
};

/// log(e^a + e^b)
inline double log_add_exp(double a, double b) noexcept {
  if (a < b) std::swap(a, b);
  if (std::isinf(b) && b < 0) return a;
  return a + std::log1p(std::exp(b - a));
}

/// log(cosh x) - |x|, in [-log 2, 0].
inline double log_cosh_excess(double x) noexcept { return std::log1p(std::exp(-2.0 * std::fabs(x))) - kLn2; }

/// log(sinh x) - x for x >= 0; -inf at 0.
inline double log_sinh_excess(double x) noexcept { return std::log(-std::expm1(-2.0 * x)) - kLn2; }

/// log(cosh x) = |x| + log1p(e^{-2|x|}) - log 2
inline double log_cosh(double x) noexcept { return std::fabs(x) + log_cosh_excess(x); }

/// log(sinh x) for x > 0.
inline double log_sinh(double x) {
  detail::require(x > 0.0, Errc::domain, "log_sinh requires x > 0");
  return x + log_sinh_excess(x);
}

/// cosh(w) for w purely real or purely imaginary. Real arguments come back as
/// log cosh(w); imaginary ones as cos(Im w) in linear form, which may be
/// negative.
struct CoshOfComplex {
  bool linear;
  double value;
};

inline CoshOfComplex log_cosh_of_complex_arg(std::complex<double> w) {
  if (w.imag() == 0.0) return {false, log_cosh(w.real())};
  if (w.real() == 0.0) return {true, std::cos(w.imag())};
  throw Error(Errc::domain, "cosh argument must be purely real or purely imaginary");
}

namespace detail {

// Stirling series for log Gamma(w), valid for Re w >= 10.
inline std::complex<long double> ln_gamma_stirling(std::complex<long double> w) {
  // B_{2k} / (2k (2k-1)), k = 1..10
  static constexpr std::array<long double, 10> kCoef = {
      1.0L / 12.0L,          -1.0L / 360.0L,      1.0L / 1260.0L,       -1.0L / 1680.0L,
      1.0L / 1188.0L,        -691.0L / 360360.0L, 1.0L / 156.0L,        -3617.0L / 122400.0L,
      43867.0L / 244188.0L,  -174611.0L / 125400.0L};
  constexpr long double kHalfLog2Pi = 0.91893853320467274178032973640561764L;

  const std::complex<long double> inv = 1.0L / w;
  const std::complex<long double> inv2 = inv * inv;
  std::complex<long double> series = kCoef.back();
  for (int k = static_cast<int>(kCoef.size()) - 2; k >= 0; --k) series = series * inv2 + kCoef[k];
  series *= inv;

  const std::complex<long double> lw = std::log(w);
  // Assemble real and imaginary parts separately to keep the large terms
  // (w - 1/2) log w and -w from cancelling through complex rounding.
  const long double re = (w.real() - 0.5L) * lw.real() - w.imag() * lw.imag() - w.real() + kHalfLog2Pi;
  const long double im = w.imag() * (lw.real() - 1.0L) + (w.real() - 0.5L) * lw.imag();
  return std::complex<long double>(re, im) + series;
}

}  // namespace detail

/// Principal branch of log Gamma(z): analytic in the plane cut along the
/// negative real axis, matching log Gamma(x) on the positive axis.
///
/// Arguments with Re z < 10 are shifted with Gamma(z) = Gamma(z + n) /
/// prod(z + k), summing principal logs of each factor; in either open
/// half-plane every factor stays on one side of the cut, so the sum is the
/// analytic continuation. Throws Errc::pole at nonpositive integers.
inline std::complex<double> ln_gamma_complex(std::complex<double> z) {
  detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()), Errc::domain,
                  "ln_gamma_complex requires a finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw Error(Errc::pole, "Gamma has a pole at nonpositive integers");

  std::complex<long double> w(z.real(), z.imag());
  std::complex<long double> shift = 0.0L;
  while (w.real() < 10.0L) {
    shift += std::log(w);
    w += 1.0L;
  }
  const std::complex<long double> r = detail::ln_gamma_stirling(w) - shift;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

/// log |Gamma(1/2 + ix)|^2 = log(pi / cosh(pi x)).
inline LogValue abs_gamma_sq_half_plus_ix(double x) { return {kLogPi - log_cosh(kPi * x)}; }

/// log |Gamma(ix)|^2 = log(pi / (|x| sinh(pi |x|))).
inline LogValue abs_gamma_sq_ix(double x) {
  detail::require(x != 0.0, Errc::domain, "|Gamma(ix)|^2 has a pole at x = 0");
  const double ax = std::fabs(x);
  return {kLogPi - std::log(ax) - log_sinh(kPi * ax)};
}

}  // namespace schwinger
