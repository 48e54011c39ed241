#pragma once

// Schmidt spectra of the in-vacuum expanded in out-states, and the von
// Neumann entropies (in bits) built from them. All quantities are per mode
// pair (k, -k).

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "schwinger/bogoliubov.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/specfun.hpp"

namespace schwinger {

/// Bosonic in-vacuum: |c_n|^2 = (1 - |c_0|^2)^n |c_0|^2 with
/// |c_0|^2 = 1 / |alpha|^2 and ratio |beta / alpha|^2 = 1 - |c_0|^2.
/// Kept lazy; `materialize` expands it until the remaining tail mass drops
/// below `tail_mass`.
struct BosonGeometric {
  double c0_sq;
  double ratio;

  std::vector<double> materialize(double tail_mass = 1e-15) const {
    std::vector<double> w;
    double tail = 1.0;  // ratio^n, the mass of terms n, n+1, ...
    double term = c0_sq;
    while (tail > tail_mass) {
      w.push_back(term);
      term *= ratio;
      tail *= ratio;
      if (ratio == 0.0) break;
    }
    return w;
  }
};

/// Fermionic in-vacuum over the four parties (k up, k down, -k up, -k down):
/// c_sq = {|a_up|^2 |a_dn|^2, |b_up|^2 |b_dn|^2, |a_up|^2 |b_dn|^2, |a_dn|^2 |b_up|^2}.
struct FermionFour {
  std::array<double, 4> c_sq;

  double total() const { return c_sq[0] + c_sq[1] + c_sq[2] + c_sq[3]; }
};

using SchmidtSpectrum = std::variant<BosonGeometric, FermionFour>;

inline SchmidtSpectrum schmidt_spectrum(const BogoliubovModuli& m) {
  if (m.stat == Statistics::boson) return BosonGeometric{std::exp(-m.alpha2.log), std::exp(m.beta2.log - m.alpha2.log)};
  detail::require(!m.alpha2.is_zero(), Errc::degenerate_normalization, "fermionic |alpha|^2 = 0");
  // The field does not act on spin, so both spin projections share alpha and beta.
  const double a2 = m.alpha2.linear();
  const double b2 = m.beta2.linear();
  return FermionFour{{a2 * a2, b2 * b2, a2 * b2, a2 * b2}};
}

struct EntropyReport {
  double S_bits;
  double beta2;
  double alpha2;
  std::optional<double> x;  // |beta|^2 / |alpha|^2, bosons only
  double c0_sq;
  double mean_pairs;
  /// S_A(BCD), S_B(ACD), S_C(ABD), S_D(ABC); fermions only.
  std::optional<std::array<double, 4>> party_bits;
};

namespace detail {

/// -p log2 p with 0 log 0 = 0, p given by its log.
inline double neg_plog2p(const LogValue& p) {
  if (p.is_zero()) return 0.0;
  return -p.linear() * p.log / kLn2;
}

inline double entropy_bits(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs)
    if (p > 0.0) s -= p * std::log2(p);
  return s;
}

}  // namespace detail

/// Bosonic entropy from |beta|^2 alone:
///   S = -b log2 b + (1 + b) log2(1 + b)
inline double boson_entropy_from_beta2(LogValue beta2) {
  if (beta2.is_zero()) return 0.0;
  const double lb = beta2.log;
  const double log_one_plus = log_add_exp(0.0, lb);  // log(1 + b)
  // b log(1 + 1/b) tends to 1 - 1/(2b) for large b.
  const double cross = lb > 36.0 ? 1.0 - 0.5 * std::exp(-lb) : std::exp(lb) * std::log1p(std::exp(-lb));
  return (cross + log_one_plus) / kLn2;
}

/// Bosonic entropy through x = b / (1 + b):
///   S = log2( x^{x/(x-1)} / (1 - x) ) = [x r - log(1 - x)] / log 2,
/// with r = -log(x) / (1 - x). log x is taken from x itself below 1/2 and
/// from eps = 1 - x above, so neither end loses digits.
inline double boson_entropy_from_ratio(LogValue beta2) {
  if (beta2.is_zero()) return 0.0;
  const double log_one_plus = log_add_exp(0.0, beta2.log);  // -log(1 - x)
  const double log_x = beta2.log - log_one_plus;
  const double x = std::exp(log_x);
  const double eps = std::exp(-log_one_plus);
  double r = 0.0;
  if (beta2.log < 0.0)
    r = -log_x / eps;
  else
    r = eps < 1e-8 ? 1.0 + 0.5 * eps : -std::log1p(-eps) / eps;
  return (x * r + log_one_plus) / kLn2;
}

inline EntropyReport entropy_boson(const BogoliubovModuli& m) {
  detail::require(m.stat == Statistics::boson, Errc::invalid_argument, "entropy_boson needs bosonic moduli");
  const double s_beta = boson_entropy_from_beta2(m.beta2);
  const double s_x = boson_entropy_from_ratio(m.beta2);
  detail::require(std::fabs(s_beta - s_x) <= 1e-12 * std::fabs(s_beta) + 1e-300, Errc::cross_check,
                  "bosonic entropy forms disagree");
  const auto spec = std::get<BosonGeometric>(schmidt_spectrum(m));
  return {s_beta, m.beta2.linear(), m.alpha2.linear(), spec.ratio, spec.c0_sq, m.beta2.linear(), std::nullopt};
}

/// 2x2 reduced density matrix of one fermionic party (real symmetric).
struct Density2 {
  double d00, d01, d11;

  double trace() const { return d00 + d11; }
  std::array<double, 2> eigenvalues() const {
    const double mean = 0.5 * (d00 + d11);
    const double r = std::hypot(0.5 * (d00 - d11), d01);
    return {mean + r, mean - r};
  }
  double entropy_bits() const {
    const auto ev = eigenvalues();
    return detail::entropy_bits(ev);
  }
};

/// Reduced states of parties A (k up), B (k down), C (-k up), D (-k down),
/// obtained by explicit partial trace of the 16-component out-state.
///
/// Basis index bits are (A, B, C, D) from most to least significant. The
/// in-vacuum populates |0000>, |1111>, |1001> (A and D excited) and |0110>.
inline std::array<Density2, 4> fermion_reduced_density_matrices(const FermionFour& spec) {
  std::array<double, 16> psi{};
  psi[0b0000] = std::sqrt(spec.c_sq[0]);
  psi[0b1111] = std::sqrt(spec.c_sq[1]);
  psi[0b1001] = std::sqrt(spec.c_sq[2]);
  psi[0b0110] = std::sqrt(spec.c_sq[3]);

  std::array<Density2, 4> rho{};
  for (int party = 0; party < 4; ++party) {
    const int bit = 3 - party;
    double d[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (int rest = 0; rest < 16; ++rest) {
      if (rest & (1 << bit)) continue;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d[i][j] += psi[rest | (i << bit)] * psi[rest | (j << bit)];
    }
    rho[party] = {d[0][0], d[0][1], d[1][1]};
  }
  return rho;
}

inline EntropyReport entropy_fermion(const BogoliubovModuli& m) {
  detail::require(m.stat == Statistics::fermion, Errc::invalid_argument, "entropy_fermion needs fermionic moduli");
  const double s = detail::neg_plog2p(m.alpha2) + detail::neg_plog2p(m.beta2);
  // |beta|^2 = 1 is a product state of filled pairs; it has no normalizable
  // Schmidt decomposition over the in-vacuum but its entropy is plainly 0.
  if (m.alpha2.is_zero()) return {0.0, 1.0, 0.0, std::nullopt, 0.0, 1.0, std::array<double, 4>{}};

  const auto spec = std::get<FermionFour>(schmidt_spectrum(m));
  const auto rho = fermion_reduced_density_matrices(spec);
  std::array<double, 4> parties{};
  for (std::size_t i = 0; i < 4; ++i) {
    parties[i] = rho[i].entropy_bits();
    detail::require(std::fabs(parties[i] - s) <= 1e-12, Errc::cross_check,
                    "four-party entropy disagrees with the binary entropy");
  }
  return {s, m.beta2.linear(), m.alpha2.linear(), std::nullopt, spec.c_sq[0], m.beta2.linear(), parties};
}

inline EntropyReport entropy(const BogoliubovModuli& m) {
  return m.stat == Statistics::boson ? entropy_boson(m) : entropy_fermion(m);
}

/// Average of the four single-party entropies.
inline double average_party_entropy(const EntropyReport& r) {
  if (!r.party_bits) return r.S_bits;
  const auto& p = *r.party_bits;
  return 0.25 * (p[0] + p[1] + p[2] + p[3]);
}

/// |<0 out | 0 in>|^2: 1 / |alpha|^2 for bosons, |alpha|^4 for fermions
/// (both spin projections).
inline double vacuum_persistence(const BogoliubovModuli& m) {
  return m.stat == Statistics::boson ? std::exp(-m.alpha2.log) : std::exp(2.0 * m.alpha2.log);
}

inline double mean_pair_number(const BogoliubovModuli& m) { return m.beta2.linear(); }

/// Constant-field amplitude at which the fermionic |beta|^2 = 1/2 and the
/// entropy reaches its maximum of one bit.
inline double fermion_max_entropy_field(const ModeParams& p) {
  const double m2 = p.transverse_mass_sq();
  detail::require(m2 > 0.0, Errc::degenerate_normalization, "no finite maximizing field for m = k_perp = 0");
  return kPi * m2 / (p.q() * kLn2);
}

}  // namespace schwinger
