#pragma once

// Self-check suite: closed-form identities, cross-route equivalences, shape
// properties of the standard curves and (at the full level) the oracle grid.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "schwinger/bogoliubov.hpp"
#include "schwinger/entanglement.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/fields.hpp"
#include "schwinger/oracle.hpp"
#include "schwinger/presets.hpp"
#include "schwinger/specfun.hpp"
#include "schwinger/sweep.hpp"

namespace schwinger {

enum class VerifyLevel { quick, full };

constexpr const char* to_string(VerifyLevel l) noexcept { return l == VerifyLevel::full ? "full" : "quick"; }

/// Source of |alpha|^2, |beta|^2 under test. Swappable so a deliberately
/// broken implementation can be shown to fail.
using ModuliProvider = std::function<BogoliubovModuli(const ModeParams&, const FieldProfile&, Statistics)>;

inline BogoliubovModuli default_moduli(const ModeParams& p, const FieldProfile& f, Statistics s) {
  return moduli(p, f, s);
}

struct CheckResult {
  std::string name;
  /// Acceptance criterion this check belongs to, 0 for supplementary ones.
  int criterion = 0;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct OraclePoint {
  Statistics stat;
  FieldKind field;
  double m, k_perp, k_z, E0, tau;
  double closed_form = 0.0;
  double numeric = 0.0;
  double rel_error = 0.0;
  bool passed = false;
  std::string error;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::quick;
  std::vector<CheckResult> checks;
  std::vector<OraclePoint> oracle_grid;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["level"] = to_string(level);
    j["passed"] = ok();
    auto cs = nlohmann::json::array();
    for (const auto& c : checks)
      cs.push_back({{"name", c.name},
                    {"criterion", c.criterion},
                    {"passed", c.passed},
                    {"max_error", c.max_error},
                    {"tolerance", c.tolerance},
                    {"seconds", c.seconds},
                    {"detail", c.detail}});
    j["checks"] = cs;
    if (!oracle_grid.empty()) {
      auto g = nlohmann::json::array();
      for (const auto& p : oracle_grid)
        g.push_back({{"stat", to_string(p.stat)},
                     {"field", to_string(p.field)},
                     {"m", p.m},
                     {"k_perp", p.k_perp},
                     {"k_z", p.k_z},
                     {"E0", p.E0},
                     {"tau", p.field == FieldKind::sauter ? nlohmann::json(p.tau) : nlohmann::json(nullptr)},
                     {"closed_form", p.closed_form},
                     {"numeric", p.numeric},
                     {"rel_error", p.rel_error},
                     {"passed", p.passed},
                     {"error", p.error}});
      j["oracle_grid"] = g;
    }
    return j;
  }
};

struct VerifyOptions {
  ModuliProvider provider = default_moduli;
  /// Worker threads for the oracle grid.
  unsigned threads = 1;
};

namespace detail {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

struct RandomMode {
  ModeParams params;
  FieldProfile field;
};

inline double log_uniform(Rng& rng, double lo, double hi) { return std::exp(uniform(rng, std::log(lo), std::log(hi))); }

// m, k_perp log-uniform in [1e-3, 10], k_z uniform in [-10, 10], q in
// [0.1, 10], E0 in [0.01, 100], tau in [0.01, 10].
inline RandomMode random_mode(Rng& rng, FieldKind kind) {
  const ModeParams p(log_uniform(rng, 1e-3, 10.0), log_uniform(rng, 0.1, 10.0), log_uniform(rng, 1e-3, 10.0),
                     uniform(rng, -10.0, 10.0));
  const double E0 = log_uniform(rng, 0.01, 100.0);
  if (kind == FieldKind::sauter) return {p, SauterField(E0, log_uniform(rng, 0.01, 10.0))};
  return {p, ConstantField(E0)};
}

/// |exp(a - b) - 1| for logs a, b.
inline double log_rel_error(double a, double b) { return std::fabs(std::expm1(a - b)); }

class Suite {
 public:
  Suite(VerifyReport& report, const VerifyOptions& opts) : report_(report), opts_(opts) {}

  /// Runs `body`, which fills max_error and detail and returns pass/fail.
  template <class Body>
  void run(std::string name, int criterion, double tolerance, Body body) {
    CheckResult c;
    c.name = std::move(name);
    c.criterion = criterion;
    c.tolerance = tolerance;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.passed = body(c);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(c));
  }

  const VerifyOptions& opts() const { return opts_; }
  VerifyReport& report() { return report_; }

 private:
  VerifyReport& report_;
  const VerifyOptions& opts_;
};

inline std::vector<double> entropy_column(const SweepSpec& spec) {
  std::vector<double> s;
  for (const auto& r : run_sweep(spec)) {
    if (!r.error.empty()) throw Error(Errc::invalid_argument, spec.label + ": point failed with " + r.error);
    s.push_back(r.entropy_bits);
  }
  return s;
}

/// Index i in (0, n-1) where the first difference turns from positive to
/// negative, or 0 if none.
inline std::size_t interior_peak(const std::vector<double>& y) {
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] - y[i - 1] > 0.0 && y[i + 1] - y[i] < 0.0) return i;
  return 0;
}

inline void normalization_checks(Suite& s) {
  for (auto stat : {Statistics::boson, Statistics::fermion})
    for (auto kind : {FieldKind::constant, FieldKind::sauter}) {
      const std::string name = std::string("normalization/") + to_string(stat) + "/" + to_string(kind);
      s.run(name, 1, 1e-10, [&](CheckResult& c) {
        Rng rng(1000 + 10 * static_cast<int>(stat) + static_cast<int>(kind));
        for (int i = 0; i < 1000; ++i) {
          const auto rm = random_mode(rng, kind);
          const auto mod = s.opts().provider(rm.params, rm.field, stat);
          double err = 0.0;
          if (stat == Statistics::boson) {
            err = log_rel_error(mod.alpha2.log, log_add_exp(0.0, mod.beta2.log));  // |alpha|^2 = 1 + |beta|^2
          } else {
            err = std::fabs(mod.alpha2.linear() + mod.beta2.linear() - 1.0);
          }
          c.max_error = std::max(c.max_error, err);
        }
        c.detail = "1000 random tuples";
        return c.max_error <= c.tolerance;
      });
    }
}

inline void gamma_checks(Suite& s) {
  const auto grid = [] {
    std::vector<double> x;
    for (int i = 0; i <= 398; ++i) x.push_back(0.1 + (20.0 - 0.1) * i / 398.0);
    return x;
  }();
  s.run("gamma/pi_over_half_plus_ix", 2, 1e-11, [&](CheckResult& c) {
    for (double x : grid) {
      const double lhs = kLogPi - 2.0 * ln_gamma_complex({0.5, x}).real();
      c.max_error = std::max(c.max_error, log_rel_error(lhs, log_cosh(kPi * x)));
    }
    c.detail = "pi/|Gamma(1/2+ix)|^2 = cosh(pi x), x in [0.1, 20]";
    return c.max_error <= c.tolerance;
  });
  s.run("gamma/abs_sq_ix", 2, 1e-11, [&](CheckResult& c) {
    for (double x : grid) {
      const double lhs = 2.0 * ln_gamma_complex({0.0, x}).real();
      const double rhs = kLogPi - std::log(x) - log_sinh(kPi * x);
      c.max_error = std::max(c.max_error, log_rel_error(lhs, rhs));
    }
    c.detail = "|Gamma(ix)|^2 = pi/(x sinh(pi x)), x in [0.1, 20]";
    return c.max_error <= c.tolerance;
  });
}

inline void connection_checks(Suite& s) {
  struct Case {
    const char* name;
    Statistics stat;
    FermionBranch branch;
  };
  for (const Case k : {Case{"boson", Statistics::boson, FermionBranch::plus},
                       Case{"fermion_plus", Statistics::fermion, FermionBranch::plus},
                       Case{"fermion_minus", Statistics::fermion, FermionBranch::minus}}) {
    s.run(std::string("connection/") + k.name, 3, 1e-9, [&](CheckResult& c) {
      Rng rng(3000 + static_cast<int>(k.stat) * 2 + static_cast<int>(k.branch));
      for (int i = 0; i < 100; ++i) {
        const ModeParams p(uniform(rng, 0.2, 2.0), uniform(rng, 0.5, 1.5), uniform(rng, 0.0, 2.0),
                           uniform(rng, -2.0, 2.0));
        const SauterField f(uniform(rng, 0.2, 10.0), uniform(rng, 0.1, 2.0));
        const auto mod = s.opts().provider(p, f, k.stat);
        const double lx = mod.beta2.log - mod.alpha2.log;
        const auto g = sauter_ratio_via_gamma(p, f, k.stat, k.branch);
        c.max_error = std::max({c.max_error, log_rel_error(g.log_first, lx), log_rel_error(g.log_second, lx)});
      }
      c.detail = "100 random Sauter tuples, both connection routes";
      return c.max_error <= c.tolerance;
    });
  }
  s.run("connection/transposed_is_reciprocal", 0, 1e-9, [&](CheckResult& c) {
    Rng rng(3100);
    for (int i = 0; i < 100; ++i) {
      const ModeParams p(uniform(rng, 0.2, 2.0), 1.0, uniform(rng, 0.0, 2.0), uniform(rng, -2.0, 2.0));
      const SauterField f(uniform(rng, 0.2, 10.0), uniform(rng, 0.1, 2.0));
      const auto mod = s.opts().provider(p, f, Statistics::boson);
      const auto g = sauter_ratio_via_gamma(p, f, Statistics::boson);
      c.max_error = std::max(c.max_error, log_rel_error(g.log_transposed, mod.alpha2.log - mod.beta2.log));
    }
    c.detail = "|lambda_22|^2/|lambda_21|^2 equals |alpha|^2/|beta|^2";
    return c.max_error <= c.tolerance;
  });
}

inline void fermion_peak_checks(Suite& s) {
  struct Mode {
    double m, k_perp, q;
  };
  for (const Mode md : {Mode{0.0, 1.0, 1.0}, Mode{1.0, 1.0, 1.0}, Mode{2.0, 0.5, 1.5}}) {
    char name[96];
    std::snprintf(name, sizeof name, "fermion_entropy_max/m=%g,k_perp=%g,q=%g", md.m, md.k_perp, md.q);
    s.run(name, 5, 1e-12, [&](CheckResult& c) {
      const ModeParams p(md.m, md.q, md.k_perp, 0.0);
      SweepSpec spec;
      spec.stat = Statistics::fermion;
      spec.axis = SweepAxis::E0;
      spec.start = 0.1;
      spec.stop = 1000.0;
      spec.steps = 10000;
      spec.scale = SweepScale::log;
      spec.fixed = {md.m, md.q, md.k_perp, 0.0, 1.0, 1.0};
      const auto xs = spec.axis_values();
      const auto S = entropy_column(spec);
      const auto best = static_cast<std::size_t>(std::max_element(S.begin(), S.end()) - S.begin());
      const double e_star = fermion_max_entropy_field(p);
      const double log_step = std::log(spec.stop / spec.start) / static_cast<double>(spec.steps - 1);
      const bool within = std::fabs(std::log(xs[best] / e_star)) <= log_step;
      const double s_peak = entropy(s.opts().provider(p, ConstantField(e_star), Statistics::fermion)).S_bits;
      c.max_error = std::fabs(s_peak - 1.0);
      char buf[160];
      std::snprintf(buf, sizeof buf, "argmax E0=%.6g, predicted %.6g, S(pred)=%.17g", xs[best], e_star, s_peak);
      c.detail = buf;
      return within && c.max_error <= c.tolerance;
    });
  }
}

inline void boson_saturation_checks(Suite& s) {
  s.run("boson_saturation/near_unit_beta2", 6, 1e-4, [&](CheckResult& c) {
    // |beta|^2 = exp(-pi mu) = 1 - 1e-6
    const double mu = -std::log1p(-1e-6) / kPi;
    const ModeParams p(0.0, 1.0, 1.0, 0.0);
    const auto mod = s.opts().provider(p, ConstantField(1.0 / mu), Statistics::boson);
    const double S = entropy(mod).S_bits;
    c.max_error = std::fabs(S - 2.0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "beta2=%.12g S=%.12g", mod.beta2_linear(), S);
    c.detail = buf;
    return c.max_error <= c.tolerance;
  });
  s.run("boson_saturation/fig1_increasing", 6, 0.0, [&](CheckResult& c) {
    for (const auto& spec : figure_preset("fig1")) {
      const auto S = entropy_column(spec);
      for (std::size_t i = 1; i < S.size(); ++i)
        if (!(S[i] > S[i - 1])) {
          c.detail = spec.label + " not strictly increasing at index " + std::to_string(i);
          return false;
        }
    }
    c.detail = "all fig1 curves strictly increasing";
    return true;
  });
}

inline void entropy_form_checks(Suite& s) {
  std::vector<double> b2;
  Rng rng(7000);
  for (int i = 0; i < 1000; ++i) {
    double v = 0.0;
    while (v <= 0.0) v = uniform(rng, 0.0, 1.0);
    b2.push_back(v);
  }
  s.run("entropy/beta_form_vs_ratio_form", 7, 1e-12, [&](CheckResult& c) {
    for (double v : b2) {
      const double a = boson_entropy_from_beta2(LogValue::from_linear(v));
      const double b = boson_entropy_from_ratio(LogValue::from_linear(v));
      c.max_error = std::max(c.max_error, std::fabs(a - b) / std::fabs(a));
    }
    c.detail = "1000 points, beta2 uniform in (0,1)";
    return c.max_error <= c.tolerance;
  });
  s.run("entropy/spectrum_sum", 7, 1e-10, [&](CheckResult& c) {
    for (double v : b2) {
      const LogValue lb = LogValue::from_linear(v);
      const BogoliubovModuli mod{lb, {log_add_exp(0.0, lb.log)}, Statistics::boson};
      const auto w = std::get<BosonGeometric>(schmidt_spectrum(mod)).materialize(1e-15);
      c.max_error = std::max(c.max_error, std::fabs(detail::entropy_bits(w) - boson_entropy_from_beta2(lb)));
    }
    c.detail = "Schmidt weights truncated at tail mass 1e-15";
    return c.max_error <= c.tolerance;
  });
}

inline void tau_limit_checks(Suite& s) {
  for (auto stat : {Statistics::boson, Statistics::fermion}) {
    s.run(std::string("tau_limit/long_pulse/") + to_string(stat), 8, 1e-2, [&](CheckResult& c) {
      const auto mod = s.opts().provider(ModeParams(1.0, 1.0, 1.0, 0.0), SauterField(1.0, 50.0), stat);
      c.max_error = log_rel_error(mod.beta2.log, -2.0 * kPi);
      char buf[96];
      std::snprintf(buf, sizeof buf, "beta2(tau=50)/exp(-2 pi) = %.6f", std::exp(mod.beta2.log + 2.0 * kPi));
      c.detail = buf;
      return c.max_error <= c.tolerance;
    });
  }
  s.run("tau_limit/short_pulse/fermion", 8, 1e-6, [&](CheckResult& c) {
    const auto mod = s.opts().provider(ModeParams(1.0, 1.0, 1.0, 0.0), SauterField(1.0, 1e-3), Statistics::fermion);
    c.max_error = mod.beta2_linear();
    c.detail = "beta2 at tau=1e-3";
    return c.max_error < c.tolerance;
  });
}

inline void shape_checks(Suite& s) {
  s.run("shape/fig5_tau0.02_local_max", 9, 0.0, [&](CheckResult& c) {
    for (const auto& spec : figure_preset("fig5")) {
      if (spec.fixed.tau != 0.02) continue;
      const auto S = entropy_column(spec);
      const auto i = interior_peak(S);
      c.detail = i ? "local maximum at E0=" + std::to_string(spec.axis_values()[i]) : "no interior maximum";
      return i != 0;
    }
    c.detail = "tau=0.02 curve missing";
    return false;
  });
  s.run("shape/fig6_interior_max", 9, 0.0, [&](CheckResult& c) {
    bool all = true;
    for (const auto& spec : figure_preset("fig6")) {
      const auto S = entropy_column(spec);
      const auto i = interior_peak(S);
      c.detail += spec.label + (i ? ": k_z=" + std::to_string(spec.axis_values()[i]) + "; " : ": none; ");
      all = all && i != 0;
    }
    return all;
  });
  s.run("shape/fig2_decreasing", 9, 0.0, [&](CheckResult& c) {
    for (const auto& spec : figure_preset("fig2")) {
      const auto S = entropy_column(spec);
      for (std::size_t i = 1; i < S.size(); ++i)
        if (!(S[i] < S[i - 1])) {
          c.detail = spec.label + " not strictly decreasing at index " + std::to_string(i);
          return false;
        }
    }
    c.detail = "all fig2 curves strictly decreasing";
    return true;
  });
}

inline void schmidt_checks(Suite& s) {
  const auto random_moduli = [&](Rng& rng, Statistics stat, int i) {
    const auto rm = random_mode(rng, i % 2 ? FieldKind::sauter : FieldKind::constant);
    return s.opts().provider(rm.params, rm.field, stat);
  };
  s.run("schmidt/boson_sum", 10, 1e-12, [&](CheckResult& c) {
    Rng rng(10000);
    for (int i = 0; i < 500; ++i) {
      const auto mod = random_moduli(rng, Statistics::boson, i);
      const auto w = std::get<BosonGeometric>(schmidt_spectrum(mod)).materialize(1e-15);
      double sum = 0.0;
      for (double x : w) sum += x;
      c.max_error = std::max(c.max_error, std::fabs(sum - 1.0));
    }
    c.detail = "500 random modes, truncated at tail mass 1e-15";
    return c.max_error <= c.tolerance;
  });
  s.run("schmidt/fermion_sum", 10, 1e-12, [&](CheckResult& c) {
    Rng rng(10001);
    for (int i = 0; i < 500; ++i) {
      const auto mod = random_moduli(rng, Statistics::fermion, i);
      c.max_error = std::max(c.max_error, std::fabs(std::get<FermionFour>(schmidt_spectrum(mod)).total() - 1.0));
    }
    c.detail = "500 random modes";
    return c.max_error <= c.tolerance;
  });
  s.run("schmidt/fermion_party_entropies", 10, 1e-12, [&](CheckResult& c) {
    Rng rng(10002);
    for (int i = 0; i < 500; ++i) {
      const auto mod = random_moduli(rng, Statistics::fermion, i);
      const auto rho = fermion_reduced_density_matrices(std::get<FermionFour>(schmidt_spectrum(mod)));
      double lo = rho[0].entropy_bits(), hi = lo;
      for (const auto& r : rho) {
        lo = std::min(lo, r.entropy_bits());
        hi = std::max(hi, r.entropy_bits());
      }
      c.max_error = std::max(c.max_error, hi - lo);
    }
    c.detail = "spread of the four single-party entropies over 500 random modes";
    return c.max_error <= c.tolerance;
  });
}

/// The canonical oracle grid.
inline std::vector<OraclePoint> oracle_grid_points() {
  std::vector<OraclePoint> pts;
  for (auto kind : {FieldKind::constant, FieldKind::sauter})
    for (auto stat : {Statistics::boson, Statistics::fermion})
      for (double m : {0.0, 1.0, 2.0})
        for (double kp : {0.0, 1.0, 2.0})
          for (double kz : {-1.0, 0.0, 1.0})
            for (double E : {1.0, 5.0, 10.0}) {
              if (m == 0.0 && kp == 0.0) continue;  // gap closes, adiabatic basis undefined
              const auto taus = kind == FieldKind::sauter ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{0.0};
              for (double tau : taus) pts.push_back({stat, kind, m, kp, kz, E, tau, 0.0, 0.0, 0.0, false, {}});
            }
  return pts;
}

inline void oracle_checks(Suite& s) {
  s.run("oracle/canonical_grid", 4, 1e-4, [&](CheckResult& c) {
    auto pts = oracle_grid_points();
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
      for (std::size_t i = next++; i < pts.size(); i = next++) {
        auto& pt = pts[i];
        try {
          const ModeParams p(pt.m, 1.0, pt.k_perp, pt.k_z);
          const FieldProfile f =
              pt.field == FieldKind::sauter ? FieldProfile(SauterField(pt.E0, pt.tau)) : FieldProfile(ConstantField(pt.E0));
          pt.closed_form = s.opts().provider(p, f, pt.stat).beta2_linear();
          const auto r = mode_beta2(p, f, pt.stat);
          pt.numeric = r.beta2_numeric;
          pt.rel_error = std::fabs(pt.numeric / pt.closed_form - 1.0);
          pt.passed = r.resolved && pt.rel_error <= (pt.field == FieldKind::sauter ? 1e-4 : 1e-3);
        } catch (const std::exception& e) {
          pt.error = e.what();
        }
      }
    };
    const unsigned n = std::max(1u, s.opts().threads);
    if (n == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    }
    std::size_t bad = 0;
    double worst_const = 0.0, worst_sauter = 0.0;
    for (const auto& pt : pts) {
      if (!pt.passed) ++bad;
      (pt.field == FieldKind::sauter ? worst_sauter : worst_const) =
          std::max(pt.field == FieldKind::sauter ? worst_sauter : worst_const, pt.rel_error);
    }
    c.max_error = worst_sauter;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu points, %zu failed; worst rel error constant %.3g (tol 1e-3), sauter %.3g (tol 1e-4)",
                  pts.size(), bad, worst_const, worst_sauter);
    c.detail = buf;
    s.report().oracle_grid = std::move(pts);
    return bad == 0;
  });

  s.run("oracle/window_doubling", 0, 1e-3, [&](CheckResult& c) {
    OracleConfig wide;
    wide.t_span_factor = 50.0;
    bool ok = true;
    for (auto stat : {Statistics::boson, Statistics::fermion}) {
      for (const FieldProfile f : {FieldProfile(SauterField(1.0, 1.0)), FieldProfile(SauterField(2.0, 0.7)),
                                   FieldProfile(ConstantField(1.0)), FieldProfile(ConstantField(5.0))}) {
        const ModeParams p(1.0, 1.0, 0.5, 0.3);
        const double a = mode_beta2(p, f, stat).beta2_numeric;
        const double b = mode_beta2(p, f, stat, wide).beta2_numeric;
        const double rel = std::fabs(b / a - 1.0);
        c.max_error = std::max(c.max_error, rel);
        ok = ok && rel < (is_sauter(f) ? 1e-3 : 1e-2);
      }
    }
    c.detail = "t_span_factor 25 vs 50; limits 1e-3 Sauter, 1e-2 constant";
    return ok;
  });

  s.run("oracle/constant_field_exp_minus_2pi", 0, 1e-3, [&](CheckResult& c) {
    for (auto stat : {Statistics::boson, Statistics::fermion}) {
      const auto r = mode_beta2(ModeParams(1.0, 1.0, 1.0, 0.0), ConstantField(1.0), stat);
      c.max_error = std::max(c.max_error, log_rel_error(std::log(r.beta2_numeric), -2.0 * kPi));
    }
    c.detail = "m=k_perp=q=E0=1: numeric beta2 vs exp(-2 pi), both statistics";
    return c.max_error <= c.tolerance;
  });

  s.run("oracle/weak_field_fermion", 0, 1e-30, [&](CheckResult& c) {
    OracleConfig cfg;
    cfg.abs_tol = 1e-30;
    const auto r = fermion_mode_beta2(ModeParams(1.0, 1.0, 1.0, 0.0), SauterField(1e-8, 5.0), cfg);
    c.max_error = r.beta2_numeric;
    c.detail = r.resolved ? "resolved" : "upper bound only";
    return r.beta2_numeric < c.tolerance;
  });
}

}  // namespace detail

inline VerifyReport verify(VerifyLevel level, const VerifyOptions& opts = {}) {
  VerifyReport report;
  report.level = level;
  detail::Suite suite(report, opts);
  detail::normalization_checks(suite);
  detail::gamma_checks(suite);
  detail::connection_checks(suite);
  detail::fermion_peak_checks(suite);
  detail::boson_saturation_checks(suite);
  detail::entropy_form_checks(suite);
  detail::tau_limit_checks(suite);
  detail::shape_checks(suite);
  detail::schmidt_checks(suite);
  if (level == VerifyLevel::full) detail::oracle_checks(suite);
  return report;
}

}  // namespace schwinger
