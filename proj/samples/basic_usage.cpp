// Coefficients and entropy for one mode in each field profile, then a short
// sweep written as CSV.

#include <cstdio>
#include <iostream>

#include "schwinger/schwinger.hpp"

int main() {
  using namespace schwinger;

  const ModeParams mode(/*m=*/1.0, /*q=*/1.0, /*k_perp=*/1.0, /*k_z=*/0.0);

  for (auto stat : {Statistics::boson, Statistics::fermion}) {
    for (const FieldProfile field : {FieldProfile(ConstantField(1.0)), FieldProfile(SauterField(1.0, 2.0))}) {
      const auto mod = moduli(mode, field, stat);
      const auto rep = entropy(mod);
      std::printf("%-7s %-8s |beta|^2=%.6e |alpha|^2=%.6f S=%.6f bits\n", to_string(stat),
                  is_sauter(field) ? "sauter" : "constant", rep.beta2, rep.alpha2, rep.S_bits);
    }
  }

  // The same number straight from the mode equation.
  const auto numeric = boson_mode_beta2(mode, SauterField(1.0, 2.0));
  std::printf("oracle  sauter   |beta|^2=%.6e (%zu steps)\n", numeric.beta2_numeric, numeric.steps_used);

  SweepSpec spec;
  spec.stat = Statistics::fermion;
  spec.axis = SweepAxis::E0;
  spec.start = 1.0;
  spec.stop = 20.0;
  spec.steps = 5;
  spec.fixed = {0.0, 1.0, 1.0, 0.0, 1.0, 1.0};
  write_csv(std::cout, {sweep_metadata(spec), run_sweep(spec)});
}
