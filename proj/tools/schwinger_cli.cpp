// schwinger: Bogoliubov coefficients and pair entanglement entropy for
// scalar and Dirac modes in constant and Sauter electric fields.
//
// Exit status: 0 success, 1 verification failure, 2 usage error,
// 3 numerical error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schwinger/schwinger.hpp"

namespace {

using namespace schwinger;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string stat = "boson";
  std::string field = "constant";
  FixedParams fixed;
  std::string sweep;
  std::string out;
  std::string format = "csv";
  std::string preset;
  std::string convention = "consistent";
  unsigned threads = 0;
  bool oracle = false;
  std::string verify_level = "quick";
  std::string verify_json;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Statistics parse_stat(const std::string& s) { return s == "fermion" ? Statistics::fermion : Statistics::boson; }
FieldKind parse_field(const std::string& s) { return s == "sauter" ? FieldKind::sauter : FieldKind::constant; }
FermionConvention parse_convention(const std::string& s) {
  return s == "half" ? FermionConvention::half_exponent : FermionConvention::consistent;
}

// axis:start:stop:steps[:log]
SweepSpec parse_sweep(const std::string& text, const Options& o) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 4 && parts.size() != 5) throw UsageError("--sweep expects axis:start:stop:steps[:log]");
  if (parts.size() == 5 && parts[4] != "log" && parts[4] != "linear")
    throw UsageError("--sweep scale must be 'log' or 'linear'");
  SweepSpec s;
  try {
    s.axis = parse_axis(parts[0]);
    s.start = std::stod(parts[1]);
    s.stop = std::stod(parts[2]);
    const long steps = std::stol(parts[3]);
    if (steps < 2) throw UsageError("--sweep needs at least 2 steps");
    s.steps = static_cast<std::size_t>(steps);
  } catch (const std::logic_error&) {
    throw UsageError("--sweep: cannot parse '" + text + "'");
  }
  s.scale = parts.size() == 5 && parts[4] == "log" ? SweepScale::log : SweepScale::linear;
  s.fixed = o.fixed;
  s.stat = parse_stat(o.stat);
  s.field_kind = parse_field(o.field);
  s.convention = parse_convention(o.convention);
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
}

std::string render(const SweepSpec& spec, const std::vector<SweepRow>& rows, const std::string& format) {
  if (format == "json") return rows_to_json(rows).dump(2) + "\n";
  std::ostringstream os;
  write_csv(os, {sweep_metadata(spec), rows});
  return os.str();
}

int run_sweeps(const std::vector<SweepSpec>& specs, const Options& o, bool out_is_dir) {
  const std::string ext = o.format == "json" ? ".json" : ".csv";
  if (out_is_dir && !o.out.empty()) {
    std::filesystem::create_directories(o.out);
    for (const auto& spec : specs)
      write_text((std::filesystem::path(o.out) / (spec.label + ext)).string(),
                 render(spec, run_sweep(spec, o.threads), o.format));
    return kExitOk;
  }
  if (specs.size() == 1) {
    write_text(o.out, render(specs[0], run_sweep(specs[0], o.threads), o.format));
    return kExitOk;
  }
  // Several curves on one stream: CSV blocks separated by a blank line, or
  // one JSON object keyed by curve label.
  std::string text;
  nlohmann::json all = nlohmann::json::object();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto rows = run_sweep(specs[i], o.threads);
    if (o.format == "json") {
      all[specs[i].label] = rows_to_json(rows);
    } else {
      if (i) text += "\n";
      text += render(specs[i], rows, o.format);
    }
  }
  if (o.format == "json") text = all.dump(2) + "\n";
  write_text(o.out, text);
  return kExitOk;
}

int run_point(const Options& o) {
  const ModeParams p(o.fixed.m, o.fixed.q, o.fixed.k_perp, o.fixed.k_z);
  const auto kind = parse_field(o.field);
  const FieldProfile field =
      kind == FieldKind::sauter ? FieldProfile(SauterField(o.fixed.E0, o.fixed.tau)) : FieldProfile(ConstantField(o.fixed.E0));
  const auto stat = parse_stat(o.stat);
  const auto mod = moduli(p, field, stat, parse_convention(o.convention));
  const auto rep = entropy(mod);

  std::vector<std::pair<std::string, double>> cols = {{"beta2", rep.beta2},
                                                      {"alpha2", rep.alpha2},
                                                      {"entropy_bits", rep.S_bits},
                                                      {"c0_sq", rep.c0_sq},
                                                      {"mean_pairs", rep.mean_pairs},
                                                      {"log_beta2", mod.beta2.log},
                                                      {"vacuum_persistence", vacuum_persistence(mod)}};
  std::optional<OracleResult> orc;
  if (o.oracle) {
    orc = mode_beta2(p, field, stat);
    cols.emplace_back("oracle_beta2", orc->beta2_numeric);
    cols.emplace_back("oracle_conservation_defect", orc->conservation_defect);
    cols.emplace_back("oracle_resolution_floor", orc->resolution_floor);
  }

  if (o.format == "json") {
    nlohmann::json j;
    for (const auto& [k, v] : cols) j[k] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
    if (orc) {
      j["oracle_resolved"] = orc->resolved;
      j["oracle_steps"] = orc->steps_used;
    }
    j["stat"] = o.stat;
    j["field"] = o.field;
    j["convention"] = o.convention;
    write_text(o.out, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "# stat=" << o.stat << "\n# field=" << o.field << "\n# convention=" << o.convention << '\n';
  for (auto [k, v] : {std::pair<const char*, double>{"m", o.fixed.m}, {"q", o.fixed.q}, {"k_perp", o.fixed.k_perp},
                      {"k_z", o.fixed.k_z}, {"E0", o.fixed.E0}})
    os << "# " << k << '=' << format_double(v) << '\n';
  if (kind == FieldKind::sauter) os << "# tau=" << format_double(o.fixed.tau) << '\n';
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i].first;
  os << '\n';
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << format_double(cols[i].second);
  os << '\n';
  write_text(o.out, os.str());
  return kExitOk;
}

int run_verify(const Options& o) {
  VerifyOptions vo;
  vo.threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.threads;
  const auto report = verify(o.verify_level == "full" ? VerifyLevel::full : VerifyLevel::quick, vo);
  for (const auto& c : report.checks)
    std::fprintf(stderr, "%s  %-48s err=%-10.3g %s\n", c.passed ? "ok  " : "FAIL", c.name.c_str(), c.max_error,
                 c.detail.c_str());
  const std::string summary = report.to_json().dump(2) + "\n";
  if (o.verify_json.empty())
    std::cout << summary;
  else
    write_text(o.verify_json, summary);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwinger pair production: Bogoliubov coefficients and entanglement entropy"};
  app.set_config("--config", "", "Read key=value options from a file; command-line flags take precedence");
  Options o;

  app.add_option("--stat", o.stat, "Particle statistics")->check(CLI::IsMember({"boson", "fermion"}));
  app.add_option("--field", o.field, "Field profile")->check(CLI::IsMember({"constant", "sauter"}));
  app.add_option("--m", o.fixed.m, "Rest mass");
  app.add_option("--q", o.fixed.q, "Charge magnitude");
  app.add_option("--kperp", o.fixed.k_perp, "Transverse momentum magnitude");
  app.add_option("--kz", o.fixed.k_z, "Longitudinal momentum");
  app.add_option("--E0", o.fixed.E0, "Field amplitude");
  app.add_option("--tau", o.fixed.tau, "Sauter pulse width");
  app.add_option("--sweep", o.sweep, "Sweep one quantity: axis:start:stop:steps[:log], axis in E0,m,kperp,kz,tau");
  app.add_option("--out", o.out, "Output file (directory for --preset); stdout if omitted");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--preset", o.preset, "Standard curve set fig1..fig10");
  app.add_option("--convention", o.convention, "Constant-field fermion exponent: consistent (exp(-pi mu)) or half (exp(-pi mu/2))")
      ->check(CLI::IsMember({"consistent", "half"}));
  app.add_option("--threads", o.threads, "Worker threads, 0 for one per core");
  app.add_flag("--oracle", o.oracle, "Single point: also integrate the mode equation numerically");

  auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suite");
  verify_cmd->add_option("level", o.verify_level, "quick or full (full adds the oracle grid)")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--json", o.verify_json, "Write the JSON summary here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(o);
    if (!o.preset.empty() && !o.sweep.empty()) throw UsageError("--preset and --sweep are mutually exclusive");
    if (!o.preset.empty()) {
      auto specs = figure_preset(o.preset);
      return run_sweeps(specs, o, true);
    }
    if (!o.sweep.empty()) {
      auto spec = parse_sweep(o.sweep, o);
      spec.validate();
      return run_sweeps({spec}, o, false);
    }
    return run_point(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::invalid_argument:
      case Errc::zero_field:
      case Errc::zero_width:
      case Errc::unsupported_profile:
        return kExitUsage;
      default:
        return kExitNumerical;
    }
  }
}
