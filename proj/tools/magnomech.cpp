// magnomech: command-line front end.
//
//   magnomech point <config>
//   magnomech sweep <config> [--threads N]
//   magnomech preset <name> [--out path] [--delta-a X] [--threads N]
//   magnomech check <config>
//
// Exit codes: 0 success, 1 validation error, 2 numeric failure, 3 unstable
// point.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <variant>

#include "magnomech/check.hpp"
#include "magnomech/config.hpp"
#include "magnomech/errors.hpp"
#include "magnomech/evaluate.hpp"
#include "magnomech/sweep.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kNumeric = 2, kUnstable = 3 };

using namespace magnomech;

int cmd_point(const std::string& path) {
  const Config cfg = load_config(path);
  if (!std::holds_alternative<SystemParams>(cfg)) {
    std::cerr << "error: '" << path << "' describes a sweep; use `magnomech sweep`\n";
    return kValidation;
  }
  const SystemParams& params = std::get<SystemParams>(cfg);
  const SteadyStateReport report = evaluate_point(params);
  print_report(std::cout, params, report);
  return report.stable ? kOk : kUnstable;
}

int cmd_sweep(const std::string& path, unsigned threads) {
  const Config cfg = load_config(path);
  if (!std::holds_alternative<SweepSpec>(cfg)) {
    std::cerr << "error: '" << path << "' has no sweep.axis1 section\n";
    return kValidation;
  }
  run_sweep_to_csv(std::get<SweepSpec>(cfg), std::cout, {.threads = threads});
  return kOk;
}

int cmd_preset(const std::string& name, const std::string& out, double delta_a, unsigned threads) {
  SweepSpec spec = preset(name, delta_a);
  spec.output = out;
  run_sweep_to_csv(spec, std::cout, {.threads = threads});
  return kOk;
}

int print_checks(const SystemParams& params, const std::string& label) {
  bool all = true;
  if (!label.empty()) std::cout << "# " << label << "\n";
  for (const CheckResult& c : run_oracle_battery(params)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
    all = all && c.passed;
  }
  return all ? kOk : kNumeric;
}

int cmd_check(const std::string& path) {
  const Config cfg = load_config(path);
  if (const auto* params = std::get_if<SystemParams>(&cfg)) {
    const SteadyStateReport r = evaluate_point(*params);
    const int rc = print_checks(*params, "");
    if (rc != kOk) return rc;
    return r.stable ? kOk : kUnstable;
  }
  // Sweeps: first, middle and last axis1 point of the base configuration.
  const SweepSpec& spec = std::get<SweepSpec>(cfg);
  const std::vector<double> xs = spec.axis1.values();
  int rc = kOk;
  for (std::size_t i : {std::size_t{0}, xs.size() / 2, xs.size() - 1}) {
    SystemParams p = spec.base;
    if (spec.curve) set_parameter(p, spec.curve->param, spec.curve->values.front());
    if (spec.axis2) set_parameter(p, spec.axis2->param, spec.axis2->start);
    set_parameter(p, spec.axis1.param, xs[i]);
    const int r = print_checks(p, spec.axis1.param + " = " + format_number(xs[i]));
    if (r != kOk) rc = r;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state entropy production and magnon-phonon correlations of a cavity "
               "magnomechanical system"};
  app.require_subcommand(1);

  std::string config_path;
  unsigned threads = 0;

  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  point->add_option("config", config_path, "configuration file")->required();

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
  sweep->add_option("config", config_path, "configuration file")->required();
  sweep->add_option("--threads", threads, "worker threads (0 = all cores, 1 = serial)");

  std::string preset_name;
  std::string out_path;
  double delta_a = kDefaultPresetDeltaA;
  auto* pre = app.add_subcommand("preset", "run a figure preset sweep");
  pre->add_option("name", preset_name, "preset name (fig2a ... fig4c)")->required();
  pre->add_option("--out", out_path, "CSV output path (default: stdout)");
  pre->add_option("--delta-a", delta_a, "cavity detuning in units of omega_b");
  pre->add_option("--threads", threads, "worker threads (0 = all cores, 1 = serial)");

  auto* check = app.add_subcommand("check", "run the oracle battery at a configuration");
  check->add_option("config", config_path, "configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*point) return cmd_point(config_path);
    if (*sweep) return cmd_sweep(config_path, threads);
    if (*pre) return cmd_preset(preset_name, out_path, delta_a, threads);
    if (*check) return cmd_check(config_path);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << config_path << ": " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
  return kOk;
}
