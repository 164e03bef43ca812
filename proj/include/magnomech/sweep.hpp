// sweep.hpp: parameter grids, figure presets and CSV emission.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magnomech/config.hpp"
#include "magnomech/evaluate.hpp"

namespace magnomech {

struct SweepRow {
  std::optional<double> curve_value;
  std::optional<double> axis2_value;
  double axis1_value{0.0};
  SystemParams params;
  SteadyStateReport report;
};

// Rows are ordered by (curve value, axis2 index, axis1 index).
struct SweepTable {
  std::string curve_param;
  std::string axis1_param;
  std::string axis2_param;
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  unsigned threads{0};  // 0: hardware concurrency, 1: serial
  EvaluateOptions evaluate{};
};

SweepTable run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

// 17 significant digits, scientific notation; NaN prints as "nan".
std::string format_number(double value);

inline constexpr std::string_view kCsvHeader =
    "curve_param,curve_value,axis2_value,axis1_value,stable,spectral_abscissa,pi_total,pi_mb,"
    "pi_trace,phi,mutual_info,weak_coupling_ratio,nu1,nu2,nu3";

void write_csv(std::ostream& os, const SweepTable& table);

// Opens spec.output (or uses `fallback` when it is empty) before computing
// anything; throws IoError if the file cannot be created.
void run_sweep_to_csv(const SweepSpec& spec, std::ostream& fallback, const SweepOptions& options = {});

// Figure presets fig2a..fig4c. delta_a is a free choice, default 1 (= omega_b).
inline constexpr double kDefaultPresetDeltaA = 1.0;
const std::vector<std::string_view>& preset_names();
SweepSpec preset(std::string_view name, double delta_a = kDefaultPresetDeltaA);

}  // namespace magnomech
