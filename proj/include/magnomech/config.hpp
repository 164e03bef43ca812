// config.hpp: flat `key = value` configuration files.
//
//   # comment
//   units = dimensionless        # or si
//   gamma_a = 0.1
//   sweep.axis1.param = delta_m
//   sweep.axis1.start = -5
//   ...
//
// In `si` mode every rate and detuning (delta_a, delta_m, omega_b, g_am,
// g_mb_eff, gamma_*) is an ordinary frequency in Hz and is divided by
// omega_b on load; occupations are dimensionless in both modes.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "magnomech/model.hpp"

namespace magnomech {

enum class Units { Dimensionless, SI };

struct SweepAxis {
  std::string param;
  double start{0.0};
  double stop{0.0};
  std::size_t count{2};

  // Evenly spaced grid, endpoints included exactly.
  std::vector<double> values() const;
};

struct CurveSpec {
  std::string param;
  std::vector<double> values;
};

struct SweepSpec {
  SystemParams base;
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  std::optional<CurveSpec> curve;
  std::string output;  // empty: standard output

  // Throws DomainError on a malformed grid or a grid value that violates the
  // SystemParams constraints.
  void validate() const;
};

using Config = std::variant<SystemParams, SweepSpec>;

// Throws ValidationError with line/column of the offending token.
Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

// Numeric SystemParams fields addressable by name (sweep axes, curves).
const std::vector<std::string_view>& parameter_names();
bool is_parameter(std::string_view name);
void set_parameter(SystemParams& params, std::string_view name, double value);
double get_parameter(const SystemParams& params, std::string_view name);

}  // namespace magnomech
