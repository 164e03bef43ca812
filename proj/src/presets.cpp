#include <string>

#include "magnomech/errors.hpp"
#include "magnomech/sweep.hpp"

namespace magnomech {

namespace {

// Shared by every figure: G_mb = 0.1, gamma_b = 0.01, gamma_m = 0.5.
SystemParams figure_base(double delta_a) {
  SystemParams p;
  p.delta_a = delta_a;
  p.delta_m = 1.0;
  p.omega_b = 1.0;
  p.g_am = 0.0;
  p.g_mb_eff = 0.1;
  p.gamma_a = 1.0;
  p.gamma_m = 0.5;
  p.gamma_b = 0.01;
  p.n_a = 0.0;
  p.n_m = 0.0;
  p.n_b = 10.0;
  p.drift_convention = DriftConvention::Consistent;
  return p;
}

SweepAxis detuning_axis() { return {"delta_m", -5.0, 5.0, 1001}; }

SweepSpec detuning_figure(double delta_a, double gamma_a, double n_b) {
  SweepSpec s;
  s.base = figure_base(delta_a);
  s.base.gamma_a = gamma_a;
  s.base.n_b = n_b;
  s.axis1 = detuning_axis();
  s.curve = CurveSpec{"g_am", {0.0, 1.0, 2.0}};
  return s;
}

SweepSpec correlation_figure(double delta_a, double g_am) {
  SweepSpec s;
  s.base = figure_base(delta_a);
  s.base.gamma_a = 1.0;
  s.base.n_b = 10.0;
  s.base.g_am = g_am;
  s.axis1 = detuning_axis();
  s.curve = CurveSpec{"g_am", {g_am}};
  return s;
}

}  // namespace

const std::vector<std::string_view>& preset_names() {
  static const std::vector<std::string_view> names = {
      "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig4a", "fig4b", "fig4c"};
  return names;
}

SweepSpec preset(std::string_view name, double delta_a) {
  if (name == "fig2a") return detuning_figure(delta_a, 0.1, 10.0);
  if (name == "fig2b") return detuning_figure(delta_a, 0.1, 100.0);
  if (name == "fig2c") return detuning_figure(delta_a, 1.0, 10.0);
  if (name == "fig2d") return detuning_figure(delta_a, 1.0, 100.0);
  if (name == "fig3a" || name == "fig3b") {
    SweepSpec s;
    s.base = figure_base(delta_a);
    s.base.n_b = 100.0;
    s.base.delta_m = 1.0;
    if (name == "fig3a") {
      s.axis1 = {"g_am", 0.0, 5.0, 1001};
      s.curve = CurveSpec{"gamma_a", {0.1, 1.0, 2.0}};
    } else {
      s.axis1 = {"gamma_a", 0.05, 5.0, 1001};
      s.curve = CurveSpec{"g_am", {0.1, 1.0, 2.0}};
    }
    return s;
  }
  if (name == "fig4a") return correlation_figure(delta_a, 0.0);
  if (name == "fig4b") return correlation_figure(delta_a, 1.0);
  if (name == "fig4c") return correlation_figure(delta_a, 2.0);

  std::string valid;
  for (std::string_view n : preset_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw DomainError("unknown preset '" + std::string(name) + "'; valid presets: " + valid);
}

}  // namespace magnomech
