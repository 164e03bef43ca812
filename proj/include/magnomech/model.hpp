// model.hpp: three-mode cavity magnomechanical model (photon a, magnon m,
// phonon b) linearized around its coherent steady state.
//
// All rates in SystemParams are dimensionless, measured in units of the
// phonon frequency. SI quantities enter only through MicroscopicParams and
// the helpers below. Quadrature ordering everywhere is
// (x_a, y_a, x_m, y_m, x_b, y_b).

#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Core>

namespace magnomech {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

namespace constants {
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double k_boltzmann = 1.380649e-23;      // J / K
inline constexpr double yig_spin_density = 4.22e27;      // m^-3
// gamma_g / 2pi = 28 GHz/T
inline constexpr double gyromagnetic_ratio = 2.0 * 3.14159265358979323846 * 28.0e9;  // rad/(s T)
}  // namespace constants

enum class DriftConvention {
  // Drift derived from the linearized Langevin equations (damping on both
  // phonon quadratures, time-odd magnon-phonon coupling). Default.
  Consistent,
  // Drift matrix exactly as printed in the source model, kept for comparison.
  PaperVerbatim,
};

std::string_view to_string(DriftConvention convention);
// Accepts "consistent" and "paper_verbatim"; throws DomainError otherwise.
DriftConvention parse_drift_convention(std::string_view text);

struct SystemParams {
  double delta_a{1.0};   // cavity detuning
  double delta_m{1.0};   // (effective) magnon detuning
  double omega_b{1.0};   // phonon frequency, 1 in dimensionless mode
  double g_am{0.0};      // magnon-photon coupling
  double g_mb_eff{0.0};  // linearized magnon-phonon coupling, used as the drift entry
  double gamma_a{1.0};
  double gamma_m{0.5};
  double gamma_b{0.01};
  double n_a{0.0};
  double n_m{0.0};
  double n_b{0.0};
  DriftConvention drift_convention{DriftConvention::Consistent};

  // Throws DomainError naming the first offending field.
  void validate() const;
};

// Microscopic (SI) description of the driven sphere. Frequencies in rad/s.
struct MicroscopicParams {
  double omega_a{0.0};
  double omega_m{0.0};
  double omega_d{0.0};
  double g_mb_bare{0.0};
  double drive_rabi{0.0};
  double temperature{0.0};      // K
  double sphere_diameter{1e-3};  // m
  double field_amplitude{0.0};   // T

  void validate() const;
  double delta_a() const { return omega_a - omega_d; }
  double delta_m() const { return omega_m - omega_d; }
};

// Bose-Einstein occupation 1/(exp(hbar w / kB T) - 1); 0 at T = 0.
double thermal_occupation(double frequency, double temperature);

// Drive Rabi rate (sqrt 5 / 4) gamma_g sqrt(rho V) B0 for a sphere of the
// given diameter, in rad/s.
double rabi_frequency(double field_amplitude, double sphere_diameter);

struct SteadyStateAmplitudes {
  std::complex<double> m_s;
  std::complex<double> b_s;
};

// Coherent amplitudes of magnon and phonon. Units are whatever the caller
// uses consistently; detunings and the drive come from `micro`.
SteadyStateAmplitudes steady_state_amplitudes(const MicroscopicParams& micro, double g_am,
                                              double gamma_a, double gamma_m, double gamma_b,
                                              double omega_b);

struct EffectiveParams {
  double g_mb_eff{0.0};
  double delta_m_eff{0.0};
  // |delta_m_eff - delta_m| / |delta_m| < 1e-3, i.e. the magnetostrictive
  // detuning shift can be dropped.
  bool detuning_shift_negligible{true};
};

EffectiveParams effective_params(const MicroscopicParams& micro, const SteadyStateAmplitudes& amps);
EffectiveParams effective_params(const MicroscopicParams& micro, double g_am, double gamma_a,
                                 double gamma_m, double gamma_b, double omega_b);

// Converts a microscopic description plus SI dissipation rates (rad/s) into
// dimensionless SystemParams. Occupations follow from the temperature; the
// drive amplitude is taken from `micro.drive_rabi`.
SystemParams system_from_microscopic(const MicroscopicParams& micro, double g_am, double gamma_a,
                                     double gamma_m, double gamma_b, double omega_b,
                                     DriftConvention convention = DriftConvention::Consistent);

Mat6 build_drift(const SystemParams& params);
Mat6 build_diffusion(const SystemParams& params);

struct MatrixPair {
  Mat6 drift;
  Mat6 diffusion;
};

MatrixPair build_matrices(const SystemParams& params);

}  // namespace magnomech
