#include "magnomech/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "magnomech/errors.hpp"

namespace magnomech {

namespace {

void require(bool ok, const char* field, const char* what, double value) {
  if (!ok) {
    std::ostringstream os;
    os << field << " must be " << what << " (got " << value << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

std::string_view to_string(DriftConvention convention) {
  switch (convention) {
    case DriftConvention::Consistent:
      return "consistent";
    case DriftConvention::PaperVerbatim:
      return "paper_verbatim";
  }
  return "unknown";
}

DriftConvention parse_drift_convention(std::string_view text) {
  if (text == "consistent") return DriftConvention::Consistent;
  if (text == "paper_verbatim") return DriftConvention::PaperVerbatim;
  throw DomainError("drift_convention must be 'consistent' or 'paper_verbatim', got '" +
                    std::string(text) + "'");
}

void SystemParams::validate() const {
  require(std::isfinite(delta_a), "delta_a", "finite", delta_a);
  require(std::isfinite(delta_m), "delta_m", "finite", delta_m);
  require(omega_b > 0.0 && std::isfinite(omega_b), "omega_b", "> 0", omega_b);
  require(g_am >= 0.0 && std::isfinite(g_am), "g_am", ">= 0", g_am);
  require(g_mb_eff >= 0.0 && std::isfinite(g_mb_eff), "g_mb_eff", ">= 0", g_mb_eff);
  require(gamma_a > 0.0 && std::isfinite(gamma_a), "gamma_a", "> 0", gamma_a);
  require(gamma_m > 0.0 && std::isfinite(gamma_m), "gamma_m", "> 0", gamma_m);
  require(gamma_b > 0.0 && std::isfinite(gamma_b), "gamma_b", "> 0", gamma_b);
  require(n_a >= 0.0 && std::isfinite(n_a), "n_a", ">= 0", n_a);
  require(n_m >= 0.0 && std::isfinite(n_m), "n_m", ">= 0", n_m);
  require(n_b >= 0.0 && std::isfinite(n_b), "n_b", ">= 0", n_b);
}

void MicroscopicParams::validate() const {
  require(omega_a > 0.0, "omega_a", "> 0", omega_a);
  require(omega_m > 0.0, "omega_m", "> 0", omega_m);
  require(drive_rabi >= 0.0, "drive_rabi", ">= 0", drive_rabi);
  require(temperature >= 0.0, "temperature", ">= 0", temperature);
  require(sphere_diameter > 0.0, "sphere_diameter", "> 0", sphere_diameter);
  require(field_amplitude >= 0.0, "field_amplitude", ">= 0", field_amplitude);
}

double thermal_occupation(double frequency, double temperature) {
  require(frequency > 0.0, "frequency", "> 0", frequency);
  require(temperature >= 0.0, "temperature", ">= 0", temperature);
  if (temperature == 0.0) return 0.0;
  const double x = constants::hbar * frequency / (constants::k_boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

double rabi_frequency(double field_amplitude, double sphere_diameter) {
  require(field_amplitude >= 0.0, "field_amplitude", ">= 0", field_amplitude);
  require(sphere_diameter >= 0.0, "sphere_diameter", ">= 0", sphere_diameter);
  const double volume = std::numbers::pi / 6.0 * sphere_diameter * sphere_diameter * sphere_diameter;
  const double spins = constants::yig_spin_density * volume;
  return std::sqrt(5.0) / 4.0 * constants::gyromagnetic_ratio * std::sqrt(spins) * field_amplitude;
}

SteadyStateAmplitudes steady_state_amplitudes(const MicroscopicParams& micro, double g_am,
                                              double gamma_a, double gamma_m, double gamma_b,
                                              double omega_b) {
  using namespace std::complex_literals;
  const double delta_a = micro.delta_a();
  const double delta_m = micro.delta_m();

  const std::complex<double> cavity = 1.0i * delta_a + gamma_a;
  const std::complex<double> denom = g_am * g_am + (1.0i * delta_m + gamma_m) * cavity;
  if (std::abs(denom) == 0.0) {
    std::ostringstream os;
    os << "steady-state amplitude denominator vanishes at delta_a=" << delta_a
       << " delta_m=" << delta_m << " g_am=" << g_am << " gamma_a=" << gamma_a
       << " gamma_m=" << gamma_m;
    throw SingularityError(os.str());
  }
  const std::complex<double> phonon_denom = 1.0i * omega_b + gamma_b;
  if (std::abs(phonon_denom) == 0.0) {
    throw SingularityError("phonon amplitude denominator vanishes (omega_b = gamma_b = 0)");
  }

  SteadyStateAmplitudes out;
  out.m_s = micro.drive_rabi * cavity / denom;
  out.b_s = -1.0i * micro.g_mb_bare * std::norm(out.m_s) / phonon_denom;
  return out;
}

EffectiveParams effective_params(const MicroscopicParams& micro, const SteadyStateAmplitudes& amps) {
  EffectiveParams out;
  const double delta_m = micro.delta_m();
  out.g_mb_eff = micro.g_mb_bare * std::abs(amps.m_s);
  // b_s + b_s^* = 2 Re b_s
  out.delta_m_eff = delta_m - micro.g_mb_bare * 2.0 * amps.b_s.real();
  const double shift = std::abs(out.delta_m_eff - delta_m);
  out.detuning_shift_negligible = delta_m != 0.0 ? shift / std::abs(delta_m) < 1e-3 : shift == 0.0;
  return out;
}

EffectiveParams effective_params(const MicroscopicParams& micro, double g_am, double gamma_a,
                                 double gamma_m, double gamma_b, double omega_b) {
  return effective_params(micro,
                          steady_state_amplitudes(micro, g_am, gamma_a, gamma_m, gamma_b, omega_b));
}

SystemParams system_from_microscopic(const MicroscopicParams& micro, double g_am, double gamma_a,
                                     double gamma_m, double gamma_b, double omega_b,
                                     DriftConvention convention) {
  micro.validate();
  require(omega_b > 0.0, "omega_b", "> 0", omega_b);
  const EffectiveParams eff = effective_params(micro, g_am, gamma_a, gamma_m, gamma_b, omega_b);

  SystemParams p;
  p.delta_a = micro.delta_a() / omega_b;
  p.delta_m = eff.delta_m_eff / omega_b;
  p.omega_b = 1.0;
  p.g_am = g_am / omega_b;
  p.g_mb_eff = eff.g_mb_eff / omega_b;
  p.gamma_a = gamma_a / omega_b;
  p.gamma_m = gamma_m / omega_b;
  p.gamma_b = gamma_b / omega_b;
  p.n_a = thermal_occupation(micro.omega_a, micro.temperature);
  p.n_m = thermal_occupation(micro.omega_m, micro.temperature);
  p.n_b = thermal_occupation(omega_b, micro.temperature);
  p.drift_convention = convention;
  p.validate();
  return p;
}

Mat6 build_drift(const SystemParams& p) {
  Mat6 a = Mat6::Zero();
  const double g = p.g_mb_eff;

  // photon
  a(0, 0) = -p.gamma_a;
  a(0, 1) = p.delta_a;
  a(0, 3) = p.g_am;
  a(1, 0) = -p.delta_a;
  a(1, 1) = -p.gamma_a;
  a(1, 2) = -p.g_am;
  // magnon
  a(2, 1) = p.g_am;
  a(2, 2) = -p.gamma_m;
  a(2, 3) = p.delta_m;
  a(3, 0) = -p.g_am;
  a(3, 2) = -p.delta_m;
  a(3, 3) = -p.gamma_m;
  // phonon
  a(4, 5) = p.omega_b;
  a(5, 4) = -p.omega_b;
  a(5, 5) = -p.gamma_b;

  switch (p.drift_convention) {
    case DriftConvention::Consistent:
      a(3, 4) = -g;
      a(4, 4) = -p.gamma_b;
      a(5, 2) = -g;
      break;
    case DriftConvention::PaperVerbatim:
      a(2, 4) = -g;
      a(5, 3) = g;
      break;
  }
  return a;
}

Mat6 build_diffusion(const SystemParams& p) {
  Vec6 d;
  const double da = p.gamma_a * (2.0 * p.n_a + 1.0);
  const double dm = p.gamma_m * (2.0 * p.n_m + 1.0);
  const double db = p.gamma_b * (2.0 * p.n_b + 1.0);
  d << da, da, dm, dm, db, db;
  return d.asDiagonal();
}

MatrixPair build_matrices(const SystemParams& params) {
  params.validate();
  return {build_drift(params), build_diffusion(params)};
}

}  // namespace magnomech
