#include "magnomech/evaluate.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "magnomech/dynamics.hpp"
#include "magnomech/errors.hpp"

namespace magnomech {

double total_damping(const SystemParams& p, GammaTot which) {
  switch (which) {
    case GammaTot::MagnonPhonon:
      return p.gamma_m + p.gamma_b;
    case GammaTot::AllModes:
      return p.gamma_a + p.gamma_m + p.gamma_b;
  }
  return p.gamma_m + p.gamma_b;
}

SteadyStateReport evaluate_point(const SystemParams& params, const EvaluateOptions& options) {
  const MatrixPair m = build_matrices(params);
  const StabilityReport stability = analyze_stability(m.drift);
  const DriftSplit split = time_reversal_split(m.drift);

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  SteadyStateReport r;
  r.spectral_abscissa = stability.spectral_abscissa;
  r.hurwitz = stability.hurwitz;
  r.stability = stability.classification();
  r.irreversible_offdiagonal = irreversible_offdiagonal(split);
  r.pi_total = r.pi_mb = r.pi_trace = r.phi = r.mutual_info = r.weak_coupling_ratio = nan;
  r.nu = {nan, nan, nan};
  r.lyapunov_residual = nan;
  if (r.stability != StabilityClass::Stable) return r;

  CovarianceMatrix v;
  try {
    v = lyapunov_solve(m.drift, m.diffusion);
  } catch (const MarginalStabilityError&) {
    r.stability = StabilityClass::Marginal;
    return r;
  }
  r.stable = true;
  r.lyapunov_residual = lyapunov_residual(m.drift, m.diffusion, v.matrix());
  r.pi_total = entropy_production_stationary(v, params, EntropyScope::ThreeMode);
  r.pi_mb = entropy_production_stationary(v, params, EntropyScope::MagnonPhonon);
  r.pi_trace = entropy_production_trace(v, split, m.diffusion);
  const double ds_dt = wigner_entropy_rate(v, covariance_rhs(m.drift, m.diffusion, v.matrix()));
  r.phi = entropy_flux(r.pi_trace, ds_dt);
  r.mutual_info = mutual_information(v);
  r.weak_coupling_ratio = r.pi_mb / (2.0 * total_damping(params, options.gamma_tot));
  r.nu = symplectic_eigenvalues(v);
  r.covariance = v;
  return r;
}

void print_report(std::ostream& os, const SystemParams& p, const SteadyStateReport& r) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(10);
  os << "parameters (units of omega_b):\n"
     << "  delta_a = " << p.delta_a << "  delta_m = " << p.delta_m << "  omega_b = " << p.omega_b
     << "\n"
     << "  g_am = " << p.g_am << "  g_mb_eff = " << p.g_mb_eff << "\n"
     << "  gamma_a = " << p.gamma_a << "  gamma_m = " << p.gamma_m << "  gamma_b = " << p.gamma_b
     << "\n"
     << "  n_a = " << p.n_a << "  n_m = " << p.n_m << "  n_b = " << p.n_b << "\n"
     << "  drift_convention = " << to_string(p.drift_convention) << "\n";
  os << "stability: " << to_string(r.stability) << " (spectral abscissa " << r.spectral_abscissa
     << ", Routh-Hurwitz " << to_string(r.hurwitz) << ")\n";
  if (r.irreversible_offdiagonal > 0.0) {
    os << "note: irreversible drift part is not diagonal (max off-diagonal "
       << r.irreversible_offdiagonal << ")\n";
  }
  if (!r.stable) {
    os.flags(flags);
    os.precision(prec);
    return;
  }
  os << std::scientific << std::setprecision(10);
  os << "entropy production (three-mode sum)   " << r.pi_total << "\n"
     << "entropy production (magnon + phonon)  " << r.pi_mb << "\n"
     << "entropy production (trace form)       " << r.pi_trace << "\n"
     << "entropy flux                          " << r.phi << "\n"
     << "mutual information [nats]             " << r.mutual_info << "\n"
     << "weak-coupling estimate pi_mb/(2 g_tot) " << r.weak_coupling_ratio << "\n"
     << "symplectic eigenvalues                " << r.nu[0] << " " << r.nu[1] << " " << r.nu[2]
     << "\n"
     << "Lyapunov residual                     " << r.lyapunov_residual << "\n";
  os << "stationary covariance:\n";
  const Mat6& v = r.covariance->matrix();
  for (int i = 0; i < 6; ++i) {
    os << " ";
    for (int j = 0; j < 6; ++j) os << " " << std::setw(18) << v(i, j);
    os << "\n";
  }
  os.flags(flags);
  os.precision(prec);
}

}  // namespace magnomech
