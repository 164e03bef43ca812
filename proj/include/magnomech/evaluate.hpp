// evaluate.hpp: single parameter point: stability, stationary covariance
// and every thermodynamic measure derived from it.

#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "magnomech/model.hpp"
#include "magnomech/smallmat.hpp"
#include "magnomech/thermo.hpp"

namespace magnomech {

enum class GammaTot {
  MagnonPhonon,  // gamma_m + gamma_b
  AllModes,      // gamma_a + gamma_m + gamma_b
};

struct EvaluateOptions {
  GammaTot gamma_tot{GammaTot::MagnonPhonon};
};

double total_damping(const SystemParams& params, GammaTot which);

// Measures are NaN unless `stable`.
struct SteadyStateReport {
  StabilityClass stability{StabilityClass::Unstable};
  bool stable{false};
  double spectral_abscissa{0.0};
  HurwitzVerdict hurwitz{HurwitzVerdict::Marginal};

  double pi_total{0.0};             // three-mode stationary sum
  double pi_mb{0.0};                // magnon + phonon terms
  double pi_trace{0.0};             // general trace form at V
  double phi{0.0};                  // entropy flux
  double mutual_info{0.0};          // nats
  double weak_coupling_ratio{0.0};  // pi_mb / (2 gamma_tot), the small-coupling estimate of mutual_info
  std::array<double, 3> nu{};

  std::optional<CovarianceMatrix> covariance;
  double lyapunov_residual{0.0};
  double irreversible_offdiagonal{0.0};  // non-zero flags a non-diagonal A_irr
};

SteadyStateReport evaluate_point(const SystemParams& params, const EvaluateOptions& options = {});

// Human-readable multi-line summary used by `magnomech point`.
void print_report(std::ostream& os, const SystemParams& params, const SteadyStateReport& report);

}  // namespace magnomech
