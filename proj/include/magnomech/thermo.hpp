// thermo.hpp: entropy balance of a Gaussian state under linear dynamics.
//
// With drift A, diffusion D and covariance V (vacuum variance 1/2):
//   dS/dt = Pi - Phi
// where S is the Wigner entropy, Pi the entropy production rate and Phi the
// entropy flux into the baths. The drift splits under time reversal
// E = diag(1, -1, 1, -1, 1, -1) into an even (irreversible) and an odd
// (reversible) part; only the even part enters Pi.

#pragma once

#include "magnomech/model.hpp"
#include "magnomech/smallmat.hpp"

namespace magnomech {

struct DriftSplit {
  Mat6 a_irr;  // (A + E A E^T) / 2
  Mat6 a_rev;  // (A - E A E^T) / 2
};

Vec6 time_reversal_signs();
DriftSplit time_reversal_split(const Mat6& a);

// Largest |off-diagonal| entry of a_irr. Zero for the consistent drift; non
// zero for the verbatim drift whenever g_mb_eff != 0.
double irreversible_offdiagonal(const DriftSplit& split);

enum class EntropyScope {
  ThreeMode,     // photon + magnon + phonon
  MagnonPhonon,  // magnon and phonon terms only, magnon bath at zero occupation
};

// Stationary sum form sum_i 2 gamma_i ((V_xx + V_yy) / (2 N_i + 1) - 1).
// The MagnonPhonon scope uses 2 gamma_m (V33 + V44 - 1) for the magnon term.
double entropy_production_stationary(const CovarianceMatrix& v, const SystemParams& params,
                                     EntropyScope scope);

// General Gaussian trace form, valid off stationarity:
//   Pi = tr(V^-1 D)/2 + 2 tr(A_irr) + 2 tr(A_irr^T D^-1 A_irr V).
// Throws DomainError unless D and V are positive definite.
double entropy_production_trace(const CovarianceMatrix& v, const DriftSplit& split, const Mat6& d);

// Phi = Pi - dS/dt.
inline double entropy_flux(double pi, double ds_dt) { return pi - ds_dt; }

// S = ln det(V)/2 + 3 ln(2 pi e), the Shannon entropy of the Wigner function.
double wigner_entropy(const CovarianceMatrix& v);

// dS/dt = tr(V^-1 dV/dt) / 2.
double wigner_entropy_rate(const CovarianceMatrix& v, const Mat6& v_dot);

// Magnon-phonon mutual information in nats, from the {3,4} and {5,6} blocks.
double mutual_information(const CovarianceMatrix& v);

}  // namespace magnomech
