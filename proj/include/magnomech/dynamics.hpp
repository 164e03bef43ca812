// dynamics.hpp: time integration of the covariance moment equation
//   dV/dt = A V + V A^T + D
// used as an independent oracle for the Lyapunov solve and to follow the
// entropy budget along a relaxation trajectory.

#pragma once

#include <cstddef>
#include <vector>

#include "magnomech/model.hpp"
#include "magnomech/smallmat.hpp"

namespace magnomech {

struct TrajectoryPoint {
  double time{0.0};
  CovarianceMatrix v;
  double entropy{0.0};
  double pi{0.0};
  double phi{0.0};
  double ds_dt{0.0};
};

// A V + V A^T + D, symmetrized.
Mat6 covariance_rhs(const Mat6& a, const Mat6& d, const Mat6& v);

// Largest step accepted by integrate_covariance for this drift.
double max_stable_step(const Mat6& a);

struct IntegrationOptions {
  std::size_t store_every{1};  // keep every n-th step (the final point is always kept)
};

// Fixed-step classic RK4 from V0 over [0, t_end]. The first stored point is
// V0 at t = 0. Throws DomainError on a bad step size and DivergenceError if
// V stops being positive definite.
std::vector<TrajectoryPoint> integrate_covariance(const Mat6& a, const Mat6& d,
                                                  const CovarianceMatrix& v0, double dt,
                                                  double t_end, IntegrationOptions options = {});

struct SteadyStateOptions {
  std::size_t max_steps{5'000'000};
  double dt{0.0};  // 0 selects max_stable_step(a)
};

// Integrates from the vacuum until max|dV/dt| < tol * max|D|. Throws
// ConvergenceError (with the spectral abscissa in the message) when the step
// budget runs out or V blows up.
CovarianceMatrix steady_state_by_integration(const Mat6& a, const Mat6& d, double tol,
                                             SteadyStateOptions options = {});

}  // namespace magnomech
