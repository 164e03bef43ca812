#include "magnomech/dynamics.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Cholesky>

#include "magnomech/errors.hpp"
#include "magnomech/thermo.hpp"

namespace magnomech {

namespace {

constexpr double kStepFactor = 0.1;

Mat6 rk4_step(const Mat6& a, const Mat6& d, const Mat6& v, double dt) {
  const Mat6 k1 = covariance_rhs(a, d, v);
  const Mat6 k2 = covariance_rhs(a, d, v + 0.5 * dt * k1);
  const Mat6 k3 = covariance_rhs(a, d, v + 0.5 * dt * k2);
  const Mat6 k4 = covariance_rhs(a, d, v + dt * k3);
  const Mat6 next = v + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return 0.5 * (next + next.transpose());
}

TrajectoryPoint make_point(double t, const Mat6& v, const Mat6& a, const Mat6& d,
                           const DriftSplit& split) {
  TrajectoryPoint p;
  p.time = t;
  p.v = CovarianceMatrix(v);
  p.entropy = wigner_entropy(p.v);
  p.ds_dt = wigner_entropy_rate(p.v, covariance_rhs(a, d, p.v.matrix()));
  p.pi = entropy_production_trace(p.v, split, d);
  p.phi = entropy_flux(p.pi, p.ds_dt);
  return p;
}

}  // namespace

Mat6 covariance_rhs(const Mat6& a, const Mat6& d, const Mat6& v) {
  const Mat6 r = a * v + v * a.transpose() + d;
  return 0.5 * (r + r.transpose());
}

double max_stable_step(const Mat6& a) {
  const double scale = a.cwiseAbs().maxCoeff();
  return scale > 0.0 ? kStepFactor / scale : kStepFactor;
}

std::vector<TrajectoryPoint> integrate_covariance(const Mat6& a, const Mat6& d,
                                                  const CovarianceMatrix& v0, double dt,
                                                  double t_end, IntegrationOptions options) {
  if (!(dt > 0.0)) throw DomainError("integration step must be positive");
  if (dt > max_stable_step(a) * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "integration step " << dt << " exceeds the stability bound " << max_stable_step(a);
    throw DomainError(os.str());
  }
  if (!(t_end >= 0.0)) throw DomainError("t_end must be non-negative");
  if (options.store_every == 0) options.store_every = 1;

  const DriftSplit split = time_reversal_split(a);
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));

  std::vector<TrajectoryPoint> out;
  out.reserve(steps / options.store_every + 2);
  Mat6 v = v0.matrix();
  out.push_back(make_point(0.0, v, a, d, split));

  double t = 0.0;
  for (std::size_t n = 1; n <= steps; ++n) {
    const double h = (n == steps) ? t_end - t : dt;
    v = rk4_step(a, d, v, h);
    t = (n == steps) ? t_end : static_cast<double>(n) * dt;

    Eigen::LLT<Mat6> llt(v);
    if (llt.info() != Eigen::Success || !v.allFinite()) {
      std::ostringstream os;
      os << "covariance lost positive definiteness at t = " << t;
      throw DivergenceError(os.str());
    }
    if (n % options.store_every == 0 || n == steps) out.push_back(make_point(t, v, a, d, split));
  }
  return out;
}

CovarianceMatrix steady_state_by_integration(const Mat6& a, const Mat6& d, double tol,
                                             SteadyStateOptions options) {
  if (!(tol > 0.0)) throw DomainError("steady-state tolerance must be positive");
  const double dt = options.dt > 0.0 ? options.dt : max_stable_step(a);
  const double target = tol * d.cwiseAbs().maxCoeff();

  auto fail = [&](const std::string& why, std::size_t steps) {
    std::ostringstream os;
    os << "covariance integration did not converge after " << steps << " steps (" << why
       << "); spectral abscissa " << spectral_abscissa(a);
    throw ConvergenceError(os.str());
  };

  Mat6 v = CovarianceMatrix::vacuum().matrix();
  for (std::size_t n = 0; n < options.max_steps; ++n) {
    const Mat6 rate = covariance_rhs(a, d, v);
    if (rate.cwiseAbs().maxCoeff() < target) return CovarianceMatrix(v);
    v = rk4_step(a, d, v, dt);
    if (!v.allFinite() || v.cwiseAbs().maxCoeff() > 1e15) fail("covariance blew up", n + 1);
  }
  fail("step budget exhausted", options.max_steps);
  return {};
}

}  // namespace magnomech
