#include "magnomech/check.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "magnomech/dynamics.hpp"
#include "magnomech/errors.hpp"
#include "magnomech/evaluate.hpp"
#include "magnomech/thermo.hpp"

namespace magnomech {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

CheckResult bound(std::string name, double value, double limit) {
  return {std::move(name), value <= limit, fmt(value) + " <= " + fmt(limit)};
}

}  // namespace

std::vector<CheckResult> run_oracle_battery(const SystemParams& params) {
  std::vector<CheckResult> out;
  const MatrixPair m = build_matrices(params);
  const StabilityReport st = analyze_stability(m.drift);
  const double d_max = m.diffusion.cwiseAbs().maxCoeff();

  {
    CheckResult c{"hurwitz_matches_spectrum", true, ""};
    if (std::abs(st.spectral_abscissa) <= kMarginalWindow) {
      c.detail = "inside the marginal window, skipped";
    } else {
      c.passed = st.hurwitz_verdict() == (st.spectral_abscissa < 0.0);
      c.detail = "abscissa " + fmt(st.spectral_abscissa) + ", Routh-Hurwitz " +
                 std::string(to_string(st.hurwitz));
    }
    out.push_back(c);
  }

  if (st.classification() != StabilityClass::Stable) {
    CheckResult c{"integration_fails_when_unstable", false, ""};
    try {
      steady_state_by_integration(m.drift, m.diffusion, 1e-10, {.max_steps = 200'000});
      c.detail = "integration converged although the drift is not stable";
    } catch (const ConvergenceError& e) {
      c.passed = !st.hurwitz_verdict();
      c.detail = e.what();
    }
    out.push_back(c);
    return out;
  }

  const SteadyStateReport r = evaluate_point(params);
  const CovarianceMatrix& v = *r.covariance;
  out.push_back(bound("lyapunov_residual", r.lyapunov_residual, 1e-10 * std::max(1.0, d_max)));

  try {
    const CovarianceMatrix v_ode = steady_state_by_integration(m.drift, m.diffusion, 1e-10);
    out.push_back(bound("ode_matches_lyapunov",
                        (v_ode.matrix() - v.matrix()).cwiseAbs().maxCoeff(), 1e-6));
  } catch (const ConvergenceError& e) {
    out.push_back({"ode_matches_lyapunov", false, e.what()});
  }

  const double nu_min = *std::min_element(r.nu.begin(), r.nu.end());
  out.push_back({"symplectic_physicality", nu_min >= 0.5 - 1e-9, "min nu " + fmt(nu_min)});
  out.push_back({"entropy_production_nonnegative", r.pi_total >= -1e-9, "pi_total " + fmt(r.pi_total)});
  out.push_back({"mutual_information_nonnegative", r.mutual_info >= -1e-9,
                 "mutual_info " + fmt(r.mutual_info)});

  if (params.drift_convention == DriftConvention::Consistent) {
    out.push_back(bound("trace_matches_sum_form", std::abs(r.pi_trace - r.pi_total),
                        1e-8 * std::max(1.0, r.pi_total)));
  } else {
    out.push_back({"trace_matches_sum_form", true,
                   "not asserted for the verbatim drift; trace " + fmt(r.pi_trace) + " vs sum " +
                       fmt(r.pi_total) + ", A_irr off-diagonal " +
                       fmt(r.irreversible_offdiagonal)});
  }

  // Relaxation from the vacuum: entropy production stays non-negative and
  // the Wigner entropy rate integrates (Simpson, per double step) to the
  // change of S(t).
  const double dt = max_stable_step(m.drift);
  const auto traj = integrate_covariance(m.drift, m.diffusion, CovarianceMatrix::vacuum(), dt,
                                         2000.0 * dt);
  double pi_min = traj.front().pi;
  double fd_err = 0.0;
  double fd_scale = 0.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    pi_min = std::min(pi_min, traj[i].pi);
    const double h = 0.5 * (traj[i + 1].time - traj[i - 1].time);
    const double simpson = h / 3.0 * (traj[i - 1].ds_dt + 4.0 * traj[i].ds_dt + traj[i + 1].ds_dt);
    const double change = traj[i + 1].entropy - traj[i - 1].entropy;
    fd_err = std::max(fd_err, std::abs(change - simpson) / (2.0 * h));
    fd_scale = std::max(fd_scale, std::abs(traj[i].ds_dt));
  }
  out.push_back({"trajectory_entropy_production_nonnegative", pi_min >= -1e-9, "min pi " + fmt(pi_min)});
  out.push_back(bound("entropy_rate_integrates_to_entropy_change", fd_err,
                      1e-5 * std::max(1.0, fd_scale)));

  const auto stationary = integrate_covariance(m.drift, m.diffusion, v, dt, 10.0);
  const TrajectoryPoint& last = stationary.back();
  out.push_back(bound("stationary_budget", std::abs(last.phi - last.pi), 1e-6 * std::max(1.0, last.pi)));
  return out;
}

}  // namespace magnomech
