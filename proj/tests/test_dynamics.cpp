#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "magnomech/dynamics.hpp"
#include "magnomech/errors.hpp"
#include "magnomech/model.hpp"
#include "magnomech/smallmat.hpp"
#include "magnomech/thermo.hpp"

using namespace magnomech;

namespace {

SystemParams fig2a_point(double g_am, double delta_m) {
  SystemParams p;
  p.delta_a = 1.0;
  p.delta_m = delta_m;
  p.g_am = g_am;
  p.g_mb_eff = 0.1;
  p.gamma_a = 0.1;
  p.gamma_m = 0.5;
  p.gamma_b = 0.01;
  p.n_b = 10.0;
  return p;
}

// V(t) = V_inf + e^{At} (V0 - V_inf) e^{A^T t}
Mat6 exact_covariance(const Mat6& a, const Mat6& v_inf, const Mat6& v0, double t) {
  const Mat6 e = (a * t).exp();
  return v_inf + e * (v0 - v_inf) * e.transpose();
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("covariance right-hand side") {
  const Mat6 a = -0.5 * Mat6::Identity();
  const Mat6 d = 2.0 * Mat6::Identity();
  CHECK((covariance_rhs(a, d, Mat6::Identity()) - Mat6::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((covariance_rhs(a, d, 2.0 * Mat6::Identity())).cwiseAbs().maxCoeff() == 0.0);

  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  Mat6 x, y;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      x(i, j) = n(rng);
      y(i, j) = n(rng);
    }
  const Mat6 v = y * y.transpose();
  const Mat6 r = covariance_rhs(x, Mat6::Identity(), v);
  CHECK((r - r.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((r - (x * v + v * x.transpose() + Mat6::Identity())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("step bound") {
  const Mat6 a = build_drift(fig2a_point(2.0, -3.0));
  CHECK(max_stable_step(a) == doctest::Approx(0.1 / 3.0));
  CHECK_THROWS_AS(integrate_covariance(a, Mat6::Identity(), CovarianceMatrix::vacuum(), 0.04, 1.0),
                  DomainError);
  CHECK_THROWS_AS(integrate_covariance(a, Mat6::Identity(), CovarianceMatrix::vacuum(), 0.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(integrate_covariance(a, Mat6::Identity(), CovarianceMatrix::vacuum(), -0.01, 1.0),
                  DomainError);
}

TEST_CASE("trajectory bookkeeping") {
  const MatrixPair m = build_matrices(fig2a_point(1.0, 1.0));
  const double dt = 0.03;
  const auto traj = integrate_covariance(m.drift, m.diffusion, CovarianceMatrix::vacuum(), dt, 1.0,
                                         {.store_every = 5});
  CHECK(traj.front().time == 0.0);
  CHECK(traj.back().time == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 1; i < traj.size(); ++i) CHECK(traj[i].time > traj[i - 1].time);
  // 34 steps with a shortened last one; every 5th kept plus the final point
  CHECK(traj.size() == 1 + 6 + 1);
  for (const auto& pt : traj) CHECK(pt.phi == doctest::Approx(pt.pi - pt.ds_dt).epsilon(1e-14));
}

TEST_CASE("stationary covariance is a fixed point") {
  const MatrixPair m = build_matrices(fig2a_point(1.0, 1.0));
  const CovarianceMatrix v = lyapunov_solve(m.drift, m.diffusion);
  const double dt = max_stable_step(m.drift);
  const auto traj = integrate_covariance(m.drift, m.diffusion, v, dt, 100.0, {.store_every = 100});
  for (const auto& pt : traj) {
    CHECK((pt.v.matrix() - v.matrix()).cwiseAbs().maxCoeff() <= 1e-8);
    // at stationarity dS/dt = 0 and the flux balances production
    CHECK(std::abs(pt.ds_dt) <= 1e-9);
    CHECK(std::abs(pt.phi - pt.pi) <= 1e-9);
  }
}

TEST_CASE("decoupled mode relaxes monotonically") {
  SystemParams p;
  p.n_a = 5.0;
  const MatrixPair m = build_matrices(p);
  const auto traj = integrate_covariance(m.drift, m.diffusion, CovarianceMatrix::vacuum(), 0.01,
                                         20.0);
  for (std::size_t i = 1; i < traj.size(); ++i) {
    CHECK(traj[i].v(0, 0) >= traj[i - 1].v(0, 0));
    CHECK(traj[i].v(0, 0) <= 5.5 + 1e-12);
  }
  // x(t) = 5.5 - 5 e^{-2 t}
  CHECK(traj.back().v(0, 0) == doctest::Approx(5.5 - 5.0 * std::exp(-40.0)).epsilon(1e-10));
}

TEST_CASE("RK4 converges at fourth order") {
  const MatrixPair m = build_matrices(fig2a_point(1.0, 1.0));
  const Mat6 v_inf = lyapunov_solve(m.drift, m.diffusion).matrix();
  const Mat6 v0 = CovarianceMatrix::vacuum().matrix();
  const double t_end = 5.0;
  const Mat6 exact = exact_covariance(m.drift, v_inf, v0, t_end);
  auto error = [&](double dt) {
    const auto traj = integrate_covariance(m.drift, m.diffusion, CovarianceMatrix(v0), dt, t_end,
                                           {.store_every = 1'000'000});
    return (traj.back().v.matrix() - exact).cwiseAbs().maxCoeff();
  };
  const double e1 = error(0.05);
  const double e2 = error(0.025);
  CHECK(e1 < 1e-5);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("steady state by integration") {
  SUBCASE("matches the Lyapunov solve") {
    for (double g_am : {0.0, 1.0, 2.0}) {
      const MatrixPair m = build_matrices(fig2a_point(g_am, 0.5));
      const CovarianceMatrix v = lyapunov_solve(m.drift, m.diffusion);
      const CovarianceMatrix v_ode = steady_state_by_integration(m.drift, m.diffusion, 1e-10);
      CHECK((v_ode.matrix() - v.matrix()).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
  SUBCASE("unstable drift fails to converge") {
    Mat6 a = -Mat6::Identity();
    a(0, 0) = 0.05;
    CHECK_THROWS_AS(steady_state_by_integration(a, Mat6::Identity(), 1e-10, {.max_steps = 20'000}),
                    ConvergenceError);
  }
  SUBCASE("marginal drift exhausts the budget") {
    Mat6 a = -Mat6::Identity();
    a.block<2, 2>(0, 0) << 0.0, 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(steady_state_by_integration(a, Mat6::Identity(), 1e-10, {.max_steps = 5'000}),
                    ConvergenceError);
  }
}

TEST_CASE("entropy budget along relaxation") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> det(-3.0, 3.0), g(0.0, 2.0), nb(0.0, 100.0);
  for (int trial = 0; trial < 10; ++trial) {
    SystemParams p = fig2a_point(g(rng), det(rng));
    p.n_b = nb(rng);
    const MatrixPair m = build_matrices(p);
    if (spectral_abscissa(m.drift) > -1e-6) continue;
    const double dt = max_stable_step(m.drift);
    const auto traj = integrate_covariance(m.drift, m.diffusion, CovarianceMatrix::vacuum(), dt,
                                           30.0, {.store_every = 10});
    for (const auto& pt : traj) {
      CHECK(pt.pi >= -1e-9);
      CHECK(pt.entropy == doctest::Approx(wigner_entropy(pt.v)).epsilon(1e-14));
    }
    // stored pi is the trace form at the stored V
    const auto& last = traj.back();
    CHECK(last.pi == doctest::Approx(entropy_production_trace(last.v, time_reversal_split(m.drift),
                                                              m.diffusion))
                         .epsilon(1e-14));
  }
}

}  // TEST_SUITE
