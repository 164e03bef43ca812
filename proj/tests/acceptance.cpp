// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance is pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "magnomech/dynamics.hpp"
#include "magnomech/evaluate.hpp"
#include "magnomech/model.hpp"
#include "magnomech/smallmat.hpp"
#include "magnomech/sweep.hpp"
#include "magnomech/thermo.hpp"

using namespace magnomech;

namespace {

constexpr double kEquilibriumTol = 1e-10;
constexpr double kEquilibriumRuntime = 1.0;
constexpr int kOraclePoints = 50;
constexpr double kOdeTol = 1e-10;  // steady_state_by_integration stopping tolerance
constexpr double kOdeMatch = 1e-6;
constexpr double kResidualTol = 1e-10;
constexpr double kOracleRuntime = 30.0;
constexpr double kCrossAgreementTol = 1e-8;
constexpr double kCrossAgreementRuntime = 60.0;
constexpr double kSaturationLimit = 0.20;  // (max - min) / max over gamma_a in [3, 5]
constexpr double kCorrelationFloor = 0.9;
constexpr double kCorrelationWindow = 2.0;
constexpr double kWeakCouplingTol = 0.2;
constexpr double kPhysicalityTol = 1e-9;
constexpr int kRandomMatrices = 1000;
constexpr double kRandomMargin = 1e-6;

struct Outcome {
  bool passed{false};
  std::string detail;
};

std::string num(double v, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

const SweepTable& grid(const std::string& name) {
  static std::map<std::string, SweepTable> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_sweep(preset(name))).first;
  return it->second;
}

std::vector<const SweepRow*> curve_rows(const SweepTable& t, double curve_value) {
  std::vector<const SweepRow*> out;
  for (const SweepRow& r : t.rows) {
    if (r.curve_value && *r.curve_value == curve_value) out.push_back(&r);
  }
  return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

Outcome equilibrium_null() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_pi = 0.0, worst_i = 0.0, worst_v = 0.0;
  for (double n_b : {0.0, 10.0, 100.0, 200.0}) {
    SystemParams p = preset("fig2a").base;
    p.g_am = 0.0;
    p.g_mb_eff = 0.0;
    p.n_b = n_b;
    const SteadyStateReport r = evaluate_point(p);
    if (!r.stable) return {false, "equilibrium point reported unstable at n_b = " + num(n_b)};
    Vec6 diag;
    diag << 0.5, 0.5, 0.5, 0.5, n_b + 0.5, n_b + 0.5;
    const Mat6 expected = diag.asDiagonal();
    worst_pi = std::max(worst_pi, std::abs(r.pi_total));
    worst_i = std::max(worst_i, std::abs(r.mutual_info));
    worst_v = std::max(worst_v, (r.covariance->matrix() - expected).cwiseAbs().maxCoeff());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = worst_pi <= kEquilibriumTol && worst_i <= kEquilibriumTol &&
                  worst_v <= kEquilibriumTol && secs < kEquilibriumRuntime;
  return {ok, "max |pi| " + num(worst_pi) + ", max |I| " + num(worst_i) + ", max |V - V_eq| " +
                  num(worst_v) + ", " + num(secs, 3) + " s"};
}

Outcome lyapunov_ode_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> delta_m(-5.0, 5.0), g_am(0.0, 5.0), gamma_a(0.05, 5.0),
      n_b(10.0, 100.0);
  double worst_diff = 0.0, worst_res = 0.0;
  int accepted = 0, rejected = 0;
  while (accepted < kOraclePoints) {
    SystemParams p = preset("fig2a").base;
    p.delta_m = delta_m(rng);
    p.g_am = g_am(rng);
    p.gamma_a = gamma_a(rng);
    p.n_b = n_b(rng);
    const MatrixPair m = build_matrices(p);
    if (spectral_abscissa(m.drift) >= -kMarginalWindow) {
      ++rejected;
      continue;
    }
    const CovarianceMatrix v = lyapunov_solve(m.drift, m.diffusion);
    const CovarianceMatrix v_ode = steady_state_by_integration(m.drift, m.diffusion, kOdeTol);
    worst_diff = std::max(worst_diff, (v_ode.matrix() - v.matrix()).cwiseAbs().maxCoeff());
    worst_res = std::max(worst_res, lyapunov_residual(m.drift, m.diffusion, v.matrix()));
    ++accepted;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = worst_diff <= kOdeMatch && worst_res <= kResidualTol && secs < kOracleRuntime;
  return {ok, std::to_string(accepted) + " points (" + std::to_string(rejected) +
                  " unstable draws skipped), max |V_ode - V_lyap| " + num(worst_diff) +
                  ", max residual " + num(worst_res) + ", " + num(secs, 3) + " s"};
}

Outcome formula_cross_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepTable& t = grid("fig2a");
  double worst = 0.0;
  std::size_t stable = 0;
  for (const SweepRow& r : t.rows) {
    if (!r.report.stable) continue;
    ++stable;
    const double scaled = std::abs(r.report.pi_trace - r.report.pi_total) /
                          std::max(1.0, r.report.pi_total);
    worst = std::max(worst, scaled);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = stable > 0 && worst <= kCrossAgreementTol && secs < kCrossAgreementRuntime;
  return {ok, std::to_string(stable) + "/" + std::to_string(t.rows.size()) +
                  " stable points, max scaled |pi_trace - pi_total| " + num(worst) + ", " +
                  num(secs, 3) + " s"};
}

Outcome peak_locations() {
  const auto rows = curve_rows(grid("fig2a"), 0.0);
  const double step = rows[1]->axis1_value - rows[0]->axis1_value;
  std::vector<std::pair<double, double>> maxima;  // (pi_mb, delta_m)
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    const double y = rows[i]->report.pi_mb;
    if (y > rows[i - 1]->report.pi_mb && y >= rows[i + 1]->report.pi_mb) {
      maxima.emplace_back(y, rows[i]->axis1_value);
    }
  }
  if (maxima.size() < 2) return {false, "fewer than two local maxima"};
  std::sort(maxima.begin(), maxima.end(), std::greater<>());
  const double lo = std::min(maxima[0].second, maxima[1].second);
  const double hi = std::max(maxima[0].second, maxima[1].second);
  const double tol = step * (1.0 + 1e-9);
  const bool ok = std::abs(lo + 1.0) <= tol && std::abs(hi - 1.0) <= tol;
  return {ok, "largest maxima at delta_m = " + num(lo) + " and " + num(hi) + ", grid step " +
                  num(step) + ", offsets " + num(std::abs(lo + 1.0)) + " and " +
                  num(std::abs(hi - 1.0))};
}

Outcome thermal_monotonicity() {
  bool ok = true;
  std::string detail;
  const SweepSpec spec = preset("fig2a");
  for (double g : spec.curve->values) {
    auto max_pi = [&](const std::string& name) {
      double best = -INFINITY;
      for (const SweepRow* r : curve_rows(grid(name), g)) {
        if (r->report.stable) best = std::max(best, r->report.pi_mb);
      }
      return best;
    };
    const double cold = max_pi("fig2a");
    const double hot = max_pi("fig2b");
    ok = ok && hot > cold;
    detail += "g_am " + num(g) + ": " + num(hot) + " > " + num(cold) + "; ";
  }
  return {ok, detail};
}

Outcome saturation() {
  const auto rows = curve_rows(grid("fig3b"), 0.1);
  double lo = INFINITY, hi = -INFINITY;
  std::size_t used = 0;
  for (const SweepRow* r : rows) {
    if (r->axis1_value < 3.0 - 1e-12 || r->axis1_value > 5.0 + 1e-12) continue;
    if (!r->report.stable) return {false, "unstable point at gamma_a = " + num(r->axis1_value)};
    lo = std::min(lo, r->report.pi_mb);
    hi = std::max(hi, r->report.pi_mb);
    ++used;
  }
  const double variation = (hi - lo) / hi;
  return {used > 0 && variation < kSaturationLimit,
          std::to_string(used) + " points, (max - min) / max = " + num(variation) + " < " +
              num(kSaturationLimit)};
}

double window_correlation(const std::string& name) {
  const SweepTable& t = grid(name);
  std::vector<double> info, pi;
  for (const SweepRow& r : t.rows) {
    if (std::abs(r.axis1_value) > kCorrelationWindow + 1e-12 || !r.report.stable) continue;
    info.push_back(r.report.mutual_info);
    pi.push_back(r.report.pi_mb);
  }
  return pearson(info, pi);
}

Outcome correlation_link() {
  const double ra = window_correlation("fig4a");
  const double rc = window_correlation("fig4c");
  const bool similar = ra > kCorrelationFloor;
  const bool lower = rc < ra;
  return {similar && lower, std::string(similar ? "ok" : "FAILED") + " r(fig4a) = " + num(ra, 8) +
                                " > " + num(kCorrelationFloor) + "; " +
                                (lower ? "ok" : "FAILED") + " r(fig4c) = " + num(rc, 8) +
                                " < r(fig4a)"};
}

Outcome weak_coupling() {
  bool ok = true;
  std::string detail;
  for (double n_b : {10.0, 100.0}) {
    SystemParams p = preset("fig4a").base;
    p.g_am = 0.0;
    p.g_mb_eff = 1e-2;
    p.delta_m = 1.0;
    p.n_b = n_b;
    const SteadyStateReport r = evaluate_point(p);
    const double estimate = r.pi_total / (2.0 * (p.gamma_m + p.gamma_b));
    const double rel = std::abs(r.mutual_info - estimate) / r.mutual_info;
    ok = ok && r.stable && rel <= kWeakCouplingTol;
    detail += "n_b " + num(n_b) + ": rel err " + num(rel) + "; ";
  }
  return {ok, detail};
}

Outcome physicality_battery() {
  std::size_t stable = 0, grid_points = 0, hurwitz_checked = 0, violations = 0, mismatches = 0;
  double nu_min = INFINITY, pi_min = INFINITY, i_min = INFINITY;
  for (std::string_view name : preset_names()) {
    for (const SweepRow& r : grid(std::string(name)).rows) {
      ++grid_points;
      const SteadyStateReport& s = r.report;
      if (std::abs(s.spectral_abscissa) > kMarginalWindow) {
        ++hurwitz_checked;
        if ((s.hurwitz == HurwitzVerdict::Stable) != (s.spectral_abscissa < 0.0)) ++mismatches;
      }
      if (!s.stable) continue;
      ++stable;
      const double nu = *std::min_element(s.nu.begin(), s.nu.end());
      nu_min = std::min(nu_min, nu);
      pi_min = std::min(pi_min, s.pi_total);
      i_min = std::min(i_min, s.mutual_info);
      if (nu < 0.5 - kPhysicalityTol || s.pi_total < -kPhysicalityTol ||
          s.mutual_info < -kPhysicalityTol) {
        ++violations;
      }
    }
  }
  std::mt19937_64 rng(777);
  std::normal_distribution<double> entry(0.0, 1.0);
  std::uniform_real_distribution<double> shift(-1.0, 4.0);
  int random_checked = 0, random_mismatch = 0;
  while (random_checked < kRandomMatrices) {
    Mat6 a;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) a(i, j) = entry(rng);
    a -= shift(rng) * Mat6::Identity();
    const double sa = spectral_abscissa(a);
    if (std::abs(sa) < kRandomMargin) continue;
    if (routh_hurwitz_stable(char_poly(a)) != (sa < 0.0)) ++random_mismatch;
    ++random_checked;
  }
  const bool ok = violations == 0 && mismatches == 0 && random_mismatch == 0;
  return {ok, std::to_string(stable) + "/" + std::to_string(grid_points) +
                  " stable grid points, min nu " + num(nu_min, 10) + ", min pi " + num(pi_min) +
                  ", min I " + num(i_min) + ", Hurwitz mismatches " + std::to_string(mismatches) +
                  "/" + std::to_string(hurwitz_checked) + " grid, " +
                  std::to_string(random_mismatch) + "/" + std::to_string(random_checked) +
                  " random"};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "magnomech_acceptance";
  std::filesystem::create_directories(dir);
  std::ostringstream unused;
  auto run = [&](const std::string& file, unsigned threads) {
    SweepSpec spec = preset("fig2a");
    spec.output = (dir / file).string();
    run_sweep_to_csv(spec, unused, {.threads = threads});
    return read_file(dir / file);
  };
  const std::string serial1 = run("serial1.csv", 1);
  const std::string serial2 = run("serial2.csv", 1);
  const std::string parallel = run("parallel.csv", 4);
  std::filesystem::remove_all(dir);
  const bool ok = !serial1.empty() && serial1 == serial2 && serial1 == parallel;
  return {ok, std::to_string(serial1.size()) + " bytes; repeat " +
                  (serial1 == serial2 ? "identical" : "DIFFERS") + ", 4 threads vs serial " +
                  (serial1 == parallel ? "identical" : "DIFFERS")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "equilibrium null", equilibrium_null},
      {2, "Lyapunov-ODE oracle equivalence", lyapunov_ode_equivalence},
      {3, "formula cross-agreement", formula_cross_agreement},
      {4, "peak locations", peak_locations},
      {5, "thermal monotonicity", thermal_monotonicity},
      {6, "saturation", saturation},
      {7, "correlation-irreversibility link", correlation_link},
      {8, "weak-coupling law", weak_coupling},
      {9, "physicality and stability battery", physicality_battery},
      {10, "determinism", determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s [%.0f ms]\n", o.passed ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), ms);
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
