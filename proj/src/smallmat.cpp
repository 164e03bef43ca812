#include "magnomech/smallmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "magnomech/errors.hpp"

namespace magnomech {

namespace {

using Kron = Eigen::Matrix<double, 36, 36>;
using Vec36 = Eigen::Matrix<double, 36, 1>;

// Column-major vec: vec(A V + V A^T) = (I (x) A + A (x) I) vec(V).
Kron lyapunov_operator(const Mat6& a) {
  Kron k = Kron::Zero();
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 6; ++i) {
      const int row = i + 6 * j;
      for (int m = 0; m < 6; ++m) {
        k(row, m + 6 * j) += a(i, m);  // (A V)_ij
        k(row, i + 6 * m) += a(j, m);  // (V A^T)_ij
      }
    }
  }
  return k;
}

}  // namespace

CovarianceMatrix lyapunov_solve(const Mat6& a, const Mat6& d) {
  const double abscissa = spectral_abscissa(a);
  if (abscissa > kMarginalWindow) {
    std::ostringstream os;
    os << "drift matrix is unstable (spectral abscissa " << abscissa << ")";
    throw InstabilityError(os.str(), abscissa);
  }
  if (abscissa >= -kMarginalWindow) {
    std::ostringstream os;
    os << "drift matrix is marginally stable (spectral abscissa " << abscissa << ")";
    throw MarginalStabilityError(os.str(), abscissa);
  }

  const Kron k = lyapunov_operator(a);
  Eigen::PartialPivLU<Kron> lu(k);
  if (!(lu.rcond() > 1e3 * std::numeric_limits<double>::epsilon())) {
    std::ostringstream os;
    os << "Lyapunov system is singular (rcond " << lu.rcond() << ")";
    throw MarginalStabilityError(os.str(), abscissa);
  }

  const Vec36 rhs = -Eigen::Map<const Vec36>(d.data());
  Vec36 x = lu.solve(rhs);
  // one step of iterative refinement
  x += lu.solve(rhs - k * x);

  const Mat6 v = Eigen::Map<const Mat6>(x.data());
  return CovarianceMatrix(v);
}

double lyapunov_residual(const Mat6& a, const Mat6& d, const Mat6& v) {
  return (a * v + v * a.transpose() + d).cwiseAbs().maxCoeff();
}

double spectral_abscissa(const Mat6& a) {
  Eigen::EigenSolver<Mat6> solver;
  solver.compute(a, false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "nonsymmetric eigenvalue iteration did not converge (max iterations "
       << solver.getMaxIterations() << " per eigenvalue, matrix norm " << a.norm() << ")";
    throw NumericError(os.str());
  }
  return solver.eigenvalues().real().maxCoeff();
}

CharPoly char_poly(const Mat6& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  constexpr int n = 6;
  CharPoly c{};
  c[n] = 1.0;
  Mat6 m = Mat6::Zero();
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * Mat6::Identity();
    c[n - k] = -(a * m).trace() / k;
  }
  return c;
}

std::string_view to_string(HurwitzVerdict verdict) {
  switch (verdict) {
    case HurwitzVerdict::Stable:
      return "stable";
    case HurwitzVerdict::Unstable:
      return "unstable";
    case HurwitzVerdict::Marginal:
      return "marginal";
  }
  return "unknown";
}

HurwitzVerdict routh_hurwitz(std::span<const double> coeffs) {
  // drop trailing (leading-order) zeros
  std::size_t size = coeffs.size();
  while (size > 0 && coeffs[size - 1] == 0.0) --size;
  if (size == 0) return HurwitzVerdict::Marginal;
  const int degree = static_cast<int>(size) - 1;
  if (degree == 0) return HurwitzVerdict::Stable;

  // Normalize to a positive leading coefficient.
  const double lead = coeffs[size - 1];
  std::vector<double> desc(size);
  for (std::size_t i = 0; i < size; ++i) desc[i] = coeffs[size - 1 - i] / lead;

  // Necessary condition: all coefficients strictly positive.
  const double coeff_scale = std::abs(*std::max_element(
      desc.begin(), desc.end(), [](double x, double y) { return std::abs(x) < std::abs(y); }));
  for (double c : desc) {
    if (c < 0.0 && std::abs(c) > 1e-14 * coeff_scale) return HurwitzVerdict::Unstable;
  }
  for (double c : desc) {
    if (std::abs(c) <= 1e-14 * coeff_scale) return HurwitzVerdict::Marginal;
  }

  const int width = degree / 2 + 1;
  std::vector<std::vector<double>> row(degree + 1, std::vector<double>(width + 1, 0.0));
  // magnitude estimate of each entry, for the zero-pivot test
  std::vector<std::vector<double>> mag(degree + 1, std::vector<double>(width + 1, 0.0));
  for (int j = 0; j < width; ++j) {
    if (2 * j < static_cast<int>(size)) row[0][j] = desc[2 * j];
    if (2 * j + 1 < static_cast<int>(size)) row[1][j] = desc[2 * j + 1];
    mag[0][j] = std::abs(row[0][j]);
    mag[1][j] = std::abs(row[1][j]);
  }

  constexpr double pivot_tol = 1e-11;
  for (int i = 0; i <= degree; ++i) {
    if (i >= 2) {
      const double p = row[i - 1][0];
      for (int j = 0; j < width; ++j) {
        const double t1 = p * row[i - 2][j + 1];
        const double t2 = row[i - 2][0] * row[i - 1][j + 1];
        row[i][j] = (t1 - t2) / p;
        const double m1 = mag[i - 1][0] * mag[i - 2][j + 1];
        const double m2 = mag[i - 2][0] * mag[i - 1][j + 1];
        mag[i][j] = std::max(std::abs(row[i][j]), (m1 + m2) / std::abs(p));
      }
    }
    const double pivot = row[i][0];
    if (std::abs(pivot) <= pivot_tol * mag[i][0]) return HurwitzVerdict::Marginal;
    if (pivot < 0.0) return HurwitzVerdict::Unstable;
  }
  return HurwitzVerdict::Stable;
}

std::string_view to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable:
      return "stable";
    case StabilityClass::Marginal:
      return "marginal";
    case StabilityClass::Unstable:
      return "unstable";
  }
  return "unknown";
}

StabilityClass StabilityReport::classification() const {
  if (spectral_abscissa < -kMarginalWindow) return StabilityClass::Stable;
  if (spectral_abscissa > kMarginalWindow) return StabilityClass::Unstable;
  return StabilityClass::Marginal;
}

StabilityReport analyze_stability(const Mat6& a) {
  StabilityReport r;
  r.spectral_abscissa = spectral_abscissa(a);
  r.char_poly_coeffs = char_poly(a);
  r.hurwitz = routh_hurwitz(r.char_poly_coeffs);
  return r;
}

Mat6 symplectic_form() {
  Mat6 omega = Mat6::Zero();
  for (int k = 0; k < 3; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

std::array<double, 3> symplectic_eigenvalues(const CovarianceMatrix& cov) {
  const Mat6& v = cov.matrix();
  Eigen::LLT<Mat6> llt(v);
  if (llt.info() != Eigen::Success) {
    throw DomainError("symplectic eigenvalues need a positive-definite covariance matrix");
  }

  // V^{1/2} Omega^T V Omega V^{1/2} is symmetric with eigenvalues nu_k^2,
  // each appearing twice.
  Eigen::SelfAdjointEigenSolver<Mat6> root(v);
  const Mat6 sqrt_v = root.operatorSqrt();
  const Mat6 omega = symplectic_form();
  Mat6 m = sqrt_v * omega.transpose() * v * omega * sqrt_v;
  m = 0.5 * (m + m.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Mat6> eig(m, Eigen::EigenvaluesOnly);
  const Vec6 ev = eig.eigenvalues();  // ascending
  std::array<double, 3> nu{};
  for (int k = 0; k < 3; ++k) {
    const double pair = 0.5 * (ev(4 - 2 * k) + ev(5 - 2 * k));
    nu[k] = std::sqrt(std::max(pair, 0.0));
  }
  return nu;
}

}  // namespace magnomech
