// smallmat.hpp: dense 6x6 kernels: steady-state Lyapunov solve, stability
// tests (eigenvalue route and characteristic-polynomial route) and the
// symplectic spectrum of a covariance matrix.

#pragma once

#include <array>
#include <span>
#include <string_view>

#include "magnomech/model.hpp"

namespace magnomech {

// Symmetric second-moment matrix of the six quadratures, vacuum variance 1/2.
// The stored matrix is always exactly symmetric.
class CovarianceMatrix {
public:
  CovarianceMatrix() : v_(Mat6::Identity() * 0.5) {}
  explicit CovarianceMatrix(const Mat6& v) : v_(0.5 * (v + v.transpose())) {}

  static CovarianceMatrix vacuum() { return CovarianceMatrix(); }

  const Mat6& matrix() const noexcept { return v_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return v_(i, j); }

private:
  Mat6 v_;
};

// |Re lambda| at or below this is treated as marginal.
inline constexpr double kMarginalWindow = 1e-9;

// Solves A V + V A^T + D = 0 through the 36x36 Kronecker system
// (I (x) A + A (x) I) vec(V) = -vec(D). Throws InstabilityError if A has an
// eigenvalue with positive real part and MarginalStabilityError inside the
// marginal window or when the Kronecker system is numerically singular.
CovarianceMatrix lyapunov_solve(const Mat6& a, const Mat6& d);

// max_ij |A V + V A^T + D|
double lyapunov_residual(const Mat6& a, const Mat6& d, const Mat6& v);

double spectral_abscissa(const Mat6& a);

// Ascending coefficients c0..c6 of det(lambda I - A); c6 = 1.
using CharPoly = std::array<double, 7>;
CharPoly char_poly(const Mat6& a);

enum class HurwitzVerdict { Stable, Unstable, Marginal };
std::string_view to_string(HurwitzVerdict verdict);

// Routh array test on ascending coefficients with a positive leading term.
// A (numerically) zero first-column pivot, or a zero coefficient, yields
// Marginal.
HurwitzVerdict routh_hurwitz(std::span<const double> coeffs);
inline bool routh_hurwitz_stable(std::span<const double> coeffs) {
  return routh_hurwitz(coeffs) == HurwitzVerdict::Stable;
}

enum class StabilityClass { Stable, Marginal, Unstable };
std::string_view to_string(StabilityClass c);

struct StabilityReport {
  double spectral_abscissa{0.0};
  HurwitzVerdict hurwitz{HurwitzVerdict::Marginal};
  CharPoly char_poly_coeffs{};

  bool hurwitz_verdict() const { return hurwitz == HurwitzVerdict::Stable; }
  // Classification from the spectral abscissa and the marginal window.
  StabilityClass classification() const;
};

StabilityReport analyze_stability(const Mat6& a);

// Symplectic eigenvalues nu_1 >= nu_2 >= nu_3 > 0. Throws DomainError if V is
// not positive definite.
std::array<double, 3> symplectic_eigenvalues(const CovarianceMatrix& v);

// Block-diagonal symplectic form, ((0, 1), (-1, 0)) per mode.
Mat6 symplectic_form();

}  // namespace magnomech
