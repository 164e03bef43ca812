#include "magnomech/thermo.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "magnomech/errors.hpp"

namespace magnomech {

Vec6 time_reversal_signs() {
  Vec6 e;
  e << 1.0, -1.0, 1.0, -1.0, 1.0, -1.0;
  return e;
}

DriftSplit time_reversal_split(const Mat6& a) {
  const Vec6 e = time_reversal_signs();
  // (E A E^T)_ij = e_i e_j A_ij, so each entry is either even or odd and the
  // split is exact: a_irr + a_rev == A bit for bit.
  DriftSplit s;
  s.a_irr.setZero();
  s.a_rev.setZero();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (e(i) * e(j) > 0.0) {
        s.a_irr(i, j) = a(i, j);
      } else {
        s.a_rev(i, j) = a(i, j);
      }
    }
  }
  return s;
}

double irreversible_offdiagonal(const DriftSplit& split) {
  Mat6 off = split.a_irr;
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff();
}

double entropy_production_stationary(const CovarianceMatrix& v, const SystemParams& p,
                                     EntropyScope scope) {
  auto term = [&](int mode, double gamma, double n) {
    const int x = 2 * mode;
    return 2.0 * gamma * ((v(x, x) + v(x + 1, x + 1)) / (2.0 * n + 1.0) - 1.0);
  };
  const double phonon = term(2, p.gamma_b, p.n_b);
  switch (scope) {
    case EntropyScope::ThreeMode:
      return term(0, p.gamma_a, p.n_a) + term(1, p.gamma_m, p.n_m) + phonon;
    case EntropyScope::MagnonPhonon:
      return term(1, p.gamma_m, 0.0) + phonon;
  }
  return 0.0;
}

double entropy_production_trace(const CovarianceMatrix& cov, const DriftSplit& split,
                                const Mat6& d) {
  Eigen::LLT<Mat6> d_llt(d);
  if (d_llt.info() != Eigen::Success) {
    throw DomainError("entropy production trace form needs a positive-definite diffusion matrix");
  }
  const Mat6& v = cov.matrix();
  Eigen::LLT<Mat6> v_llt(v);
  if (v_llt.info() != Eigen::Success) {
    throw DomainError("entropy production trace form needs a positive-definite covariance");
  }
  const Mat6& a_irr = split.a_irr;
  const double t1 = 0.5 * v_llt.solve(d).trace();
  const double t2 = 2.0 * a_irr.trace();
  const double t3 = 2.0 * (a_irr.transpose() * d_llt.solve(a_irr) * v).trace();
  return t1 + t2 + t3;
}

double wigner_entropy(const CovarianceMatrix& cov) {
  Eigen::LLT<Mat6> llt(cov.matrix());
  if (llt.info() != Eigen::Success) {
    throw DomainError("Wigner entropy needs a positive-definite covariance matrix");
  }
  const Mat6 l = llt.matrixL();
  const double log_det = 2.0 * l.diagonal().array().log().sum();
  return 0.5 * log_det + 3.0 * std::log(2.0 * std::numbers::pi * std::numbers::e);
}

double wigner_entropy_rate(const CovarianceMatrix& cov, const Mat6& v_dot) {
  Eigen::LLT<Mat6> llt(cov.matrix());
  if (llt.info() != Eigen::Success) {
    throw DomainError("Wigner entropy rate needs a positive-definite covariance matrix");
  }
  return 0.5 * llt.solve(v_dot).trace();
}

double mutual_information(const CovarianceMatrix& cov) {
  const Mat6& v = cov.matrix();
  const Eigen::Matrix2d magnon = v.block<2, 2>(2, 2);
  const Eigen::Matrix2d phonon = v.block<2, 2>(4, 4);
  const Eigen::Matrix4d joint = v.block<4, 4>(2, 2);
  const double det_m = magnon.determinant();
  const double det_b = phonon.determinant();
  const double det_mb = joint.determinant();
  if (!(det_m > 0.0) || !(det_b > 0.0) || !(det_mb > 0.0)) {
    throw DomainError("mutual information needs positive block determinants");
  }
  return 0.5 * (std::log(det_m) + std::log(det_b) - std::log(det_mb));
}

}  // namespace magnomech
