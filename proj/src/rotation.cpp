#include "blochwalk/rotation.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace blochwalk {

WignerRotation::WignerRotation(SpinQuantum j) : j_(j) {
  const int n = j.dim();
  if (n == 1) {
    eigenvectors_ = RealMatrix::Identity(1, 1);
    return;
  }
  // J_x is tridiagonal with zero diagonal and
  // <m+1|J_x|m> = sqrt(J(J+1) - m(m+1)) / 2.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  const double jj = j.j() * (j.j() + 1.0);
  for (int i = 1; i < n; ++i) {
    const double m = j.m(i);
    sub(i - 1) = 0.5 * std::sqrt(jj - m * (m + 1.0));
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("WignerRotation: tridiagonal eigensolver failed");
  }
  // Eigenvalues come back ascending: column k belongs to mu = -J + k.
  eigenvectors_ = solver.eigenvectors();
}

SmallDMatrix WignerRotation::operator()(double beta) const {
  const int n = j_.dim();
  if (beta == 0.0) {
    return SmallDMatrix(j_, beta, RealMatrix::Identity(n, n));
  }
  const RealMatrix& v = eigenvectors_;
  RealMatrix vc(n, n);
  RealMatrix vs(n, n);
  for (int k = 0; k < n; ++k) {
    const double mu = -j_.j() + k;
    vc.col(k) = v.col(k) * std::cos(mu * beta);
    vs.col(k) = v.col(k) * std::sin(mu * beta);
  }
  const RealMatrix a = vc * v.transpose();
  const RealMatrix b = vs * v.transpose();

  // exp(-i pi (m_r - m_c) / 2) (A - iB) is real; m_r - m_c = c - r.
  RealMatrix d(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      switch (((c - r) % 4 + 4) % 4) {
        case 0: d(r, c) = a(r, c); break;
        case 1: d(r, c) = -b(r, c); break;
        case 2: d(r, c) = -a(r, c); break;
        default: d(r, c) = b(r, c); break;
      }
    }
  }
  return SmallDMatrix(j_, beta, std::move(d));
}

SmallDMatrix small_d_matrix(SpinQuantum j, double beta) { return WignerRotation(j)(beta); }

ComplexVector rz_phases(SpinQuantum j, double alpha) {
  ComplexVector phases(j.dim());
  for (int i = 0; i < j.dim(); ++i) {
    phases(i) = std::polar(1.0, -alpha * j.m(i));
  }
  return phases;
}

ComplexMatrix rotated_dicke_frame(const WignerRotation& rotation, double theta, double phi) {
  const SpinQuantum j = rotation.spin();
  return rz_phases(j, phi).asDiagonal() * rotation(theta).matrix().cast<Complex>();
}

ComplexMatrix rotated_dicke_frame(SpinQuantum j, double theta, double phi) {
  return rotated_dicke_frame(WignerRotation(j), theta, phi);
}

AngularMomentumMatrices angular_momentum_matrices(SpinQuantum j) {
  const int n = j.dim();
  RealMatrix jplus = RealMatrix::Zero(n, n);
  const double jj = j.j() * (j.j() + 1.0);
  for (int i = 1; i < n; ++i) {
    const double m = j.m(i);
    jplus(i - 1, i) = std::sqrt(jj - m * (m + 1.0));
  }
  AngularMomentumMatrices out;
  out.jx = 0.5 * (jplus + jplus.transpose());
  out.jy = (jplus - jplus.transpose()).cast<Complex>() * Complex(0.0, -0.5);
  out.jz = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) out.jz(i, i) = j.m(i);
  return out;
}

}  // namespace blochwalk
