#pragma once

#include "blochwalk/spin.hpp"

namespace blochwalk {

/// Real matrix d^j_{m',m}(beta) = <j m'| exp(-i beta J_y) |j m>, rows and
/// columns in the basis order of SpinQuantum (m = J first).
class SmallDMatrix {
 public:
  SmallDMatrix(SpinQuantum j, double beta, RealMatrix entries)
      : j_(j), beta_(beta), entries_(std::move(entries)) {}

  SpinQuantum spin() const { return j_; }
  double beta() const { return beta_; }
  const RealMatrix& matrix() const { return entries_; }

  /// Entry by doubled projections.
  double operator()(int two_m_row, int two_m_col) const {
    return entries_(j_.index_of(two_m_row), j_.index_of(two_m_col));
  }

 private:
  SpinQuantum j_;
  double beta_;
  RealMatrix entries_;
};

/// Produces d^j(beta) for one fixed j.
///
/// J_y = R J_x R^dagger with R = diag(exp(-i pi m / 2)), and J_x is a real
/// symmetric tridiagonal matrix with spectrum {-J..J}. With J_x = V diag(mu) V^T,
///
///   d(beta) = R V diag(exp(-i mu beta)) V^T R^dagger,
///
/// which stays accurate for 2J = 200 where the alternating Wigner sum loses
/// every digit. The eigenvectors are computed once; each beta costs two real
/// matrix products. Immutable after construction and safe to share.
class WignerRotation {
 public:
  explicit WignerRotation(SpinQuantum j);

  SpinQuantum spin() const { return j_; }
  SmallDMatrix operator()(double beta) const;

 private:
  SpinQuantum j_;
  RealMatrix eigenvectors_;
};

/// Convenience wrapper; builds a WignerRotation for a single beta.
SmallDMatrix small_d_matrix(SpinQuantum j, double beta);

/// Diagonal of R_z(alpha) = exp(-i alpha J_z): entries exp(-i alpha m).
ComplexVector rz_phases(SpinQuantum j, double alpha);

/// U(theta, phi) = diag(exp(-i phi m)) d^j(theta). Column m is the Dicke
/// state |j, m; d> along d = (sin theta cos phi, sin theta sin phi, cos theta).
ComplexMatrix rotated_dicke_frame(const WignerRotation& rotation, double theta, double phi);
ComplexMatrix rotated_dicke_frame(SpinQuantum j, double theta, double phi);

struct AngularMomentumMatrices {
  RealMatrix jx;
  ComplexMatrix jy;
  RealMatrix jz;
};

/// J_x, J_y, J_z built from ladder-operator matrix elements.
AngularMomentumMatrices angular_momentum_matrices(SpinQuantum j);

}  // namespace blochwalk
