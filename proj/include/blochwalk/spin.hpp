#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace blochwalk {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Total spin J of the walker, stored as the integer 2J so that half-integer
/// spins are exact. Basis vectors are ordered m = J, J-1, ..., -J; index i
/// carries m = J - i.
class SpinQuantum {
 public:
  explicit SpinQuantum(int two_j) : two_j_(two_j) {
    if (two_j < 0) {
      throw std::invalid_argument("SpinQuantum: two_j must be non-negative, got " +
                                  std::to_string(two_j));
    }
  }

  /// J = N/2 for a cluster of N spin-1/2 particles.
  static SpinQuantum from_spin_count(int spins) { return SpinQuantum(spins); }

  int two_j() const { return two_j_; }
  double j() const { return 0.5 * two_j_; }
  int dim() const { return two_j_ + 1; }

  int two_m(int index) const { return two_j_ - 2 * index; }
  double m(int index) const { return 0.5 * two_m(index); }

  int index_of(int two_m) const {
    if (two_m > two_j_ || two_m < -two_j_ || ((two_j_ - two_m) & 1)) {
      throw std::invalid_argument("SpinQuantum: two_m=" + std::to_string(two_m) +
                                  " is not a projection of two_j=" + std::to_string(two_j_));
    }
    return (two_j_ - two_m) / 2;
  }

  friend bool operator==(SpinQuantum a, SpinQuantum b) { return a.two_j_ == b.two_j_; }

 private:
  int two_j_;
};

/// Raised when a computed object violates an invariant that should hold by
/// construction (e.g. a density matrix that is not Hermitian).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blochwalk
