#pragma once

#include <span>
#include <string>
#include <vector>

#include "blochwalk/rotation.hpp"
#include "blochwalk/walk.hpp"

namespace blochwalk {

/// Eigenvalues Delta_{j,m} of the Stratonovich-Weyl kernel,
///   Delta_{j,m} = sum_{l=0}^{2j} (2l+1)/(2j+1) <j m; l 0 | j m>,
/// indexed like SpinQuantum (m = J first).
class KernelWeights {
 public:
  KernelWeights(SpinQuantum j, std::vector<double> delta);

  SpinQuantum spin() const { return j_; }
  const std::vector<double>& values() const { return delta_; }
  double operator[](int index) const { return delta_[static_cast<std::size_t>(index)]; }

 private:
  SpinQuantum j_;
  std::vector<double> delta_;
};

/// For fixed j the coefficients sqrt((2l+1)/(2j+1)) <j m; l 0|j m>, l = 0..2j,
/// are orthonormal polynomials of degree l in m on the points m = -j..j.
/// They are read off as eigenvectors of the corresponding Jacobi matrix,
/// which is stable at 2j = 200 where both the Racah sum and the forward
/// polynomial recurrence fail.
KernelWeights kernel_weights(SpinQuantum j);

/// Same weights summed from cg_coefficient(). Slow; kept as a cross-check.
KernelWeights kernel_weights_from_cg(SpinQuantum j);

/// W(theta, phi) = sum_m Delta_{j,m} <j,m;d| rho |j,m;d>, evaluated directly
/// in the rotated Dicke frame. Throws NumericalError if the imaginary part
/// of the trace exceeds 1e-8.
double wigner_at(const DensityMatrix& rho, double theta, double phi, const KernelWeights& weights);
double wigner_at(const DensityMatrix& rho, double theta, double phi, const KernelWeights& weights,
                 const WignerRotation& rotation);

struct GridResolution {
  int n_theta;
  int n_phi;

  /// n_theta = 2J + 2 Gauss-Legendre nodes in cos(theta), n_phi = 8L.
  static GridResolution defaults(SpinQuantum j, int sites);
};

/// W sampled on Gauss-Legendre nodes in cos(theta) times a uniform phi grid
/// on [-pi, pi).
struct WignerGrid {
  SpinQuantum spin{0};
  std::vector<double> theta;          // ascending
  std::vector<double> theta_weights;  // Gauss-Legendre weights in cos(theta)
  std::vector<double> phi;            // phi_j = -pi + j * 2 pi / n_phi
  RealMatrix values;                  // n_theta x n_phi

  /// Fourier coefficients p_q, q = -2J..2J, of the phi marginal:
  /// P(phi) = sum_q p_q e^{i q phi}. Empty when the grid was produced
  /// without the harmonic expansion.
  std::vector<Complex> marginal_harmonics;

  std::vector<std::string> warnings;

  double phi_step() const;
  /// (2J+1)/(4 pi) sum_ij w_i dphi W_ij; equals 1 for a normalized state.
  double normalization() const;
};

/// Harmonic evaluation: for each theta node the real symmetric kernel
/// K(theta) = d(theta) diag(Delta) d(theta)^T is built once and
///   W(theta, phi) = sum_q c_q(theta) e^{i q phi},  c_q = sum_{m_a - m_b = q} K_ab rho_ab.
/// Theta nodes are distributed over OpenMP threads; each node writes its own
/// rows, so results do not depend on scheduling. Pushes a warning when the
/// discretized normalization misses 1 by more than 1e-4.
std::vector<WignerGrid> wigner_grids(std::span<const DensityMatrix> states, GridResolution resolution,
                                     const KernelWeights& weights);
WignerGrid wigner_grid(const DensityMatrix& rho, GridResolution resolution,
                       const KernelWeights& weights);
WignerGrid wigner_grid(const CoinWalkerState& state, GridResolution resolution,
                       const KernelWeights& weights);

/// Serial reference: wigner_at() at every grid point. O(n_theta n_phi (2J+1)^3);
/// meant for tests and benchmarks at small J.
WignerGrid wigner_grid_reference(const DensityMatrix& rho, GridResolution resolution,
                                 const KernelWeights& weights);

/// P(phi) = (2J+1)/(4 pi) int W sin(theta) dtheta on the phi nodes, plus site
/// probabilities integrated over [phi_n - dphi/2, phi_n + dphi/2).
struct PhiDistribution {
  std::vector<double> phi;
  std::vector<double> density;
  SiteDistribution sites;
  std::vector<Complex> harmonics;  // copied from the grid, may be empty

  double integral() const;
  /// <phi^power> over [-pi, pi), power in {0, 1, 2}.
  double moment(int power) const;
};

PhiDistribution marginal_phi(const WignerGrid& grid, const SiteIndexing& indexing);

/// sqrt(<phi^2> - <phi>^2) from the density on [-pi, pi). Throws
/// std::invalid_argument if the density integrates to 1 +- more than 1e-4.
double sigma_from_marginal(const PhiDistribution& distribution);

}  // namespace blochwalk
