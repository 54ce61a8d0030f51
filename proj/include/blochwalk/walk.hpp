#pragma once

#include <array>
#include <vector>

#include "blochwalk/coherent.hpp"
#include "blochwalk/spin.hpp"

namespace blochwalk {

using CoinMatrix = Eigen::Matrix2cd;

/// Pulse vector h applied to the coin; the flip is exp(-i h.S), S = sigma/2.
struct CoinPulse {
  std::array<double, 3> h{0.0, 0.0, 0.0};

  /// h = (pi, 0, pi)/sqrt(2), which realizes -i * Hadamard.
  static CoinPulse hadamard();
};

/// exp(-i h.sigma/2) = cos(|h|/2) I - i sin(|h|/2) (h/|h|).sigma, coin basis (up, down).
CoinMatrix coin_unitary(const CoinPulse& pulse);

/// Walker rotation per step; site_aligned() sets kappa*T = 2 pi / L.
struct WalkSchedule {
  double kappa_t;
  int steps;
  SiteIndexing indexing;

  static WalkSchedule site_aligned(const SiteIndexing& indexing, int steps);
};

/// |psi> = |up_branch> (x) |up> + |down_branch> (x) |down>.
class CoinWalkerState {
 public:
  CoinWalkerState(SpinQuantum j, ComplexVector up, ComplexVector down);

  /// |walker> (x) (coin_up |up> + coin_down |down>).
  static CoinWalkerState product(const DickeVector& walker, Complex coin_up, Complex coin_down);

  SpinQuantum spin() const { return j_; }
  const ComplexVector& up() const { return up_; }
  const ComplexVector& down() const { return down_; }
  double norm_squared() const { return up_.squaredNorm() + down_.squaredNorm(); }

 private:
  SpinQuantum j_;
  ComplexVector up_;
  ComplexVector down_;
};

/// Reduced walker state. Construction checks Hermiticity (1e-12) and unit
/// trace (1e-10) and throws NumericalError otherwise.
class DensityMatrix {
 public:
  DensityMatrix(SpinQuantum j, ComplexMatrix entries);

  static DensityMatrix pure(const DickeVector& state);
  static DensityMatrix maximally_mixed(SpinQuantum j);

  SpinQuantum spin() const { return j_; }
  const ComplexMatrix& matrix() const { return entries_; }
  Complex trace() const { return entries_.trace(); }
  double purity() const;
  /// <psi|rho|psi>
  double expectation(const DickeVector& state) const;
  double min_eigenvalue() const;

 private:
  SpinQuantum j_;
  ComplexMatrix entries_;
};

/// Up branch gets R_z(+kappa T), down branch R_z(-kappa T).
CoinWalkerState conditional_shift(const CoinWalkerState& state, const WalkSchedule& schedule);

/// One period U(T) = M C: the coin flip acts first, then the conditional shift.
CoinWalkerState step(const CoinWalkerState& state, const CoinPulse& pulse,
                     const WalkSchedule& schedule);

/// States after 0, 1, ..., schedule.steps periods.
std::vector<CoinWalkerState> evolve(const CoinWalkerState& initial, const CoinPulse& pulse,
                                    const WalkSchedule& schedule);

/// tr_coin |psi><psi| = up up^dagger + down down^dagger.
DensityMatrix reduce_walker(const CoinWalkerState& state);

/// Probability per site, for sites in the balanced range (-L/2, L/2].
class SiteDistribution {
 public:
  SiteDistribution(SiteIndexing indexing, std::vector<double> probabilities);

  const SiteIndexing& indexing() const { return indexing_; }
  /// Probability at site n (wrapped).
  double at(int n) const;
  /// Ordered from min_site() to max_site().
  const std::vector<double>& probabilities() const { return probabilities_; }
  std::vector<int> site_labels() const;
  double total() const;

 private:
  SiteIndexing indexing_;
  std::vector<double> probabilities_;
};

/// Walk on the cycle Z_L with orthogonal position states: coin, then
/// n -> n+1 for coin up and n -> n-1 for coin down. Starts at site 0 with
/// the given coin amplitudes (default |up>). Returns one distribution per
/// step 0..steps.
std::vector<SiteDistribution> ideal_walk(int sites, int steps, const CoinMatrix& coin,
                                         Complex coin_up = 1.0, Complex coin_down = 0.0);

/// sqrt(<phi^2> - <phi>^2) with unwrapped phi_n = n delta_phi, n balanced.
/// Throws std::invalid_argument when probabilities miss 1 by more than 1e-9.
double ideal_sigma(const SiteDistribution& distribution);

/// Half the L1 distance between two distributions on the same lattice.
double total_variation(const SiteDistribution& a, const SiteDistribution& b);

}  // namespace blochwalk
