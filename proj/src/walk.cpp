#include "blochwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "blochwalk/rotation.hpp"

namespace blochwalk {

CoinPulse CoinPulse::hadamard() {
  const double a = kPi / std::sqrt(2.0);
  return CoinPulse{{a, 0.0, a}};
}

CoinMatrix coin_unitary(const CoinPulse& pulse) {
  const auto& h = pulse.h;
  const double norm = std::sqrt(h[0] * h[0] + h[1] * h[1] + h[2] * h[2]);
  CoinMatrix u = CoinMatrix::Identity();
  if (norm == 0.0) return u;
  const double nx = h[0] / norm;
  const double ny = h[1] / norm;
  const double nz = h[2] / norm;
  const double c = std::cos(0.5 * norm);
  const double s = std::sin(0.5 * norm);
  const Complex i(0.0, 1.0);
  // n.sigma = [[nz, nx - i ny], [nx + i ny, -nz]]
  u(0, 0) = c - i * s * nz;
  u(0, 1) = -i * s * (nx - i * ny);
  u(1, 0) = -i * s * (nx + i * ny);
  u(1, 1) = c + i * s * nz;
  return u;
}

WalkSchedule WalkSchedule::site_aligned(const SiteIndexing& indexing, int steps) {
  if (steps < 0) {
    throw std::invalid_argument("WalkSchedule: negative step count " + std::to_string(steps));
  }
  return WalkSchedule{indexing.delta_phi(), steps, indexing};
}

CoinWalkerState::CoinWalkerState(SpinQuantum j, ComplexVector up, ComplexVector down)
    : j_(j), up_(std::move(up)), down_(std::move(down)) {
  if (up_.size() != j_.dim() || down_.size() != j_.dim()) {
    throw std::invalid_argument("CoinWalkerState: branch size does not match 2J+1");
  }
}

CoinWalkerState CoinWalkerState::product(const DickeVector& walker, Complex coin_up,
                                         Complex coin_down) {
  return CoinWalkerState(walker.spin(), coin_up * walker.amplitudes(),
                         coin_down * walker.amplitudes());
}

DensityMatrix::DensityMatrix(SpinQuantum j, ComplexMatrix entries)
    : j_(j), entries_(std::move(entries)) {
  if (entries_.rows() != j_.dim() || entries_.cols() != j_.dim()) {
    throw std::invalid_argument("DensityMatrix: shape does not match 2J+1");
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    throw NumericalError("DensityMatrix: not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw NumericalError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  }
}

DensityMatrix DensityMatrix::pure(const DickeVector& state) {
  return DensityMatrix(state.spin(), state.amplitudes() * state.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(SpinQuantum j) {
  return DensityMatrix(j, ComplexMatrix::Identity(j.dim(), j.dim()) / static_cast<double>(j.dim()));
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

double DensityMatrix::expectation(const DickeVector& state) const {
  return state.amplitudes().dot(entries_ * state.amplitudes()).real();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

CoinWalkerState conditional_shift(const CoinWalkerState& state, const WalkSchedule& schedule) {
  const ComplexVector forward = rz_phases(state.spin(), schedule.kappa_t);
  return CoinWalkerState(state.spin(), forward.cwiseProduct(state.up()),
                         forward.conjugate().cwiseProduct(state.down()));
}

CoinWalkerState step(const CoinWalkerState& state, const CoinPulse& pulse,
                     const WalkSchedule& schedule) {
  const CoinMatrix c = coin_unitary(pulse);
  CoinWalkerState flipped(state.spin(), c(0, 0) * state.up() + c(0, 1) * state.down(),
                          c(1, 0) * state.up() + c(1, 1) * state.down());
  return conditional_shift(flipped, schedule);
}

std::vector<CoinWalkerState> evolve(const CoinWalkerState& initial, const CoinPulse& pulse,
                                    const WalkSchedule& schedule) {
  if (schedule.steps < 0) {
    throw std::invalid_argument("evolve: negative step count");
  }
  std::vector<CoinWalkerState> states;
  states.reserve(static_cast<std::size_t>(schedule.steps) + 1);
  states.push_back(initial);
  for (int k = 0; k < schedule.steps; ++k) {
    states.push_back(step(states.back(), pulse, schedule));
  }
  return states;
}

DensityMatrix reduce_walker(const CoinWalkerState& state) {
  ComplexMatrix rho = state.up() * state.up().adjoint() + state.down() * state.down().adjoint();
  // Rounding in the outer products leaves ~1e-17 anti-Hermitian noise.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(state.spin(), std::move(rho));
}

SiteDistribution::SiteDistribution(SiteIndexing indexing, std::vector<double> probabilities)
    : indexing_(indexing), probabilities_(std::move(probabilities)) {
  if (static_cast<int>(probabilities_.size()) != indexing_.sites()) {
    throw std::invalid_argument("SiteDistribution: need one probability per site");
  }
}

double SiteDistribution::at(int n) const {
  return probabilities_[static_cast<std::size_t>(indexing_.wrap(n) - indexing_.min_site())];
}

std::vector<int> SiteDistribution::site_labels() const {
  std::vector<int> labels(probabilities_.size());
  std::iota(labels.begin(), labels.end(), indexing_.min_site());
  return labels;
}

double SiteDistribution::total() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

std::vector<SiteDistribution> ideal_walk(int sites, int steps, const CoinMatrix& coin,
                                         Complex coin_up, Complex coin_down) {
  if (sites < 2) throw std::invalid_argument("ideal_walk: need at least 2 sites");
  if (steps < 0) throw std::invalid_argument("ideal_walk: negative step count");
  const SiteIndexing indexing(sites);
  const auto L = static_cast<std::size_t>(sites);

  // Amplitudes indexed by lattice position r = n mod L.
  std::vector<Complex> up(L, 0.0);
  std::vector<Complex> down(L, 0.0);
  up[0] = coin_up;
  down[0] = coin_down;

  auto snapshot = [&] {
    std::vector<double> probs(L);
    for (int n = indexing.min_site(); n <= indexing.max_site(); ++n) {
      const auto r = static_cast<std::size_t>(((n % sites) + sites) % sites);
      probs[static_cast<std::size_t>(n - indexing.min_site())] =
          std::norm(up[r]) + std::norm(down[r]);
    }
    return SiteDistribution(indexing, std::move(probs));
  };

  std::vector<SiteDistribution> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(snapshot());
  for (int k = 0; k < steps; ++k) {
    std::vector<Complex> next_up(L, 0.0);
    std::vector<Complex> next_down(L, 0.0);
    for (std::size_t r = 0; r < L; ++r) {
      const Complex u = coin(0, 0) * up[r] + coin(0, 1) * down[r];
      const Complex d = coin(1, 0) * up[r] + coin(1, 1) * down[r];
      next_up[(r + 1) % L] += u;
      next_down[(r + L - 1) % L] += d;
    }
    up.swap(next_up);
    down.swap(next_down);
    out.push_back(snapshot());
  }
  return out;
}

double ideal_sigma(const SiteDistribution& distribution) {
  const double total = distribution.total();
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("ideal_sigma: probabilities sum to " + std::to_string(total));
  }
  const auto& idx = distribution.indexing();
  double m1 = 0.0;
  double m2 = 0.0;
  const auto& probs = distribution.probabilities();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double phi = (idx.min_site() + static_cast<int>(i)) * idx.delta_phi();
    m1 += probs[i] * phi;
    m2 += probs[i] * phi * phi;
  }
  return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

double total_variation(const SiteDistribution& a, const SiteDistribution& b) {
  if (a.indexing().sites() != b.indexing().sites()) {
    throw std::invalid_argument("total_variation: lattice sizes differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.probabilities().size(); ++i) {
    sum += std::abs(a.probabilities()[i] - b.probabilities()[i]);
  }
  return 0.5 * sum;
}

}  // namespace blochwalk
