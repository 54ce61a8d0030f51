#include "blochwalk/wigner.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "blochwalk/clebsch_gordan.hpp"
#include "blochwalk/quadrature.hpp"
#include "wigner_detail.hpp"

namespace blochwalk {

KernelWeights::KernelWeights(SpinQuantum j, std::vector<double> delta)
    : j_(j), delta_(std::move(delta)) {
  if (static_cast<int>(delta_.size()) != j_.dim()) {
    throw std::invalid_argument("KernelWeights: need 2J+1 values");
  }
}

KernelWeights kernel_weights(SpinQuantum j) {
  const int n = j.dim();
  if (n == 1) return KernelWeights(j, {1.0});

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  const double nn = static_cast<double>(n) * n;
  for (int l = 1; l < n; ++l) {
    sub(l - 1) = 0.5 * l * std::sqrt((nn - l * l) / (4.0 * l * l - 1.0));
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("kernel_weights: tridiagonal eigensolver failed");
  }
  const RealMatrix& u = solver.eigenvectors();

  std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    // Column k has eigenvalue m = -J + k; its first entry fixes the sign.
    const double sign = u(0, k) >= 0.0 ? 1.0 : -1.0;
    double sum = 0.0;
    for (int l = 0; l < n; ++l) {
      sum += std::sqrt((2.0 * l + 1.0) / n) * u(l, k);
    }
    const int index = n - 1 - k;
    delta[static_cast<std::size_t>(index)] = sign * sum;
  }
  return KernelWeights(j, std::move(delta));
}

KernelWeights kernel_weights_from_cg(SpinQuantum j) {
  const int two_j = j.two_j();
  std::vector<double> delta(static_cast<std::size_t>(j.dim()), 0.0);
  for (int i = 0; i < j.dim(); ++i) {
    const int two_m = j.two_m(i);
    double sum = 0.0;
    for (int l = 0; l <= two_j; ++l) {
      sum += (2.0 * l + 1.0) / (two_j + 1.0) * cg_coefficient(two_j, two_m, 2 * l, 0, two_j, two_m);
    }
    delta[static_cast<std::size_t>(i)] = sum;
  }
  return KernelWeights(j, std::move(delta));
}

GridResolution GridResolution::defaults(SpinQuantum j, int sites) {
  return GridResolution{j.two_j() + 2, 8 * sites};
}

double WignerGrid::phi_step() const { return 2.0 * kPi / static_cast<double>(phi.size()); }

double WignerGrid::normalization() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    sum += theta_weights[i] * values.row(static_cast<Eigen::Index>(i)).sum();
  }
  return spin.dim() / (4.0 * kPi) * phi_step() * sum;
}

namespace detail {

WignerGrid empty_grid(SpinQuantum j, GridResolution resolution) {
  if (resolution.n_theta < 1 || resolution.n_phi < 1) {
    throw std::invalid_argument("wigner_grid: grid resolution must be positive");
  }
  const GaussLegendre rule = gauss_legendre(resolution.n_theta);
  WignerGrid grid;
  grid.spin = j;
  // Nodes are ascending in cos(theta); reverse so theta ascends.
  for (int i = resolution.n_theta - 1; i >= 0; --i) {
    grid.theta.push_back(std::acos(rule.nodes[static_cast<std::size_t>(i)]));
    grid.theta_weights.push_back(rule.weights[static_cast<std::size_t>(i)]);
  }
  for (int k = 0; k < resolution.n_phi; ++k) {
    grid.phi.push_back(-kPi + 2.0 * kPi * k / resolution.n_phi);
  }
  grid.values = RealMatrix::Zero(resolution.n_theta, resolution.n_phi);
  return grid;
}

void check_normalization(WignerGrid& grid) {
  const double residual = std::abs(grid.normalization() - 1.0);
  if (residual > 1e-4) {
    std::ostringstream msg;
    msg << "discretized normalization misses 1 by " << residual
        << "; increase --grid-theta/--grid-phi";
    grid.warnings.push_back(msg.str());
  }
}

}  // namespace detail

std::vector<WignerGrid> wigner_grids(std::span<const DensityMatrix> states, GridResolution resolution,
                                     const KernelWeights& weights) {
  const SpinQuantum j = weights.spin();
  for (const auto& rho : states) {
    if (!(rho.spin() == j)) throw std::invalid_argument("wigner_grids: spin mismatch");
  }
  const int n = j.dim();
  const int two_j = j.two_j();
  const int n_harm = 2 * two_j + 1;  // q = -2J..2J
  const auto n_states = static_cast<int>(states.size());

  std::vector<WignerGrid> grids;
  grids.reserve(states.size());
  for (int s = 0; s < n_states; ++s) grids.push_back(detail::empty_grid(j, resolution));
  if (n_states == 0) return grids;

  const WignerGrid& layout = grids.front();
  const int n_theta = resolution.n_theta;
  const int n_phi = resolution.n_phi;

  // e^{i q phi_k} for q = 1..2J.
  ComplexMatrix phase(two_j + 1, n_phi);
  for (int q = 0; q <= two_j; ++q) {
    for (int k = 0; k < n_phi; ++k) {
      phase(q, k) = std::polar(1.0, q * layout.phi[static_cast<std::size_t>(k)]);
    }
  }
  Eigen::VectorXd delta(n);
  for (int i = 0; i < n; ++i) delta(i) = weights[i];

  const WignerRotation rotation(j);
  // harmonics[s](i, q + 2J) = c_q(theta_i) for state s; only q >= 0 is stored
  // because c_{-q} = conj(c_q).
  std::vector<ComplexMatrix> harmonics(states.size(), ComplexMatrix::Zero(n_theta, two_j + 1));

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n_theta; ++i) {
    const RealMatrix d = rotation(layout.theta[static_cast<std::size_t>(i)]).matrix();
    const RealMatrix kernel = d * delta.asDiagonal() * d.transpose();
    Eigen::VectorXcd c(two_j + 1);
    for (int s = 0; s < n_states; ++s) {
      const ComplexMatrix& rho = states[static_cast<std::size_t>(s)].matrix();
      // m_a - m_b = b - a = q
      for (int q = 0; q <= two_j; ++q) {
        Complex acc = 0.0;
        for (int a = 0; a + q < n; ++a) acc += kernel(a, a + q) * rho(a, a + q);
        c(q) = acc;
      }
      harmonics[static_cast<std::size_t>(s)].row(i) = c.transpose();
      auto row = grids[static_cast<std::size_t>(s)].values.row(i);
      for (int k = 0; k < n_phi; ++k) {
        double w = c(0).real();
        for (int q = 1; q <= two_j; ++q) w += 2.0 * (c(q) * phase(q, k)).real();
        row(k) = w;
      }
    }
  }

  const double scale = n / (4.0 * kPi);
  for (int s = 0; s < n_states; ++s) {
    WignerGrid& grid = grids[static_cast<std::size_t>(s)];
    const ComplexMatrix& h = harmonics[static_cast<std::size_t>(s)];
    grid.marginal_harmonics.assign(static_cast<std::size_t>(n_harm), 0.0);
    for (int q = 0; q <= two_j; ++q) {
      Complex p = 0.0;
      for (int i = 0; i < n_theta; ++i) p += grid.theta_weights[static_cast<std::size_t>(i)] * h(i, q);
      p *= scale;
      grid.marginal_harmonics[static_cast<std::size_t>(two_j + q)] = p;
      grid.marginal_harmonics[static_cast<std::size_t>(two_j - q)] = std::conj(p);
    }
    grid.marginal_harmonics[static_cast<std::size_t>(two_j)] = grid.marginal_harmonics[static_cast<std::size_t>(two_j)].real();
    detail::check_normalization(grid);
  }
  return grids;
}

WignerGrid wigner_grid(const DensityMatrix& rho, GridResolution resolution,
                       const KernelWeights& weights) {
  return std::move(wigner_grids(std::span<const DensityMatrix>(&rho, 1), resolution, weights).front());
}

WignerGrid wigner_grid(const CoinWalkerState& state, GridResolution resolution,
                       const KernelWeights& weights) {
  return wigner_grid(reduce_walker(state), resolution, weights);
}

}  // namespace blochwalk
