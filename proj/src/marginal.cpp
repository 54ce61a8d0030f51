#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blochwalk/wigner.hpp"

namespace blochwalk {
namespace {

// int_a^b e^{i q phi} dphi
Complex harmonic_integral(int q, double a, double b) {
  if (q == 0) return b - a;
  const Complex iq(0.0, q);
  return (std::exp(iq * b) - std::exp(iq * a)) / iq;
}

std::vector<double> bin_from_harmonics(const std::vector<Complex>& p, const SiteIndexing& idx) {
  const int two_j = static_cast<int>(p.size() - 1) / 2;
  const double width = idx.delta_phi();
  std::vector<double> probs;
  for (int n = idx.min_site(); n <= idx.max_site(); ++n) {
    const double lo = n * width - 0.5 * width;
    const double hi = n * width + 0.5 * width;
    Complex sum = 0.0;
    for (int q = -two_j; q <= two_j; ++q) {
      sum += p[static_cast<std::size_t>(q + two_j)] * harmonic_integral(q, lo, hi);
    }
    probs.push_back(sum.real());
  }
  return probs;
}

// Rectangle rule on the nodes; a node sitting exactly on a bin edge is shared.
std::vector<double> bin_from_nodes(const std::vector<double>& phi, const std::vector<double>& density,
                                   double dphi, const SiteIndexing& idx) {
  std::vector<double> probs(static_cast<std::size_t>(idx.sites()), 0.0);
  auto add = [&](int n, double mass) {
    probs[static_cast<std::size_t>(idx.wrap(n) - idx.min_site())] += mass;
  };
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const double s = phi[k] / idx.delta_phi();
    const double mass = density[k] * dphi;
    const double lower = std::floor(s);
    const double frac = s - lower;
    if (std::abs(frac - 0.5) < 1e-9) {
      add(static_cast<int>(lower), 0.5 * mass);
      add(static_cast<int>(lower) + 1, 0.5 * mass);
    } else {
      add(static_cast<int>(std::lround(s)), mass);
    }
  }
  return probs;
}

}  // namespace

PhiDistribution marginal_phi(const WignerGrid& grid, const SiteIndexing& indexing) {
  const auto n_phi = static_cast<Eigen::Index>(grid.phi.size());
  const double scale = grid.spin.dim() / (4.0 * kPi);
  std::vector<double> density(grid.phi.size(), 0.0);
  for (Eigen::Index k = 0; k < n_phi; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.theta.size(); ++i) {
      sum += grid.theta_weights[i] * grid.values(static_cast<Eigen::Index>(i), k);
    }
    density[static_cast<std::size_t>(k)] = scale * sum;
  }

  std::vector<double> probs = grid.marginal_harmonics.empty()
                                  ? bin_from_nodes(grid.phi, density, grid.phi_step(), indexing)
                                  : bin_from_harmonics(grid.marginal_harmonics, indexing);
  return PhiDistribution{grid.phi, std::move(density), SiteDistribution(indexing, std::move(probs)),
                         grid.marginal_harmonics};
}

double PhiDistribution::integral() const { return moment(0); }

double PhiDistribution::moment(int power) const {
  if (power < 0 || power > 2) {
    throw std::invalid_argument("PhiDistribution::moment: power must be 0, 1 or 2");
  }
  if (!harmonics.empty()) {
    // Exact integrals of phi^power e^{i q phi} over [-pi, pi].
    const int two_j = static_cast<int>(harmonics.size() - 1) / 2;
    Complex sum = 0.0;
    for (int q = -two_j; q <= two_j; ++q) {
      const Complex p = harmonics[static_cast<std::size_t>(q + two_j)];
      const double sign = (q % 2 == 0) ? 1.0 : -1.0;
      if (q == 0) {
        if (power == 0) sum += p * (2.0 * kPi);
        if (power == 2) sum += p * (2.0 * kPi * kPi * kPi / 3.0);
      } else if (power == 1) {
        sum += p * Complex(0.0, -2.0 * kPi * sign / q);
      } else if (power == 2) {
        sum += p * (4.0 * kPi * sign / (static_cast<double>(q) * q));
      }
    }
    return sum.real();
  }
  // Trapezoid on [-pi, pi] with the periodic endpoint phi = pi folded onto -pi.
  const double dphi = 2.0 * kPi / static_cast<double>(phi.size());
  double sum = 0.5 * (std::pow(-kPi, power) + std::pow(kPi, power)) * density.front();
  for (std::size_t k = 1; k < phi.size(); ++k) sum += std::pow(phi[k], power) * density[k];
  return dphi * sum;
}

double sigma_from_marginal(const PhiDistribution& distribution) {
  const double norm = distribution.integral();
  if (std::abs(norm - 1.0) > 1e-4) {
    throw std::invalid_argument("sigma_from_marginal: density integrates to " +
                                std::to_string(norm));
  }
  const double m1 = distribution.moment(1);
  const double m2 = distribution.moment(2);
  return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

}  // namespace blochwalk
