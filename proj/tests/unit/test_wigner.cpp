#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "blochwalk/clebsch_gordan.hpp"
#include "blochwalk/wigner.hpp"

using namespace blochwalk;

namespace {

std::vector<DensityMatrix> walk_states(int two_j, int sites, int steps) {
  const SpinQuantum j(two_j);
  const SiteIndexing idx(sites);
  const auto states = evolve(CoinWalkerState::product(site_state(idx, j, 0), 1.0, 0.0),
                             CoinPulse::hadamard(), WalkSchedule::site_aligned(idx, steps));
  std::vector<DensityMatrix> out;
  for (const auto& s : states) out.push_back(reduce_walker(s));
  return out;
}

}  // namespace

TEST_CASE("kernel_weights: spin 1/2 closed form") {
  const KernelWeights w = kernel_weights(SpinQuantum(1));
  CHECK(w[0] == doctest::Approx((1.0 + std::sqrt(3.0)) / 2.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx((1.0 - std::sqrt(3.0)) / 2.0).epsilon(1e-15));
}

TEST_CASE("kernel_weights: sum rules up to 2j = 200") {
  for (int two_j = 0; two_j <= 200; two_j += (two_j < 20 ? 1 : 15)) {
    const KernelWeights w = kernel_weights(SpinQuantum(two_j));
    const auto& v = w.values();
    CHECK(v.size() == static_cast<std::size_t>(two_j + 1));
    CHECK(std::accumulate(v.begin(), v.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-10));
    const double squares = std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    CHECK(squares == doctest::Approx(two_j + 1.0).epsilon(1e-10));
  }
}

TEST_CASE("kernel_weights: frozen high-precision values") {
  // Frozen from exact rational Clebsch-Gordan sums.
  const KernelWeights w200 = kernel_weights(SpinQuantum(200));
  CHECK(std::abs(w200[0] - 1.9950123742678305) < 1e-12);
  CHECK(std::abs(w200[100] - 0.24556788914881858) < 1e-12);
  CHECK(std::abs(w200[50] - 1.4106196760762717) < 1e-12);
  CHECK(std::abs(w200[137] - -1.9350398794252755e-08) < 1e-12);
  const KernelWeights w50 = kernel_weights(SpinQuantum(50));
  CHECK(std::abs(w50[0] - 1.9801917868541712) < 1e-12);
  CHECK(std::abs(w50[25] - -0.34637270064537) < 1e-12);
  CHECK(std::abs(w50[10] - 1.5332880429073907) < 1e-12);
}

TEST_CASE("kernel_weights agrees with the Clebsch-Gordan sum") {
  for (int two_j : {2, 3, 7, 10, 20, 51, 200}) {
    const KernelWeights fast = kernel_weights(SpinQuantum(two_j));
    const KernelWeights slow = kernel_weights_from_cg(SpinQuantum(two_j));
    for (int i = 0; i <= two_j; ++i) CHECK(std::abs(fast[i] - slow[i]) < 1e-11);
  }
}

TEST_CASE("KernelWeights rejects the wrong size") {
  CHECK_THROWS_AS(KernelWeights(SpinQuantum(2), {1.0}), std::invalid_argument);
}

TEST_CASE("wigner_at: simple states") {
  const SpinQuantum j(9);
  const KernelWeights w = kernel_weights(j);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(j);
  for (const auto& [t, p] : {std::pair{0.0, 0.0}, std::pair{1.1, -2.0}, std::pair{kPi, 3.0}}) {
    CHECK(wigner_at(mixed, t, p, w) == doctest::Approx(1.0 / 10.0).epsilon(1e-13));
  }
  const DensityMatrix top = DensityMatrix::pure(coherent_state(j, 0.0, 0.0));
  CHECK(wigner_at(top, 0.0, 0.7, w) == doctest::Approx(w[0]).epsilon(1e-13));
  CHECK(wigner_at(top, kPi, 0.7, w) == doctest::Approx(w[9]).epsilon(1e-12));
  CHECK_THROWS_AS(wigner_at(mixed, 0.3, 0.3, kernel_weights(SpinQuantum(4))), std::invalid_argument);
}

TEST_CASE("wigner_at: a coherent state peaks at its own direction") {
  const SpinQuantum j(50);
  const KernelWeights w = kernel_weights(j);
  const DensityMatrix rho = DensityMatrix::pure(site_state(SiteIndexing(6), j, 0));
  const double peak = wigner_at(rho, kPi / 2, 0.0, w);
  CHECK(peak == doctest::Approx(w[0]).epsilon(1e-10));
  for (const auto& [t, p] : {std::pair{kPi / 2, 0.1}, std::pair{1.4, 0.0}, std::pair{kPi / 2, kPi}}) {
    CHECK(wigner_at(rho, t, p, w) < peak);
  }
}

TEST_CASE("harmonic grid matches the serial reference") {
  for (int two_j : {1, 4, 10, 21}) {
    const auto states = walk_states(two_j, 6, 3);
    const KernelWeights w = kernel_weights(SpinQuantum(two_j));
    const GridResolution res = GridResolution::defaults(SpinQuantum(two_j), 6);
    for (const auto& rho : states) {
      const WignerGrid fast = wigner_grid(rho, res, w);
      const WignerGrid slow = wigner_grid_reference(rho, res, w);
      CHECK(fast.values.rows() == res.n_theta);
      CHECK(fast.values.cols() == res.n_phi);
      CHECK((fast.values - slow.values).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(fast.theta == slow.theta);
      CHECK(fast.phi == slow.phi);
    }
  }
}

TEST_CASE("batched grids equal single grids") {
  const auto states = walk_states(30, 6, 4);
  const KernelWeights w = kernel_weights(SpinQuantum(30));
  const GridResolution res{20, 48};
  const auto grids = wigner_grids(states, res, w);
  REQUIRE(grids.size() == states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    CHECK(grids[k].values == wigner_grid(states[k], res, w).values);
  }
  CHECK_THROWS_AS(wigner_grid(states[0], GridResolution{0, 10}, w), std::invalid_argument);
}

TEST_CASE("grid layout") {
  const WignerGrid g = wigner_grid(DensityMatrix::maximally_mixed(SpinQuantum(4)), GridResolution{6, 12},
                                   kernel_weights(SpinQuantum(4)));
  CHECK(std::is_sorted(g.theta.begin(), g.theta.end()));
  CHECK(g.phi.front() == doctest::Approx(-kPi));
  CHECK(g.phi_step() == doctest::Approx(2 * kPi / 12));
  CHECK(g.phi.back() == doctest::Approx(kPi - 2 * kPi / 12));
  CHECK(g.marginal_harmonics.size() == 9);
}

TEST_CASE("grid normalization and warning") {
  const auto states = walk_states(50, 6, 2);
  const KernelWeights w = kernel_weights(SpinQuantum(50));
  for (const auto& rho : states) {
    const WignerGrid g = wigner_grid(rho, GridResolution{52, 102}, w);
    CHECK(std::abs(g.normalization() - 1.0) < 1e-10);
    CHECK(g.warnings.empty());
  }
  const WignerGrid coarse = wigner_grid(states[0], GridResolution{3, 102}, w);
  CHECK(std::abs(coarse.normalization() - 1.0) > 1e-4);
  CHECK(coarse.warnings.size() == 1);
}

TEST_CASE("W is covariant under rotations about z") {
  const SpinQuantum j(16);
  const KernelWeights w = kernel_weights(j);
  const DensityMatrix rho = walk_states(16, 5, 3).back();
  const double alpha = 0.83;
  const ComplexVector phase = rz_phases(j, alpha);
  const DensityMatrix rotated(j, phase.asDiagonal() * rho.matrix() * phase.conjugate().asDiagonal());
  for (const auto& [t, p] : {std::pair{0.4, 0.1}, std::pair{kPi / 2, -1.2}, std::pair{2.2, 2.0}}) {
    CHECK(wigner_at(rotated, t, p + alpha, w) == doctest::Approx(wigner_at(rho, t, p, w)).epsilon(1e-11));
  }
}

TEST_CASE("integral of W squared gives the purity") {
  const SpinQuantum j(20);
  const KernelWeights w = kernel_weights(j);
  const auto states = walk_states(20, 6, 3);
  for (const auto& rho : states) {
    const WignerGrid g = wigner_grid(rho, GridResolution{22, 84}, w);
    double sum = 0.0;
    for (int i = 0; i < g.values.rows(); ++i) {
      sum += g.theta_weights[i] * g.values.row(i).squaredNorm();
    }
    const double integral = j.dim() / (4 * kPi) * sum * g.phi_step();
    CHECK(integral == doctest::Approx(rho.purity()).epsilon(1e-10));
  }
}

TEST_CASE("two steps give three lobes with negative fringes") {
  const auto states = walk_states(50, 6, 2);
  const SpinQuantum j(50);
  const WignerGrid g = wigner_grid(states[2], GridResolution::defaults(j, 6), kernel_weights(j));
  CHECK(g.values.minCoeff() < -1e-3);
  const PhiDistribution marginal = marginal_phi(g, SiteIndexing(6));
  CHECK(marginal.sites.at(0) == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(marginal.sites.at(2) == doctest::Approx(0.25).epsilon(1e-2));
  CHECK(marginal.sites.at(-2) == doctest::Approx(0.25).epsilon(1e-2));
  CHECK(marginal.sites.at(1) < 1e-2);
}

TEST_CASE("marginal_phi: localized, split and uniform states") {
  const SpinQuantum j(50);
  const KernelWeights w = kernel_weights(j);
  const SiteIndexing idx(6);
  const GridResolution res = GridResolution::defaults(j, 6);
  const auto states = walk_states(50, 6, 1);

  const PhiDistribution p0 = marginal_phi(wigner_grid(states[0], res, w), idx);
  CHECK(p0.sites.at(0) > 0.99);
  CHECK(p0.integral() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p0.sites.total() == doctest::Approx(1.0).epsilon(1e-10));

  const PhiDistribution p1 = marginal_phi(wigner_grid(states[1], res, w), idx);
  CHECK(p1.sites.at(1) == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(p1.sites.at(-1) == doctest::Approx(0.5).epsilon(1e-2));

  const PhiDistribution flat = marginal_phi(wigner_grid(DensityMatrix::maximally_mixed(j), res, w), idx);
  for (double d : flat.density) CHECK(d == doctest::Approx(1.0 / (2 * kPi)).epsilon(1e-12));
  for (double s : flat.sites.probabilities()) CHECK(s == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(sigma_from_marginal(flat) == doctest::Approx(kPi / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("node-based fallbacks agree with the harmonic results") {
  const SpinQuantum j(30);
  const SiteIndexing idx(6);
  const auto states = walk_states(30, 6, 2);
  WignerGrid g = wigner_grid(states[2], GridResolution{32, 240}, kernel_weights(j));
  const PhiDistribution exact = marginal_phi(g, idx);
  g.marginal_harmonics.clear();
  const PhiDistribution nodes = marginal_phi(g, idx);
  CHECK(nodes.harmonics.empty());
  for (int n = idx.min_site(); n <= idx.max_site(); ++n) {
    CHECK(std::abs(nodes.sites.at(n) - exact.sites.at(n)) < 1e-3);
  }
  for (int power : {0, 1, 2}) {
    CHECK(std::abs(nodes.moment(power) - exact.moment(power)) < 1e-6);
  }
  CHECK_THROWS_AS(exact.moment(3), std::invalid_argument);
}

TEST_CASE("sigma shrinks as the spin grows") {
  const SiteIndexing idx(6);
  double previous = 1e9;
  for (int two_j : {10, 50, 200}) {
    const SpinQuantum j(two_j);
    const DensityMatrix rho = DensityMatrix::pure(site_state(idx, j, 0));
    const double sigma =
        sigma_from_marginal(marginal_phi(wigner_grid(rho, GridResolution::defaults(j, 6), kernel_weights(j)), idx));
    CHECK(sigma < previous);
    CHECK(sigma > 0.0);
    previous = sigma;
  }
}

TEST_CASE("sigma_from_marginal rejects an unnormalized density") {
  const SpinQuantum j(10);
  const SiteIndexing idx(6);
  PhiDistribution p = marginal_phi(
      wigner_grid(DensityMatrix::maximally_mixed(j), GridResolution::defaults(j, 6), kernel_weights(j)), idx);
  for (auto& h : p.harmonics) h *= 1.01;
  CHECK_THROWS_AS(sigma_from_marginal(p), std::invalid_argument);
}
