#include "blochwalk/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blochwalk/log_factorial.hpp"

namespace blochwalk {

DickeVector::DickeVector(SpinQuantum j, ComplexVector amplitudes)
    : j_(j), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != j_.dim()) {
    throw std::invalid_argument("DickeVector: amplitude count " +
                                std::to_string(amplitudes_.size()) + " != 2J+1 = " +
                                std::to_string(j_.dim()));
  }
}

Complex inner_product(const DickeVector& a, const DickeVector& b) {
  if (!(a.spin() == b.spin())) {
    throw std::invalid_argument("inner_product: spin mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

SiteIndexing::SiteIndexing(int sites, double theta0) : sites_(sites), theta0_(theta0) {
  if (sites < 2) {
    throw std::invalid_argument("SiteIndexing: need at least 2 sites, got " +
                                std::to_string(sites));
  }
  if (!(theta0 >= 0.0 && theta0 <= kPi)) {
    throw std::invalid_argument("SiteIndexing: theta0 outside [0, pi]");
  }
}

int SiteIndexing::wrap(int n) const {
  int r = ((n % sites_) + sites_) % sites_;
  if (2 * r > sites_) r -= sites_;
  return r;
}

DickeVector coherent_state(SpinQuantum j, double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("coherent_state: theta=" + std::to_string(theta) +
                                " outside [0, pi]");
  }
  const int two_j = j.two_j();
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double log_c = c > 0.0 ? std::log(c) : 0.0;
  const double log_s = s > 0.0 ? std::log(s) : 0.0;

  ComplexVector amps(j.dim());
  for (int p = 0; p <= two_j; ++p) {
    // p = J - m lowering steps from |J, J>.
    const int cos_power = two_j - p;
    const int sin_power = p;
    if ((cos_power > 0 && c <= 0.0) || (sin_power > 0 && s <= 0.0)) {
      amps(p) = 0.0;
      continue;
    }
    const double log_mag = 0.5 * log_binomial(two_j, p) + cos_power * log_c + sin_power * log_s;
    amps(p) = std::polar(std::exp(log_mag), p * phi);
  }
  return DickeVector(j, std::move(amps));
}

DickeVector site_state(const SiteIndexing& indexing, SpinQuantum j, int n) {
  return coherent_state(j, indexing.theta0(), indexing.phi(n));
}

double overlap_modulus(double theta1, double phi1, double theta2, double phi2, SpinQuantum j) {
  const double cos_angle = std::cos(theta1) * std::cos(theta2) +
                           std::sin(theta1) * std::sin(theta2) * std::cos(phi1 - phi2);
  // cos^2(Theta/2) = (1 + cos Theta) / 2
  const double half = std::clamp(0.5 * (1.0 + cos_angle), 0.0, 1.0);
  return std::pow(half, j.j());
}

double overlap_equator(int m, int n, const SiteIndexing& indexing, SpinQuantum j) {
  if (std::abs(indexing.theta0() - kPi / 2) > 1e-12) {
    throw std::invalid_argument("overlap_equator: walk latitude must be pi/2");
  }
  const double base = 0.5 * (std::cos((m - n) * indexing.delta_phi()) + 1.0);
  return std::pow(std::clamp(base, 0.0, 1.0), j.j());
}

}  // namespace blochwalk
