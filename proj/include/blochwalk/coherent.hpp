#pragma once

#include "blochwalk/spin.hpp"

namespace blochwalk {

/// A walker state in the Dicke basis {|J, m>}, m = J first.
class DickeVector {
 public:
  DickeVector(SpinQuantum j, ComplexVector amplitudes);

  SpinQuantum spin() const { return j_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](int index) const { return amplitudes_(index); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  SpinQuantum j_;
  ComplexVector amplitudes_;
};

/// <a|b>.
Complex inner_product(const DickeVector& a, const DickeVector& b);

/// L equally spaced sites phi_n = n * delta_phi on the parallel at polar angle
/// theta0. Site labels live in the balanced range (-L/2, L/2].
class SiteIndexing {
 public:
  explicit SiteIndexing(int sites, double theta0 = kPi / 2);

  int sites() const { return sites_; }
  double theta0() const { return theta0_; }
  double delta_phi() const { return 2.0 * kPi / sites_; }

  int wrap(int n) const;
  double phi(int n) const { return wrap(n) * delta_phi(); }
  int min_site() const { return -((sites_ - 1) / 2); }
  int max_site() const { return sites_ / 2; }

 private:
  int sites_;
  double theta0_;
};

/// |theta, phi> expanded in the Dicke basis:
///   <J, m|theta, phi> = sqrt(C(2J, J-m)) cos^{J+m}(theta/2) sin^{J-m}(theta/2) e^{i(J-m)phi}.
/// Magnitudes are built in log domain so J = 100 near the poles does not
/// underflow intermediate factors. Throws std::invalid_argument for theta
/// outside [0, pi].
DickeVector coherent_state(SpinQuantum j, double theta, double phi);

/// |phi_n> on the walk parallel; n is wrapped modulo L.
DickeVector site_state(const SiteIndexing& indexing, SpinQuantum j, int n);

/// |<theta1 phi1|theta2 phi2>| = cos^{2J}(Theta/2), Theta the angle between
/// the two directions.
double overlap_modulus(double theta1, double phi1, double theta2, double phi2, SpinQuantum j);

/// |<phi_m|phi_n>| = [(cos((m-n) delta_phi) + 1) / 2]^J on the equator.
/// Throws std::invalid_argument unless indexing.theta0() == pi/2.
double overlap_equator(int m, int n, const SiteIndexing& indexing, SpinQuantum j);

}  // namespace blochwalk
