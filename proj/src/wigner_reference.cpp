#include "blochwalk/wigner.hpp"

#include <stdexcept>
#include <string>

#include "wigner_detail.hpp"

namespace blochwalk {

double wigner_at(const DensityMatrix& rho, double theta, double phi, const KernelWeights& weights,
                 const WignerRotation& rotation) {
  if (!(rho.spin() == weights.spin()) || !(rho.spin() == rotation.spin())) {
    throw std::invalid_argument("wigner_at: spin mismatch");
  }
  const ComplexMatrix frame = rotated_dicke_frame(rotation, theta, phi);
  const ComplexMatrix rho_frame = rho.matrix() * frame;
  Complex w = 0.0;
  for (int m = 0; m < frame.cols(); ++m) {
    w += weights[m] * frame.col(m).dot(rho_frame.col(m));
  }
  if (std::abs(w.imag()) > 1e-8) {
    throw NumericalError("wigner_at: imaginary residue " + std::to_string(w.imag()));
  }
  return w.real();
}

double wigner_at(const DensityMatrix& rho, double theta, double phi, const KernelWeights& weights) {
  return wigner_at(rho, theta, phi, weights, WignerRotation(rho.spin()));
}

WignerGrid wigner_grid_reference(const DensityMatrix& rho, GridResolution resolution,
                                 const KernelWeights& weights) {
  WignerGrid grid = detail::empty_grid(rho.spin(), resolution);
  const WignerRotation rotation(rho.spin());
  for (int i = 0; i < resolution.n_theta; ++i) {
    for (int k = 0; k < resolution.n_phi; ++k) {
      grid.values(i, k) = wigner_at(rho, grid.theta[static_cast<std::size_t>(i)],
                                    grid.phi[static_cast<std::size_t>(k)], weights, rotation);
    }
  }
  detail::check_normalization(grid);
  return grid;
}

}  // namespace blochwalk
