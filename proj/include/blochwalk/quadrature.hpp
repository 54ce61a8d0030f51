#pragma once

#include <vector>

namespace blochwalk {

struct GaussLegendre {
  std::vector<double> nodes;    // ascending in [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree
/// 2n - 1. Nodes by Newton iteration on P_n.
GaussLegendre gauss_legendre(int n);

}  // namespace blochwalk
