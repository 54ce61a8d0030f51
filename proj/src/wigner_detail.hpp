#pragma once

#include "blochwalk/wigner.hpp"

namespace blochwalk::detail {

/// Gauss-Legendre theta nodes (ascending theta), uniform phi nodes, zero values.
WignerGrid empty_grid(SpinQuantum j, GridResolution resolution);

/// Appends a warning when the discretized normalization misses 1 by > 1e-4.
void check_normalization(WignerGrid& grid);

}  // namespace blochwalk::detail
