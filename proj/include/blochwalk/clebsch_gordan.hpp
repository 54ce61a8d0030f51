#pragma once

namespace blochwalk {

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
/// convention. Every argument is passed doubled (two_j1 = 2*j1, ...), so
/// half-integer quantum numbers are exact.
///
/// Evaluated with the Racah sum in log domain. When the alternating sum
/// cancels badly (large j, tested up to j = 100) the sum is recomputed in
/// 50-digit floating point.
///
/// Returns 0 when M != m1 + m2 or the triangle condition fails. Throws
/// std::invalid_argument for negative j, |m| > j, or mismatched j/m parity.
double cg_coefficient(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);

}  // namespace blochwalk
