#pragma once

#include "rotinv/cartesian.hpp"

namespace rotinv {

/// Racah-normalized solid harmonic C^l_m as an exact homogeneous degree-l
/// polynomial in the components of vector `slot` (1..3). Normalized so the
/// coefficient of z^l in C^l_0 is 1, which keeps all arithmetic free of pi.
/// Requires |m| <= l.
CartesianPoly racah_solid_harmonic(int l, int m, int slot);

}  // namespace rotinv
