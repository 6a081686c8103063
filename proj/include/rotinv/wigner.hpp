#pragma once

#include "rotinv/surd.hpp"

namespace rotinv {

struct ThreeJArgs {
    long j1 = 0, j2 = 0, j3 = 0;
    long m1 = 0, m2 = 0, m3 = 0;
};

bool triangle_ok(long j, long k, long l);

// (-1)^(j+k+l); meaningful for triangle-valid triples.
int wigner3j_permutation_phase(long j, long k, long l);

// Exact 3-j value for integer angular momenta. Always a single surd term
// sign * coef * sqrt(squarefree); selection-rule failures give zero, not errors.
SurdSum wigner3j(const ThreeJArgs& args);
SurdSum wigner3j(long j1, long j2, long j3, long m1, long m2, long m3);

}  // namespace rotinv
