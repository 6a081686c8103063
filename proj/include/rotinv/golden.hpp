#pragma once

#include "rotinv/invariant.hpp"

#include <map>
#include <string>
#include <vector>

namespace rotinv {

/// One reference invariant parsed from the embedded table.
struct GoldenEntry {
    long j = 0, k = 0, l = 0;
    bool waiver = false;
    std::string waiver_note;
    ComplexSurd scalar;   // product of all numeric factors (and i)
    int zeta_power = 0;
    ScalarPoly poly;      // bracket polynomial times content; 1 if absent

    std::string label() const;

    // Full coefficient per scalar monomial: scalar * poly.
    std::map<ScalarMonomial, ComplexSurd> coefficient_map() const;
};

// The embedded reference table source text.
const char* golden_invariants_text();

// Parsed entries; throws std::runtime_error on malformed lines.
std::vector<GoldenEntry> golden_entries();

}  // namespace rotinv
