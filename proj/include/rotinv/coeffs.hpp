#pragma once

#include "rotinv/exact.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rotinv {

enum class CoeffKind { even, odd };

const char* to_string(CoeffKind kind);

// Index triple (j,k,n) with 0 <= 2n <= j <= k.
struct CoeffQuery {
    long j = 0, k = 0, n = 0;

    friend auto operator<=>(const CoeffQuery&, const CoeffQuery&) = default;
};

void validate_query(const CoeffQuery& q);  // throws std::invalid_argument

struct CoeffIndex {
    long a = 0, b = 0, c = 0;

    friend auto operator<=>(const CoeffIndex&, const CoeffIndex&) = default;
};

// Index domain of the coefficient tables:
// 0 <= a <= [j/2], 0 <= b <= j-2a, max(0, n-a-b) <= c <= [(k-b)/2].
std::vector<CoeffIndex> coeff_domain(const CoeffQuery& q);
bool in_coeff_domain(const CoeffQuery& q, const CoeffIndex& idx);

struct CoeffTable {
    CoeffQuery query;
    CoeffKind kind = CoeffKind::even;
    long lambda = 0;
    std::map<CoeffIndex, Rational> entries;

    // Out-of-domain lookups are zero by definition.
    Rational lookup(long a, long b, long c) const;
    Rational sum() const;

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

// Auxiliary sums entering the closed forms; zero when a<0, b<0 or a+b>n.
Rational g_function(const CoeffQuery& q, long a, long b);
Rational f_function(const CoeffQuery& q, long a, long b);

// Normalization seeds for the table entry at (0,0,n).
Rational seed_even(const CoeffQuery& q);
Rational seed_odd(const CoeffQuery& q);

// Closed-form construction: each domain index filled from exactly one of the
// four region formulas (the regions agree where their parameterizations meet).
CoeffTable table_even_closed(const CoeffQuery& q);
CoeffTable table_odd_closed(const CoeffQuery& q);

// Independent construction: seeded at (0,0,n) and grown by the staged
// three-relation recursion, each step solving exactly one unknown entry.
// Throws std::logic_error if a pivot coefficient would be zero.
CoeffTable table_even_recursive(const CoeffQuery& q);
CoeffTable table_odd_recursive(const CoeffQuery& q);

// Residual of recursion relation `rel` (1..3) at (a,b,c) when the table is
// substituted in; identically zero for a valid table, including boundary
// indices whose neighbor lookups fall outside the domain.
Rational recursion_residual(const CoeffTable& table, int rel, long a, long b, long c);

// Entry (a,b,c) computed through one specific closed-form parameterization
// (region 1..4); nullopt when the index lies outside that region's parameter
// range. Regions overlap on boundary indices and must agree there.
std::optional<Rational> closed_entry_via_region(const CoeffQuery& q, CoeffKind kind, int region,
                                                long a, long b, long c);

}  // namespace rotinv
