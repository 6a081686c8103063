#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotinv/cache.hpp"
#include "rotinv/coeffs.hpp"
#include "rotinv/errors.hpp"

using namespace rotinv;

TEST_CASE("query validation") {
    CHECK_NOTHROW(validate_query({0, 0, 0}));
    CHECK_NOTHROW(validate_query({2, 5, 1}));
    CHECK_THROWS_AS(validate_query({3, 2, 0}), std::invalid_argument);  // j > k
    CHECK_THROWS_AS(validate_query({2, 4, 2}), std::invalid_argument);  // 2n > j
    CHECK_THROWS_AS(validate_query({1, 1, -1}), std::invalid_argument);
}

TEST_CASE("index domain") {
    CoeffQuery q{2, 2, 1};
    auto domain = coeff_domain(q);
    CHECK(domain.size() == 5);
    for (const auto& idx : domain) CHECK(in_coeff_domain(q, idx));
    CHECK(!in_coeff_domain(q, {0, 0, 0}));  // c below n-a-b
    CHECK(!in_coeff_domain(q, {2, 0, 0}));  // a above j/2
    CHECK(!in_coeff_domain(q, {0, 0, 2}));  // c above (k-b)/2
}

TEST_CASE("auxiliary sums, frozen from a term-by-term evaluation") {
    CHECK(g_function({2, 2, 0}, 0, 0) == 1);
    CHECK(g_function({2, 2, 1}, 1, 1) == 0);  // a + b > n
    CHECK(g_function({2, 2, 1}, -1, 0) == 0);
    CHECK(g_function({2, 2, 1}, 0, -2) == 0);
    CHECK(g_function({2, 2, 1}, 1, 0) == 6);
    CHECK(g_function({2, 2, 1}, 0, 1) == -9);

    CHECK(f_function({2, 2, 0}, 0, 0) == 1);
    CHECK(f_function({2, 2, 1}, 0, 2) == 0);  // a + b > n
    CHECK(f_function({3, 3, 1}, 1, 0) == 21);
    CHECK(f_function({3, 3, 1}, 0, 1) == -49);
}

TEST_CASE("normalization seeds") {
    CHECK(seed_even({0, 0, 0}) == 1);
    CHECK(seed_even({1, 1, 0}) == 6);
    CHECK(seed_even({2, 2, 1}) == 18);
    CHECK(seed_odd({0, 0, 0}) == 1);
    CHECK(seed_odd({2, 2, 1}) == 50);
}

TEST_CASE("closed-form tables, frozen values") {
    CoeffTable trivial = table_even_closed({0, 0, 0});
    CHECK(trivial.entries == std::map<CoeffIndex, Rational>{{{0, 0, 0}, 1}});
    CHECK(trivial.lambda == 0);
    CHECK(table_odd_closed({0, 0, 0}).entries == std::map<CoeffIndex, Rational>{{{0, 0, 0}, 1}});

    CoeffTable t110 = table_even_closed({1, 1, 0});
    CHECK(t110.entries == std::map<CoeffIndex, Rational>{{{0, 0, 0}, 6}, {{0, 1, 0}, -2}});
    CHECK(t110.sum() == 4);

    CoeffTable t221 = table_even_closed({2, 2, 1});
    CHECK(t221.entries == std::map<CoeffIndex, Rational>{{{0, 0, 1}, 18},
                                                         {{0, 1, 0}, -54},
                                                         {{0, 2, 0}, 18},
                                                         {{1, 0, 0}, 18},
                                                         {{1, 0, 1}, -12}});
    CHECK(t221.lambda == 1);

    CoeffTable odd221 = table_odd_closed({2, 2, 1});
    CHECK(odd221.entries == std::map<CoeffIndex, Rational>{{{0, 0, 1}, 50},
                                                           {{0, 1, 0}, -250},
                                                           {{0, 2, 0}, 50},
                                                           {{1, 0, 0}, 50},
                                                           {{1, 0, 1}, -20}});
}

TEST_CASE("out-of-domain lookups are zero") {
    CoeffTable t = table_even_closed({2, 2, 1});
    CHECK(t.lookup(-1, 0, 1) == 0);
    CHECK(t.lookup(0, 0, 0) == 0);
    CHECK(t.lookup(0, 0, 1) == 18);
}

TEST_CASE("recursion solver equals the closed form") {
    for (long k = 0; k <= 5; ++k)
        for (long j = 0; j <= k; ++j)
            for (long n = 0; 2 * n <= j; ++n) {
                CoeffQuery q{j, k, n};
                CHECK(table_even_recursive(q).entries == table_even_closed(q).entries);
                CHECK(table_odd_recursive(q).entries == table_odd_closed(q).entries);
            }
}

TEST_CASE("recursion residuals vanish over the whole domain") {
    for (CoeffQuery q : {CoeffQuery{2, 2, 1}, CoeffQuery{3, 4, 1}, CoeffQuery{4, 5, 2}, CoeffQuery{5, 5, 2}}) {
        for (CoeffKind kind : {CoeffKind::even, CoeffKind::odd}) {
            CoeffTable t = kind == CoeffKind::even ? table_even_closed(q) : table_odd_closed(q);
            for (const auto& [idx, v] : t.entries)
                for (int rel = 1; rel <= 3; ++rel)
                    CHECK(recursion_residual(t, rel, idx.a, idx.b, idx.c) == 0);
        }
    }
}

TEST_CASE("region parameterizations agree on shared indices") {
    for (CoeffQuery q : {CoeffQuery{2, 2, 1}, CoeffQuery{3, 4, 1}, CoeffQuery{4, 4, 2}, CoeffQuery{4, 6, 1}}) {
        for (CoeffKind kind : {CoeffKind::even, CoeffKind::odd}) {
            CoeffTable t = kind == CoeffKind::even ? table_even_closed(q) : table_odd_closed(q);
            for (const auto& [idx, value] : t.entries) {
                int covered = 0;
                for (int region = 1; region <= 4; ++region) {
                    auto via = closed_entry_via_region(q, kind, region, idx.a, idx.b, idx.c);
                    if (!via) continue;
                    ++covered;
                    CHECK(*via == value);
                }
                CHECK(covered >= 1);
            }
        }
    }
    // Boundary indices genuinely reachable through two parameterizations.
    CHECK(closed_entry_via_region({2, 2, 1}, CoeffKind::even, 1, 1, 0, 0).has_value());
    CHECK(closed_entry_via_region({2, 2, 1}, CoeffKind::even, 2, 1, 0, 0).has_value());
    CHECK(closed_entry_via_region({2, 2, 1}, CoeffKind::even, 3, 1, 0, 0).has_value());
    CHECK(closed_entry_via_region({2, 2, 1}, CoeffKind::even, 4, 1, 0, 0).has_value());
}

namespace {

// Independent transcription of the above-diagonal closed form with naive
// summation bounds (r from s instead of max(s, c-a)); the zero guards of the
// auxiliary sums must make the extra terms vanish on their own.
Rational above_diag_naive(const CoeffQuery& q, CoeffKind kind, long a, long b, long c) {
    auto gf = kind == CoeffKind::even ? g_function : f_function;
    int plus = kind == CoeffKind::even ? 1 : 3;
    const long j = q.j, k = q.k, n = q.n;
    Rational sum = 0;
    for (long s = 0; s <= b; ++s)
        for (long r = s; r <= c; ++r) {
            Rational t = gf(q, a - c + r, b - s);
            t *= Rational((BigInt(1) << s) * factorial(c) * factorial(j - n) * factorial(k - n),
                          factorial(c - r) * factorial(r - s) * factorial(s) * factorial(j - 2 * a - b) *
                              factorial(k - 2 * n + 2 * a + b - 2 * c));
            sum += (c % 2) ? -t : t;
        }
    long lambda = (j + k) / 2 - n;
    for (long m = c + 1; m <= lambda; ++m) sum *= Rational(2 * m * (2 * j + 2 * k - 4 * n - 2 * m + plus));
    return sum;
}

}  // namespace

TEST_CASE("guarded terms vanish without the adjusted bounds") {
    for (CoeffQuery q : {CoeffQuery{2, 2, 1}, CoeffQuery{3, 4, 1}, CoeffQuery{4, 5, 2}}) {
        for (CoeffKind kind : {CoeffKind::even, CoeffKind::odd}) {
            for (long a = 0; a <= q.n; ++a)
                for (long b = 0; b <= q.n - a; ++b)
                    for (long shifted = 0; shifted + q.n - a - b <= (q.k - b) / 2; ++shifted) {
                        long c = q.n - a - b + shifted;
                        auto via = closed_entry_via_region(q, kind, 2, a, b, c);
                        REQUIRE(via.has_value());
                        CHECK(above_diag_naive(q, kind, a, b, shifted) == *via);
                    }
        }
    }
}

TEST_CASE("entries are integers at the chosen lambda, k <= 5") {
    for (long k = 0; k <= 5; ++k)
        for (long j = 0; j <= k; ++j)
            for (long n = 0; 2 * n <= j; ++n) {
                for (const auto& [idx, v] : table_even_closed({j, k, n}).entries)
                    CHECK(denominator(v) == 1);
                for (const auto& [idx, v] : table_odd_closed({j, k, n}).entries)
                    CHECK(denominator(v) == 1);
            }
}

TEST_CASE("cache documents round-trip bit-exactly") {
    CoeffTable t = table_odd_closed({2, 3, 1});
    std::string doc = cache_document(t);
    CoeffTable back = parse_cache_document(doc);
    CHECK(back == t);
    CHECK(cache_document(back) == doc);

    std::string built = build_cache_text(3);
    CHECK(built == build_cache_text(3));  // deterministic regeneration
    auto manifest = inspect_cache_text(built);
    // kinds x (j <= k <= 3) x valid n: 2 * (1+1+1+1 + 1+1+1 + 2+2 + 2) = 26
    CHECK(manifest.size() == 26);
}

TEST_CASE("corrupt cache documents name the offending key") {
    CHECK_THROWS_AS(parse_cache_document("not json"), CacheCorrupt);
    CHECK_THROWS_AS(parse_cache_document("{\"kind\":\"even\",\"j\":0,\"k\":0,\"n\":0}"), CacheCorrupt);

    std::string doc = cache_document(table_even_closed({1, 1, 0}));
    std::string bad_value = doc;
    bad_value.replace(bad_value.find("6/1"), 3, "6/x");
    try {
        parse_cache_document(bad_value);
        FAIL("expected CacheCorrupt");
    } catch (const CacheCorrupt& e) {
        CHECK(e.key.find("0,0,0") != std::string::npos);
    }

    std::string missing = doc;
    auto cut = missing.find(",\"0,1,0\"");
    missing.erase(cut, missing.find('}', cut) - cut);  // drop one entry
    CHECK_THROWS_AS(parse_cache_document(missing), CacheCorrupt);

    CHECK_THROWS_AS(parse_cache_document(
                        "{\"kind\":\"even\",\"j\":1,\"k\":1,\"n\":0,\"lambda\":5,\"entries\":{}}"),
                    CacheCorrupt);
}
