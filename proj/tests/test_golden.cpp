#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotinv/golden.hpp"
#include "rotinv/verify.hpp"

using namespace rotinv;

TEST_CASE("embedded table parses completely") {
    auto entries = golden_entries();
    CHECK(entries.size() == 40);

    std::size_t waivers = 0;
    for (const auto& e : entries)
        if (e.waiver) {
            ++waivers;
            CHECK(e.j == 2);
            CHECK(e.k == 6);
            CHECK(e.l == 7);
            CHECK(!e.waiver_note.empty());
        }
    CHECK(waivers == 1);
}

TEST_CASE("parsed entries carry exact values") {
    auto entries = golden_entries();
    const GoldenEntry* i022 = nullptr;
    const GoldenEntry* i111 = nullptr;
    for (const auto& e : entries) {
        if (e.j == 0 && e.k == 2 && e.l == 2) i022 = &e;
        if (e.j == 1 && e.k == 1 && e.l == 1) i111 = &e;
    }
    REQUIRE(i022 != nullptr);
    REQUIRE(i111 != nullptr);

    auto coeffs = i022->coefficient_map();
    REQUIRE(coeffs.size() == 2);
    SurdSum pre = SurdSum::sqrt_of(Rational(1, 5));
    CHECK(coeffs.at(ScalarMonomial{0, 0, 0, 2, 0, 0}) == ComplexSurd(pre * Rational(3, 2)));
    CHECK(coeffs.at(ScalarMonomial{0, 1, 1, 0, 0, 0}) == ComplexSurd(pre * Rational(-1, 2)));

    CHECK(i111->zeta_power == 1);
    CHECK(i111->coefficient_map().at(ScalarMonomial{}) ==
          ComplexSurd(SurdSum(), SurdSum::sqrt_of(Rational(1, 6))));
}

TEST_CASE("every published entry is reproduced, with the single waiver") {
    std::size_t passes = 0, waived = 0, failures = 0;
    for (const CheckResult& r : run_verify({.max_l = 0, .suite = "golden"})) {
        if (r.status == "pass") ++passes;
        else if (r.status == "waived") ++waived;
        else ++failures;
    }
    CHECK(passes == 39);
    CHECK(waived == 1);
    CHECK(failures == 0);
}

TEST_CASE("small verify run passes every suite") {
    auto results = run_verify({.max_l = 2, .suite = "all"});
    for (const auto& r : results) {
        CAPTURE(r.suite);
        CAPTURE(r.spec);
        CAPTURE(r.detail);
        CHECK(r.status != "fail");
    }
    CHECK(all_passed(results));
}
