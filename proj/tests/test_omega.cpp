#include <doctest.h>

#include "oracle.hpp"
#include "subbeaver/omega.hpp"

using namespace subbeaver;

TEST_CASE("dyadic rationals stay in lowest terms") {
    DyadicRational half(2, 2);
    CHECK(half.numerator() == 1);
    CHECK(half.log2_denominator() == 1);
    CHECK(DyadicRational(0, 9) == DyadicRational());
    CHECK(DyadicRational(0, 9).log2_denominator() == 0);
    CHECK(DyadicRational(8, 2) == DyadicRational(2, 0));

    auto sum = DyadicRational::inverse_power(2) + DyadicRational::inverse_power(6);
    CHECK(sum.fraction() == "17/2^6");
    CHECK(DyadicRational::inverse_power(1) + DyadicRational::inverse_power(1) == DyadicRational(1, 0));
    CHECK(DyadicRational(3, 2) < DyadicRational(1, 0));
    CHECK(DyadicRational(1, 1) > DyadicRational(63, 7));
    CHECK(DyadicRational(64, 7) == DyadicRational(1, 1));
}

TEST_CASE("decimal rendering") {
    CHECK(DyadicRational(17, 6).decimal() == "0.265625");
    CHECK(DyadicRational(0, 0).decimal() == "0");
    CHECK(DyadicRational(5, 0).decimal() == "5");
    CHECK(DyadicRational(3, 1).decimal() == "1.5");
    CHECK(DyadicRational(1, 40).decimal(5) == "0.00000000000090949");
    CHECK(DyadicRational(1, 3).decimal(1) == "0.1");
}

TEST_CASE("omega_lower examples") {
    Budget c10 = Budget::parse("const:10");
    CHECK(omega_lower(1, c10).value == DyadicRational());
    CHECK(omega_lower(1, Budget::parse("const:0")).value == DyadicRational());
    CHECK(omega_lower(2, c10).value == DyadicRational(1, 2));
    auto six = omega_lower(6, c10);
    CHECK(six.value == DyadicRational(17, 6));
    CHECK(six.tallies.halted == 2);
    CHECK(six.tallies.timed_out == 0);
}

TEST_CASE("omega_lower is monotone and bounded by the Kraft sum") {
    const Budget ladder[] = {Budget::parse("const:0"), Budget::parse("const:10"), Budget::parse("const:1000")};
    std::vector<DyadicRational> prev(3);
    for (std::size_t n = 0; n <= 14; ++n) {
        DyadicRational kraft = kraft_sum(n);
        REQUIRE(kraft <= DyadicRational(1, 0));
        for (std::size_t j = 0; j < 3; ++j) {
            auto v = omega_lower(n, ladder[j]).value;
            REQUIRE(prev[j] <= v);
            REQUIRE(v <= kraft);
            if (j > 0) REQUIRE(omega_lower(n, ladder[j - 1]).value <= v);
            prev[j] = v;
        }
    }
}

TEST_CASE("omega_lower agrees with a filter-all-strings summation") {
    for (std::uint64_t fuel : {0u, 10u}) {
        Budget b(ConstBudget{fuel});
        for (std::size_t n : {2u, 8u, 12u}) {
            DyadicRational ref;
            for (const auto& w : oracle::brute_force_members(n)) {
                if (oracle::sub_run(w, fuel) > 0) ref += DyadicRational::inverse_power(w.size());
            }
            REQUIRE(omega_lower(n, b).value == ref);
        }
    }
}
