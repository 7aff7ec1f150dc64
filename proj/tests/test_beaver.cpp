#include <doctest.h>

#include "oracle.hpp"
#include "subbeaver/beaver.hpp"
#include "subbeaver/enumeration.hpp"
#include "subbeaver/errors.hpp"

using namespace subbeaver;

namespace {

BitString B(const char* s) { return BitString::from_ascii(s); }

// Busy beaver by brute force over all bit strings, with the reference interpreter.
std::pair<oracle::Nat, std::string> oracle_bb(std::size_t n, std::uint64_t fuel) {
    oracle::Nat best = 0;
    std::string witness;
    for (const auto& w : oracle::brute_force_members(n)) {
        auto v = oracle::sub_run(w, fuel);
        if (witness.empty() || v > best) {
            best = v;
            witness = w;
        }
    }
    return {best, witness};
}

}  // namespace

TEST_CASE("bb examples") {
    Budget c10 = Budget::parse("const:10");
    BBRecord two = bb(2, c10);
    CHECK(two.bb == 1);
    CHECK(two.bb_plus == 2);
    CHECK(two.witness == B("01"));

    BBRecord six = bb(6, c10);
    CHECK(six.bb == 5);
    CHECK(six.witness == B("110101"));
    CHECK(six.tallies == Tallies{2, 2, 0});
    CHECK(six.vm_id == "SBVM-1");
    CHECK(six.budget_id == "const:10");

    for (const char* id : {"const:0", "const:10", "linear:2:3"}) {
        BBRecord one = bb(1, Budget::parse(id));
        CHECK(one.bb == 0);
        CHECK(one.bb_plus == 1);
        CHECK_FALSE(one.witness.has_value());
        CHECK(bb_plus(1, Budget::parse(id)) == 1);
    }
    CHECK(bb(0, c10).bb == 0);
    CHECK(bb_plus(2, c10) == 2);
    CHECK(bb_plus(6, c10) == 6);
}

TEST_CASE("bb_table examples") {
    auto t = bb_table(2, Budget::parse("const:10"));
    REQUIRE(t.size() == 2);
    CHECK(t[0].n == 1);
    CHECK(t[0].bb == 0);
    CHECK(t[1].n == 2);
    CHECK(t[1].bb == 1);

    auto lo = bb_table(8, Budget::parse("const:0"));
    auto hi = bb_table(8, Budget::parse("const:10"));
    for (std::size_t i = 0; i < 8; ++i) CHECK(lo[i].bb <= hi[i].bb);
}

TEST_CASE("bb agrees with the brute-force oracle") {
    for (std::uint64_t fuel : {0u, 1u, 10u, 50u}) {
        Budget b(ConstBudget{fuel});
        auto table = bb_table(14, b);
        for (std::size_t n = 2; n <= 14; ++n) {
            auto [best, witness] = oracle_bb(n, fuel);
            REQUIRE(table[n - 1].bb == best);
            REQUIRE(table[n - 1].witness->ascii() == witness);
        }
    }
}

TEST_CASE("record invariants") {
    for (const char* id : {"const:0", "const:7", "linear:2:3", "poly:1:2:0"}) {
        Budget b = Budget::parse(id);
        auto table = bb_table(16, b);
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& r = table[i];
            REQUIRE(r.n == i + 1);
            REQUIRE(r.bb_plus == r.bb + 1);
            REQUIRE(r.tallies.total == r.tallies.halted + r.tallies.timed_out);
            REQUIRE(r.tallies.total == count_valid(r.n));
            if (i > 0) REQUIRE(table[i - 1].bb <= r.bb);
            if (r.witness) {
                REQUIRE(r.witness->size() <= r.n);
                REQUIRE(sub_run(*r.witness, b) == r.bb);
            }
        }
    }
}

TEST_CASE("parallel and sequential tables are identical") {
    Budget b = Budget::parse("linear:2:3");
    auto one = bb_table(16, b, {1, std::nullopt});
    auto eight = bb_table(16, b, {8, std::nullopt});
    CHECK(one == eight);
    CHECK(render_csv(one) == render_csv(eight));
    CHECK(evaluate_all(16, b, {1, std::nullopt}) == evaluate_all(16, b, {3, std::nullopt}));
}

TEST_CASE("budget errors name the shortlex-first offender regardless of jobs") {
    Budget loop(ProgBudget{make_plain({{Opcode::Jb, 1}}), 50});
    for (std::size_t jobs : {1u, 4u}) {
        try {
            bb_table(8, loop, {jobs, std::nullopt});
            FAIL("expected BudgetNotTotal");
        } catch (const BudgetNotTotal& e) {
            CHECK(e.w() == "01");
        }
    }
}

TEST_CASE("csv and json rendering") {
    auto table = bb_table(6, Budget::parse("const:10"));
    std::string csv = render_csv(table);
    CHECK(csv.starts_with("n,bb,bb_plus,witness_len,witness_bits,halted,timed_out,total_programs\n"
                          "1,0,1,0,,0,0,0\n"
                          "2,1,2,2,01,1,0,1\n"));
    CHECK(csv.ends_with("\n6,5,6,6,110101,2,0,2\n"));

    auto j = to_json(table.back());
    CHECK(j["n"] == 6);
    CHECK(j["bb"] == "5");
    CHECK(j["bb_plus"] == "6");
    CHECK(j["witness"] == "110101");
    CHECK(j["tallies"]["total"] == 2);
    CHECK(j["vm_id"] == "SBVM-1");
    CHECK(to_json(table.front())["witness"].is_null());
}
