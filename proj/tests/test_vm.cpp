#include <doctest.h>

#include <thread>

#include "oracle.hpp"
#include "subbeaver/enumeration.hpp"
#include "subbeaver/vm.hpp"

using namespace subbeaver;

namespace {

BitString B(const char* s) { return BitString::from_ascii(s); }

RunOutcome run_body(Program body, std::vector<Natural> stack = {}, Fuel fuel = 100) {
    return execute(body, std::move(stack), fuel);
}

const LString kJbLoop = make_plain({{Opcode::Jb, 1}});

}  // namespace

TEST_CASE("execute examples") {
    CHECK(run_body({}, {}, 10) == RunOutcome{RunStatus::Halted, 0, 0});
    CHECK(run_body({{Opcode::Inc, 0}}, {}, 10) == RunOutcome{RunStatus::Halted, 1, 1});
    CHECK(run_body({{Opcode::Jb, 1}}, {}, 100) == RunOutcome{RunStatus::OutOfFuel, 0, 100});
}

TEST_CASE("opcode semantics") {
    using O = Opcode;
    CHECK(run_body({{O::Lit, 7}}).output == 7);
    CHECK(run_body({{O::Add, 0}}, {3, 4}).output == 7);
    CHECK(run_body({{O::Mul, 0}}, {3, 4}).output == 12);
    CHECK(run_body({{O::Mul, 0}}, {5}).output == 0);  // empty pop yields 0
    CHECK(run_body({{O::Dup, 0}, {O::Add, 0}}, {21}).output == 42);
    // SWP exchanges the top two: [.., 1, 2] -> [.., 2, 1]
    CHECK(run_body({{O::Swp, 0}}, {1, 2}).output == 1);
    CHECK(run_body({{O::Swp, 0}, {O::Add, 0}}, {}).output == 0);
    CHECK(run_body({{O::Dup, 0}}, {}).output == 0);

    // JZ 1 skips the next instruction when the popped value is zero.
    CHECK(run_body({{O::Jz, 1}, {O::Lit, 9}, {O::Lit, 5}}, {0}) == RunOutcome{RunStatus::Halted, 5, 2});
    CHECK(run_body({{O::Jz, 1}, {O::Lit, 9}}, {1}) == RunOutcome{RunStatus::Halted, 9, 2});
    // Jumping past the end halts.
    CHECK(run_body({{O::Jz, 100}, {O::Lit, 9}}, {}) == RunOutcome{RunStatus::Halted, 0, 1});
    // JB before the start clamps to instruction 0: INC, JB 5 loops forever.
    CHECK(run_body({{O::Inc, 0}, {O::Jb, 5}}, {}, 11) == RunOutcome{RunStatus::OutOfFuel, 0, 11});
}

TEST_CASE("huge operands behave like saturated distances") {
    Natural big = Natural(1) << 100;
    CHECK(run_body({{Opcode::Jz, big}, {Opcode::Lit, 1}}, {}).output == 0);
    CHECK(run_body({{Opcode::Lit, big}}).output == big);
    CHECK(run_body({{Opcode::Lit, 3}, {Opcode::Jb, big}}, {}, 9).steps == 9);
}

TEST_CASE("outputs grow without overflow") {
    Natural v = Natural(1) << 64;
    auto r = run_body({{Opcode::Dup, 0}, {Opcode::Mul, 0}, {Opcode::Dup, 0}, {Opcode::Mul, 0}}, {v});
    CHECK(r.output == (Natural(1) << 256));
}

TEST_CASE("run_universal examples") {
    CHECK(run_universal(B("01"), 10) == RunOutcome{RunStatus::Halted, 0, 0});
    CHECK(run_universal(B("00100001"), 10) == RunOutcome{RunStatus::Halted, 1, 1});
    CHECK(run_universal(B("110101"), 10) == RunOutcome{RunStatus::Halted, 4, 0});
    CHECK_THROWS(run_universal(B("0"), 10));
}

TEST_CASE("first argument is on top of the initial stack") {
    LString head = make_plain({});
    std::vector<LString> args{parse(B("01")), lit_program(0)};
    LString frame = parse(compose(head, args));
    auto stack = initial_stack(frame);
    REQUIRE(stack.size() == 2);
    CHECK(stack.back() == rank(B("01")));
    CHECK(stack.front() == rank(lit_program(0).bits));
    CHECK(run_universal(frame, 0).output == 4);
}

TEST_CASE("the [JB 1] loop never halts") {
    CHECK(kJbLoop.bits == B("001001111"));
    auto r = run_universal(kJbLoop, 1'000'000);
    CHECK_FALSE(r.halted());
    CHECK(r.steps == 1'000'000);
}

TEST_CASE("interpreter agrees with the reference interpreter") {
    for (const auto& w : enumerate_lstrings(16)) {
        for (std::uint64_t fuel : {0u, 3u, 40u}) {
            auto mine = run_universal(w, fuel);
            auto ref = oracle::run(*oracle::parse(w.ascii()), fuel);
            REQUIRE(mine.halted() == ref.halted);
            REQUIRE(mine.steps == ref.steps);
            if (ref.halted) REQUIRE(mine.output == ref.output);
        }
    }
}

TEST_CASE("fuel monotonicity and step accounting") {
    for (const auto& w : enumerate_lstrings(15)) {
        LString s = parse(w);
        auto at50 = run_universal(s, 50);
        REQUIRE(at50.steps <= 50);
        if (at50.halted()) {
            REQUIRE(run_universal(s, at50.steps) == at50);
            REQUIRE(run_universal(s, 500) == at50);
            REQUIRE(run_universal(s, std::nullopt) == at50);
            if (at50.steps > 0) REQUIRE_FALSE(run_universal(s, at50.steps - 1).halted());
        } else {
            for (std::uint64_t f : {0u, 1u, 10u, 49u}) REQUIRE_FALSE(run_universal(s, f).halted());
        }
    }
}

TEST_CASE("determinism across threads") {
    auto programs = enumerate_lstrings(14);
    std::vector<RunOutcome> base;
    for (const auto& w : programs) base.push_back(run_universal(w, 100));
    std::vector<std::vector<RunOutcome>> per_thread(4);
    {
        std::vector<std::jthread> pool;
        for (auto& out : per_thread) {
            pool.emplace_back([&programs, &out] {
                for (const auto& w : programs) out.push_back(run_universal(w, 100));
            });
        }
    }
    for (const auto& out : per_thread) CHECK(out == base);
}
