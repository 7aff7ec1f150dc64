#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "subbeaver/codec.hpp"
#include "subbeaver/natural.hpp"
#include "subbeaver/program.hpp"

namespace subbeaver {

/// Identity of the machine semantics below. Persisted with every cached
/// result; bump it whenever opcode behaviour changes.
inline constexpr std::string_view kVmId = "SBVM-1";

/// Step allowance; std::nullopt means unbounded.
using Fuel = std::optional<std::uint64_t>;

enum class RunStatus { Halted, OutOfFuel };

struct RunOutcome {
    RunStatus status = RunStatus::Halted;
    Natural output = 0;  // meaningful only when halted
    std::uint64_t steps = 0;

    bool halted() const noexcept { return status == RunStatus::Halted; }

    friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/// Runs `body` from PC 0 on `stack` (top is the back). Each instruction costs one
/// step. Popping an empty stack yields 0; JZ past the end halts; JB before the
/// start clamps to 0. Output is the top of stack, or 0 if empty.
RunOutcome execute(const Program& body, std::vector<Natural> stack, Fuel fuel);

/// Initial stack for a sentence: empty for Plain, ranks of the arguments for an
/// application with the first argument on top.
std::vector<Natural> initial_stack(const LString& w);

/// The universal machine: Plain programs run on an empty stack, applications
/// run their head with the argument ranks as input.
RunOutcome run_universal(const LString& w, Fuel fuel);

/// Parses first; throws ParseError for non-members.
RunOutcome run_universal(const BitString& w, Fuel fuel);

}  // namespace subbeaver
