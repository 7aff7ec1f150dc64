#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subbeaver/natural.hpp"

namespace subbeaver {

/// Opcodes in encoding order: the 3-bit code of each is its enumerator value.
enum class Opcode : std::uint8_t { Lit = 0, Inc, Add, Mul, Dup, Swp, Jz, Jb };

inline constexpr bool has_operand(Opcode op) noexcept {
    return op == Opcode::Lit || op == Opcode::Jz || op == Opcode::Jb;
}

const char* mnemonic(Opcode op) noexcept;

/// One stack-machine instruction. `operand` is the literal for LIT and the
/// jump distance (>= 1) for JZ/JB; zero and unused otherwise.
struct Instruction {
    Opcode op = Opcode::Inc;
    Natural operand = 0;

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

using Program = std::vector<Instruction>;

std::string to_string(const Instruction& ins);
std::string to_string(const Program& program);

}  // namespace subbeaver
