#pragma once

// The concrete self-delimiting language:
//
//   LString     := Plain | Application
//   Plain       := '0' delta(n + 1) Instruction{n}
//   Application := '1' delta(k) Plain LString{k}        (k >= 1)
//   Instruction := opcode(3 bits) [delta(m + 1) for LIT m | delta(d) for JZ/JB d]
//
// Membership is decided by parse(); every accepted string is consumed exactly.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "subbeaver/bitstring.hpp"
#include "subbeaver/natural.hpp"
#include "subbeaver/program.hpp"

namespace subbeaver {

/// Witness constants for the language's size inequalities.
struct LanguageConstants {
    /// Framing overhead per argument of a composition, in bits.
    static constexpr unsigned kConcatOverhead = 8;
    /// Additive constant of the literal-program length bound, in bits.
    static constexpr unsigned kLiteralOverhead = 16;
    /// Slack on the log-log coefficient.
    static constexpr double kEpsilon = 1.0;
};

/// Elias-delta code of n >= 1. Throws std::domain_error for n = 0.
BitString delta_encode(const Natural& n);

/// |delta_encode(n)| without building the code.
std::size_t delta_length(const Natural& n);

struct DeltaDecoded {
    Natural value;
    std::size_t consumed = 0;
};

/// Decodes one delta code starting at `offset`; trailing bits are ignored.
DeltaDecoded delta_decode(const BitString& bits, std::size_t offset = 0);

/// Position of `w` in shortlex order of all bit strings, starting at 0 for the empty string.
Natural rank(const BitString& w);
BitString unrank(const Natural& k);

struct LString;

struct PlainForm {
    Program body;
};

struct ApplicationForm {
    BitString head_bits;
    Program head;
    std::vector<LString> args;
};

/// A member of the language together with its decomposition.
struct LString {
    BitString bits;
    std::variant<PlainForm, ApplicationForm> form;

    bool is_plain() const noexcept { return std::holds_alternative<PlainForm>(form); }
    const PlainForm& plain() const { return std::get<PlainForm>(form); }
    const ApplicationForm& application() const { return std::get<ApplicationForm>(form); }
};

/// Full parse; the whole input must be consumed. Throws ParseError.
LString parse(const BitString& bits);

/// Membership test that never throws.
bool is_member(const BitString& bits) noexcept;

/// Bits of the Plain program holding `body`.
BitString encode_plain(const Program& body);

/// Bits of the instruction stream alone (no tag, no count).
BitString encode_instructions(const Program& body);

/// Plain LString for `body`.
LString make_plain(const Program& body);

/// '1' delta(k) head args... ; head must be Plain and args nonempty (std::domain_error otherwise).
BitString compose(const LString& head, std::span<const LString> args);

/// The program that pushes N and halts: '0' delta(2) LIT delta(N + 1).
LString lit_program(const Natural& n);

/// Upper bound on |lit_program(N)| given by the language constants.
double lit_program_bound(const Natural& n);

/// Indented multi-line rendering of the parse tree.
std::string describe(const LString& s);

}  // namespace subbeaver
