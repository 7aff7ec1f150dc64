#include "subbeaver/program.hpp"

namespace subbeaver {

const char* mnemonic(Opcode op) noexcept {
    switch (op) {
        case Opcode::Lit: return "LIT";
        case Opcode::Inc: return "INC";
        case Opcode::Add: return "ADD";
        case Opcode::Mul: return "MUL";
        case Opcode::Dup: return "DUP";
        case Opcode::Swp: return "SWP";
        case Opcode::Jz: return "JZ";
        case Opcode::Jb: return "JB";
    }
    return "?";
}

std::string to_string(const Instruction& ins) {
    std::string out = mnemonic(ins.op);
    if (has_operand(ins.op)) out += " " + ins.operand.str();
    return out;
}

std::string to_string(const Program& program) {
    std::string out = "[";
    for (std::size_t i = 0; i < program.size(); ++i) {
        if (i) out += ", ";
        out += to_string(program[i]);
    }
    return out + "]";
}

}  // namespace subbeaver
