#include "subbeaver/vm.hpp"

#include <algorithm>
#include <limits>

namespace subbeaver {

namespace {

Natural pop(std::vector<Natural>& stack) {
    if (stack.empty()) return 0;
    Natural x = std::move(stack.back());
    stack.pop_back();
    return x;
}

// Distances beyond the program size all behave the same, so saturate.
std::size_t distance(const Natural& d) {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max() / 2;
    return d > kMax ? kMax : d.convert_to<std::size_t>();
}

}  // namespace

RunOutcome execute(const Program& body, std::vector<Natural> stack, Fuel fuel) {
    std::size_t pc = 0;
    std::uint64_t steps = 0;
    const std::size_t n = body.size();
    while (pc < n) {
        if (fuel && steps >= *fuel) return {RunStatus::OutOfFuel, 0, steps};
        const Instruction& ins = body[pc];
        ++steps;
        switch (ins.op) {
            case Opcode::Lit:
                stack.push_back(ins.operand);
                ++pc;
                break;
            case Opcode::Inc: {
                Natural x = pop(stack);
                stack.push_back(x + 1);
                ++pc;
                break;
            }
            case Opcode::Add: {
                Natural x = pop(stack);
                Natural y = pop(stack);
                stack.push_back(x + y);
                ++pc;
                break;
            }
            case Opcode::Mul: {
                Natural x = pop(stack);
                Natural y = pop(stack);
                stack.push_back(x * y);
                ++pc;
                break;
            }
            case Opcode::Dup: {
                Natural x = pop(stack);
                stack.push_back(x);
                stack.push_back(std::move(x));
                ++pc;
                break;
            }
            case Opcode::Swp: {
                Natural x = pop(stack);
                Natural y = pop(stack);
                stack.push_back(std::move(x));
                stack.push_back(std::move(y));
                ++pc;
                break;
            }
            case Opcode::Jz: {
                Natural x = pop(stack);
                if (x == 0) {
                    std::size_t d = distance(ins.operand);
                    pc = d >= n - pc ? n : pc + 1 + d;
                } else {
                    ++pc;
                }
                break;
            }
            case Opcode::Jb: {
                std::size_t d = distance(ins.operand);
                pc = d >= pc ? 0 : pc - d;
                break;
            }
        }
    }
    Natural out = stack.empty() ? Natural(0) : std::move(stack.back());
    return {RunStatus::Halted, std::move(out), steps};
}

std::vector<Natural> initial_stack(const LString& w) {
    std::vector<Natural> stack;
    if (w.is_plain()) return stack;
    const auto& args = w.application().args;
    stack.reserve(args.size());
    for (auto it = args.rbegin(); it != args.rend(); ++it) stack.push_back(rank(it->bits));
    return stack;
}

RunOutcome run_universal(const LString& w, Fuel fuel) {
    const Program& body = w.is_plain() ? w.plain().body : w.application().head;
    return execute(body, initial_stack(w), fuel);
}

RunOutcome run_universal(const BitString& w, Fuel fuel) {
    return run_universal(parse(w), fuel);
}

}  // namespace subbeaver
