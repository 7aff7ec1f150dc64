#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "subbeaver/codec.hpp"
#include "subbeaver/natural.hpp"
#include "subbeaver/vm.hpp"

namespace subbeaver {

inline constexpr std::uint64_t kDefaultMetaFuel = 1'000'000;

struct ConstBudget {
    std::uint64_t c = 0;
};

/// fuel = a * |w| + b
struct LinearBudget {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

/// fuel = a * |w|^k + b
struct PolyBudget {
    std::uint64_t a = 0;
    std::uint64_t k = 0;
    std::uint64_t b = 0;
};

/// fuel = U(program o w), evaluated with at most `meta_fuel` steps.
struct ProgBudget {
    LString program;
    std::uint64_t meta_fuel = kDefaultMetaFuel;
};

/// A computation-time function: maps each sentence to its step allowance.
/// Native forms depend only on |w|; arithmetic saturates at 2^64 - 1.
class Budget {
public:
    using Spec = std::variant<ConstBudget, LinearBudget, PolyBudget, ProgBudget>;

    explicit Budget(Spec spec);

    /// Parses the canonical id grammar:
    ///   const:<c> | linear:<a>:<b> | poly:<a>:<k>:<b> | prog:<len:hex>[@<meta_fuel>]
    /// A prog budget without '@' gets `default_meta_fuel`. Throws std::invalid_argument.
    static Budget parse(std::string_view text, std::uint64_t default_meta_fuel = kDefaultMetaFuel);

    const Spec& spec() const noexcept { return spec_; }
    const std::string& id() const noexcept { return id_; }
    bool is_native() const noexcept { return !std::holds_alternative<ProgBudget>(spec_); }

private:
    Spec spec_;
    std::string id_;
};

/// Step allowance for `w`. Throws BudgetNotTotal when a prog budget runs out of meta-fuel.
std::uint64_t budget_of(const Budget& b, const LString& w);

/// Result of running a sentence inside the time-bounded submachine.
struct SubRun {
    Natural value;  // 0 on timeout, output + 1 otherwise
    RunOutcome run;
    std::uint64_t fuel = 0;
};

SubRun evaluate_sub(const LString& w, const Budget& b);

/// The total machine U_{P_T}: 0 if U(w) does not halt within budget_of(b, w)
/// steps (inclusive), otherwise U(w) + 1.
Natural sub_run(const LString& w, const Budget& b);
Natural sub_run(const BitString& w, const Budget& b);

}  // namespace subbeaver
