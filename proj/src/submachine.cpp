#include "subbeaver/submachine.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <vector>

#include "subbeaver/errors.hpp"

namespace subbeaver {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
    if (x != 0 && y > kSat / x) return kSat;
    return x * y;
}

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
    return y > kSat - x ? kSat : x + y;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r = sat_mul(r, base);
        if (r == kSat || r == 0 || base == 1) break;
    }
    return r;
}

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad number '" + std::string(text) + "' in budget '" +
                                    std::string(whole) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

struct IdOf {
    std::string operator()(const ConstBudget& b) const { return "const:" + std::to_string(b.c); }
    std::string operator()(const LinearBudget& b) const {
        return "linear:" + std::to_string(b.a) + ":" + std::to_string(b.b);
    }
    std::string operator()(const PolyBudget& b) const {
        return "poly:" + std::to_string(b.a) + ":" + std::to_string(b.k) + ":" + std::to_string(b.b);
    }
    std::string operator()(const ProgBudget& b) const {
        return "prog:" + b.program.bits.compact() + "@" + std::to_string(b.meta_fuel);
    }
};

}  // namespace

Budget::Budget(Spec spec) : spec_(std::move(spec)), id_(std::visit(IdOf{}, spec_)) {
    if (auto* p = std::get_if<ProgBudget>(&spec_); p && !p->program.is_plain()) {
        throw std::invalid_argument("prog budget program must be a plain program");
    }
}

Budget Budget::parse(std::string_view text, std::uint64_t default_meta_fuel) {
    if (text.starts_with("prog:")) {
        auto rest = text.substr(5);
        std::uint64_t meta = default_meta_fuel;
        if (auto at = rest.find('@'); at != std::string_view::npos) {
            meta = parse_u64(rest.substr(at + 1), text);
            rest = rest.substr(0, at);
        }
        LString program = subbeaver::parse(BitString::from_text(rest));
        return Budget(ProgBudget{std::move(program), meta});
    }
    auto parts = split(text, ':');
    const auto& kind = parts.front();
    if (kind == "const" && parts.size() == 2) {
        return Budget(ConstBudget{parse_u64(parts[1], text)});
    }
    if (kind == "linear" && parts.size() == 3) {
        return Budget(LinearBudget{parse_u64(parts[1], text), parse_u64(parts[2], text)});
    }
    if (kind == "poly" && parts.size() == 4) {
        return Budget(PolyBudget{parse_u64(parts[1], text), parse_u64(parts[2], text),
                                 parse_u64(parts[3], text)});
    }
    throw std::invalid_argument("unrecognized budget '" + std::string(text) +
                                "' (expected const:C, linear:A:B, poly:A:K:B or prog:LEN:HEX@META)");
}

std::uint64_t budget_of(const Budget& b, const LString& w) {
    const std::uint64_t len = w.bits.size();
    struct Visitor {
        const LString& w;
        std::uint64_t len;
        std::uint64_t operator()(const ConstBudget& c) const { return c.c; }
        std::uint64_t operator()(const LinearBudget& l) const { return sat_add(sat_mul(l.a, len), l.b); }
        std::uint64_t operator()(const PolyBudget& p) const {
            return sat_add(sat_mul(p.a, sat_pow(len, p.k)), p.b);
        }
        std::uint64_t operator()(const ProgBudget& p) const {
            LString frame = subbeaver::parse(compose(p.program, std::span(&w, 1)));
            RunOutcome r = run_universal(frame, p.meta_fuel);
            if (!r.halted()) throw BudgetNotTotal(w.bits.ascii());
            return saturate_u64(r.output);
        }
    };
    return std::visit(Visitor{w, len}, b.spec());
}

SubRun evaluate_sub(const LString& w, const Budget& b) {
    std::uint64_t fuel = budget_of(b, w);
    RunOutcome r = run_universal(w, fuel);
    Natural value = r.halted() ? Natural(r.output + 1) : Natural(0);
    return {std::move(value), std::move(r), fuel};
}

Natural sub_run(const LString& w, const Budget& b) { return evaluate_sub(w, b).value; }

Natural sub_run(const BitString& w, const Budget& b) { return sub_run(parse(w), b); }

}  // namespace subbeaver
