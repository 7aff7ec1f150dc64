#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "subbeaver/beaver.hpp"
#include "subbeaver/codec.hpp"
#include "subbeaver/omega.hpp"
#include "subbeaver/submachine.hpp"

namespace subbeaver {

/// No n0 <= cap makes the candidate's frame short enough.
class CapTooSmall : public std::runtime_error {
public:
    CapTooSmall(std::size_t cap, std::size_t min_frame_len)
        : std::runtime_error("cap too small: no n0 <= " + std::to_string(cap) +
                             " has frame length <= n0 (first fitting frame: " +
                             std::to_string(min_frame_len) + " bits)"),
          min_frame_len_(min_frame_len) {}

    std::size_t min_frame_len() const noexcept { return min_frame_len_; }

private:
    std::size_t min_frame_len_;
};

/// b1 allows more steps than b2 on some enumerated w.
class DominationPreconditionError : public std::invalid_argument {
public:
    DominationPreconditionError(const std::string& w, const std::string& b1, const std::string& b2)
        : std::invalid_argument("budget " + b1 + " exceeds " + b2 + " on w=" + w), w_(w) {}

    const std::string& w() const noexcept { return w_; }

private:
    std::string w_;
};

struct SubIncompressibilityReport {
    std::size_t n = 0;
    std::string budget_id;
    Natural bb_plus = 1;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::size_t cap = 0;
    /// First member (shortlex) longer than n whose value reaches bb_plus, searched up to cap.
    std::optional<BitString> frontier_witness;
    Natural frontier_value = 0;
    bool pass = false;
};

/// Asserts sub_run(w) < bb_plus(n) for every member with |w| <= n, then looks
/// for the shortest member reaching bb_plus(n) among lengths n+1..cap.
SubIncompressibilityReport check_sub_incompressibility(std::size_t n, const Budget& b, std::size_t cap,
                                                       const EvalOptions& opts = {});

/// Number of (n, w) pairs with |w| <= n <= max_n and value(w) >= bb_plus(n).
std::uint64_t count_level_violations(std::span<const Evaluation> sorted, std::span<const BBRecord> table);

struct RefutationRecord {
    LString candidate;
    std::string budget_id;
    std::size_t n0 = 0;
    BitString frame;
    std::size_t frame_len = 0;
    Natural sub_value = 0;
    Natural bb_plus_n0 = 1;
    bool gap_ok = false;
};

/// Frame compose(candidate, [lit_program(n)]).
BitString literal_frame(const LString& candidate, const Natural& n);

/// Smallest n0 <= cap whose literal frame fits in n0 bits. Throws CapTooSmall.
std::size_t find_n0(const LString& candidate, std::size_t cap);

/// Shows the candidate does not compute BB+ at n0: its frame is one of the
/// programs counted by bb_plus(n0), so bb_plus(n0) exceeds the frame's output.
RefutationRecord refute_candidate(const LString& candidate, const Budget& b, std::size_t cap,
                                  const EvalOptions& opts = {});

struct DominationSample {
    std::size_t n = 0;
    std::size_t frame_len = 0;
    Natural sub_value = 0;
    Natural bb_plus = 1;
};

struct EventualDominationReport {
    std::size_t n0 = 0;
    std::size_t cap = 0;
    std::vector<DominationSample> samples;  // every n in [n0, cap] whose frame fits
    bool pass = false;
};

/// bb_plus(n) - sub_run(frame(n)) >= 1 for each n in [n0, cap] with |frame(n)| <= n.
EventualDominationReport check_eventual_domination(const LString& candidate, const Budget& b,
                                                   std::size_t cap, const EvalOptions& opts = {});

struct StructuralReport {
    std::size_t n = 0;
    std::uint64_t members = 0;
    std::uint64_t prefix_violations = 0;
    DyadicRational kraft;
    bool pass = false;
};

/// Prefix-freeness and the Kraft sum over all members of length <= n.
StructuralReport check_structural(std::size_t n);

struct LadderReport {
    std::size_t n = 0;
    std::vector<std::string> budget_ids;
    /// rows[i][j] = bb(i + 1, budgets[j])
    std::vector<std::vector<Natural>> rows;
    /// Per adjacent pair (j, j+1): first n with a strict increase, if any.
    std::vector<std::optional<std::size_t>> first_separation;
    bool pass = false;
};

/// For budgets ordered pointwise (verified on every enumerated w, else
/// DominationPreconditionError), asserts bb(n, b_j) <= bb(n, b_j+1) for n = 1..n.
LadderReport check_ladder(std::size_t n, std::span<const Budget> budgets, const EvalOptions& opts = {});

LadderReport check_budget_domination(std::size_t n, const Budget& b1, const Budget& b2,
                                     const EvalOptions& opts = {});

nlohmann::json to_json(const SubIncompressibilityReport& r);
nlohmann::json to_json(const RefutationRecord& r);
nlohmann::json to_json(const EventualDominationReport& r);
nlohmann::json to_json(const StructuralReport& r);
nlohmann::json to_json(const LadderReport& r);

struct VerifyConfig {
    std::size_t max_len = 0;
    Budget budget{ConstBudget{10}};
    std::optional<Budget> budget2;
    std::optional<LString> candidate;
    std::size_t cap = 24;
    EvalOptions opts;
};

/// Runs the whole property suite; the document has one entry per check with a
/// "pass" flag and a top-level "pass".
nlohmann::json run_verify(const VerifyConfig& cfg);

}  // namespace subbeaver
