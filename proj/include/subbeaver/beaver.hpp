#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subbeaver/bitstring.hpp"
#include "subbeaver/natural.hpp"
#include "subbeaver/submachine.hpp"

namespace subbeaver {

struct EvalOptions {
    std::size_t jobs = 1;
    /// Directory of the persistent run cache; no caching when empty.
    std::optional<std::filesystem::path> cache_dir;
};

/// One member of the language evaluated on the submachine.
struct Evaluation {
    BitString w;
    bool halted = false;
    Natural value = 0;  // sub_run(w, b)
    std::uint64_t steps = 0;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// Evaluates every member of length <= max_len under `b`, in shortlex order.
/// Work is split over `jobs` threads by prefix shards; the result is the same
/// for any job count. With a cache directory, known results are read from the
/// cache and new ones appended to it. A BudgetNotTotal is reported for the
/// shortlex-first offending w.
std::vector<Evaluation> evaluate_all(std::size_t max_len, const Budget& b, const EvalOptions& opts = {});

struct Tallies {
    std::uint64_t total = 0;
    std::uint64_t halted = 0;
    std::uint64_t timed_out = 0;

    friend bool operator==(const Tallies&, const Tallies&) = default;
};

struct BBRecord {
    std::size_t n = 0;
    std::string budget_id;
    Natural bb = 0;
    Natural bb_plus = 1;
    /// Shortest, then lexicographically first, member achieving bb.
    std::optional<BitString> witness;
    Tallies tallies;
    std::string vm_id;

    friend bool operator==(const BBRecord&, const BBRecord&) = default;
};

/// Records for n = 1..max_n from evaluations sorted in shortlex order.
std::vector<BBRecord> reduce_table(std::span<const Evaluation> sorted, std::size_t max_n,
                                   const std::string& budget_id);

BBRecord bb(std::size_t n, const Budget& b, const EvalOptions& opts = {});
Natural bb_plus(std::size_t n, const Budget& b, const EvalOptions& opts = {});
std::vector<BBRecord> bb_table(std::size_t max_n, const Budget& b, const EvalOptions& opts = {});

/// Header `n,bb,bb_plus,witness_len,witness_bits,halted,timed_out,total_programs` plus one row per record.
std::string render_csv(std::span<const BBRecord> table);

nlohmann::json to_json(const BBRecord& r);
nlohmann::json to_json(std::span<const BBRecord> table);

}  // namespace subbeaver
