#include "subbeaver/beaver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iostream>
#include <mutex>
#include <thread>

#include "subbeaver/enumeration.hpp"
#include "subbeaver/errors.hpp"
#include "subbeaver/store.hpp"
#include "subbeaver/vm.hpp"

namespace subbeaver {

namespace {

struct ShardResult {
    std::vector<Evaluation> evaluations;
    std::vector<RunRecord> fresh;
    std::optional<BitString> failed;  // shortlex-first w whose budget was not total
};

Evaluation from_record(const RunRecord& r) { return {r.w, r.halted, r.output, r.steps}; }

void evaluate_shard(const EnumerationShard& shard, const Budget& b, const Store* cache,
                    ShardResult& out) {
    for_each_lstring(shard, [&](const BitString& w) {
        if (cache) {
            if (auto hit = cache->get(w, b.id(), kVmId)) {
                out.evaluations.push_back(from_record(*hit));
                return;
            }
        }
        try {
            SubRun r = evaluate_sub(parse(w), b);
            RunRecord rec{w, b.id(), std::string(kVmId), r.run.halted(), r.value, r.run.steps};
            out.evaluations.push_back(from_record(rec));
            if (cache) out.fresh.push_back(std::move(rec));
        } catch (const BudgetNotTotal&) {
            if (!out.failed || w < *out.failed) out.failed = w;
        }
    });
}

}  // namespace

std::vector<Evaluation> evaluate_all(std::size_t max_len, const Budget& b, const EvalOptions& opts) {
    const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);

    Store cache;
    std::optional<std::filesystem::path> cache_path;
    if (opts.cache_dir) {
        cache_path = cache_file(*opts.cache_dir, b.id(), kVmId);
        if (std::filesystem::exists(*cache_path)) cache = Store::load(*cache_path, &std::cerr);
    }
    const Store* cache_ptr = cache_path ? &cache : nullptr;

    std::vector<EnumerationShard> shards =
        jobs == 1 ? std::vector<EnumerationShard>{{max_len, {}}} : prefix_cover(max_len, jobs * 4);
    std::vector<ShardResult> results(shards.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < shards.size();) {
            try {
                evaluate_shard(shards[i], b, cache_ptr, results[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    std::optional<BitString> failed;
    std::vector<Evaluation> all;
    std::vector<RunRecord> fresh;
    for (auto& r : results) {
        if (r.failed && (!failed || *r.failed < *failed)) failed = r.failed;
        std::move(r.evaluations.begin(), r.evaluations.end(), std::back_inserter(all));
        std::move(r.fresh.begin(), r.fresh.end(), std::back_inserter(fresh));
    }
    if (failed) throw BudgetNotTotal(failed->ascii());

    std::sort(all.begin(), all.end(), [](const Evaluation& x, const Evaluation& y) { return x.w < y.w; });
    if (cache_path && !fresh.empty()) {
        std::sort(fresh.begin(), fresh.end(), [](const RunRecord& x, const RunRecord& y) { return x.w < y.w; });
        append_records(*cache_path, fresh);
    }
    return all;
}

std::vector<BBRecord> reduce_table(std::span<const Evaluation> sorted, std::size_t max_n,
                                   const std::string& budget_id) {
    std::vector<BBRecord> table;
    table.reserve(max_n);
    BBRecord cur;
    cur.budget_id = budget_id;
    cur.vm_id = std::string(kVmId);
    std::size_t i = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (; i < sorted.size() && sorted[i].w.size() <= n; ++i) {
            const Evaluation& e = sorted[i];
            ++cur.tallies.total;
            ++(e.halted ? cur.tallies.halted : cur.tallies.timed_out);
            // Strictly greater keeps the shortlex-first witness.
            if (!cur.witness || e.value > cur.bb) {
                cur.bb = e.value;
                cur.witness = e.w;
            }
        }
        cur.n = n;
        cur.bb_plus = cur.bb + 1;
        table.push_back(cur);
    }
    return table;
}

std::vector<BBRecord> bb_table(std::size_t max_n, const Budget& b, const EvalOptions& opts) {
    auto evals = evaluate_all(max_n, b, opts);
    return reduce_table(evals, max_n, b.id());
}

BBRecord bb(std::size_t n, const Budget& b, const EvalOptions& opts) {
    if (n == 0) {
        BBRecord r;
        r.budget_id = b.id();
        r.vm_id = std::string(kVmId);
        return r;
    }
    return bb_table(n, b, opts).back();
}

Natural bb_plus(std::size_t n, const Budget& b, const EvalOptions& opts) {
    return bb(n, b, opts).bb + 1;
}

std::string render_csv(std::span<const BBRecord> table) {
    std::string out = "n,bb,bb_plus,witness_len,witness_bits,halted,timed_out,total_programs\n";
    for (const auto& r : table) {
        out += std::to_string(r.n) + ',' + r.bb.str() + ',' + r.bb_plus.str() + ',';
        out += r.witness ? std::to_string(r.witness->size()) + ',' + r.witness->ascii() : std::string("0,");
        out += ',' + std::to_string(r.tallies.halted) + ',' + std::to_string(r.tallies.timed_out) + ',' +
               std::to_string(r.tallies.total) + '\n';
    }
    return out;
}

nlohmann::json to_json(const BBRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["budget_id"] = r.budget_id;
    j["bb"] = r.bb.str();
    j["bb_plus"] = r.bb_plus.str();
    j["witness"] = r.witness ? nlohmann::json(r.witness->ascii()) : nlohmann::json(nullptr);
    j["tallies"] = {{"total", r.tallies.total}, {"halted", r.tallies.halted}, {"timed_out", r.tallies.timed_out}};
    j["vm_id"] = r.vm_id;
    return j;
}

nlohmann::json to_json(std::span<const BBRecord> table) {
    auto arr = nlohmann::json::array();
    for (const auto& r : table) arr.push_back(to_json(r));
    return arr;
}

}  // namespace subbeaver
