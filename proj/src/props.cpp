#include "subbeaver/props.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "subbeaver/enumeration.hpp"
#include "subbeaver/vm.hpp"

namespace subbeaver {

SubIncompressibilityReport check_sub_incompressibility(std::size_t n, const Budget& b, std::size_t cap,
                                                       const EvalOptions& opts) {
    SubIncompressibilityReport rep;
    rep.n = n;
    rep.budget_id = b.id();
    rep.cap = cap;

    auto evals = evaluate_all(n, b, opts);
    rep.bb_plus = reduce_table(evals, std::max<std::size_t>(n, 1), b.id()).back().bb_plus;
    for (const auto& e : evals) {
        ++rep.checked;
        if (e.value >= rep.bb_plus) ++rep.violations;
    }

    for (std::size_t len = n + 1; len <= cap && !rep.frontier_witness; ++len) {
        for (const auto& e : evaluate_all(len, b, opts)) {
            if (e.w.size() == len && e.value >= rep.bb_plus) {
                rep.frontier_witness = e.w;
                rep.frontier_value = e.value;
                break;
            }
        }
    }
    rep.pass = rep.violations == 0 && (!rep.frontier_witness || rep.frontier_witness->size() > n);
    return rep;
}

std::uint64_t count_level_violations(std::span<const Evaluation> sorted, std::span<const BBRecord> table) {
    std::uint64_t violations = 0;
    for (const auto& rec : table) {
        for (const auto& e : sorted) {
            if (e.w.size() > rec.n) break;
            if (e.value >= rec.bb_plus) ++violations;
        }
    }
    return violations;
}

BitString literal_frame(const LString& candidate, const Natural& n) {
    LString lit = lit_program(n);
    return compose(candidate, std::span(&lit, 1));
}

std::size_t find_n0(const LString& candidate, std::size_t cap) {
    for (std::size_t n = 0; n <= cap; ++n) {
        if (literal_frame(candidate, n).size() <= n) return n;
    }
    // Report the frame length at the first n0 past the cap, so callers know what cap would do.
    for (std::size_t n = cap + 1;; ++n) {
        std::size_t len = literal_frame(candidate, n).size();
        if (len <= n) throw CapTooSmall(cap, len);
    }
}

RefutationRecord refute_candidate(const LString& candidate, const Budget& b, std::size_t cap,
                                  const EvalOptions& opts) {
    RefutationRecord rec;
    rec.candidate = candidate;
    rec.budget_id = b.id();
    rec.n0 = find_n0(candidate, cap);
    rec.frame = literal_frame(candidate, rec.n0);
    rec.frame_len = rec.frame.size();
    rec.sub_value = sub_run(rec.frame, b);
    rec.bb_plus_n0 = bb_plus(rec.n0, b, opts);
    rec.gap_ok = rec.bb_plus_n0 >= rec.sub_value + 1;
    return rec;
}

EventualDominationReport check_eventual_domination(const LString& candidate, const Budget& b,
                                                   std::size_t cap, const EvalOptions& opts) {
    EventualDominationReport rep;
    rep.cap = cap;
    rep.n0 = find_n0(candidate, cap);
    auto table = bb_table(cap, b, opts);
    rep.pass = true;
    for (std::size_t n = rep.n0; n <= cap; ++n) {
        BitString frame = literal_frame(candidate, n);
        if (frame.size() > n) continue;
        DominationSample s{n, frame.size(), sub_run(frame, b), table[n - 1].bb_plus};
        if (!(s.bb_plus >= s.sub_value + 1)) rep.pass = false;
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

StructuralReport check_structural(std::size_t n) {
    StructuralReport rep;
    rep.n = n;
    std::unordered_set<BitString> members;
    for_each_lstring({n, {}}, [&](const BitString& w) { members.insert(w); });
    rep.members = members.size();
    std::vector<std::uint64_t> per_len(n + 1, 0);
    for (const auto& w : members) {
        ++per_len[w.size()];
        for (std::size_t len = 0; len < w.size(); ++len) {
            if (members.contains(w.substr(0, len))) ++rep.prefix_violations;
        }
    }
    for (std::size_t len = 0; len <= n; ++len) {
        if (per_len[len]) rep.kraft += DyadicRational(per_len[len], len);
    }
    rep.pass = rep.prefix_violations == 0 && rep.kraft <= DyadicRational(1, 0);
    return rep;
}

LadderReport check_ladder(std::size_t n, std::span<const Budget> budgets, const EvalOptions& opts) {
    LadderReport rep;
    rep.n = n;
    for (const auto& b : budgets) rep.budget_ids.push_back(b.id());

    if (budgets.size() > 1) {
        for_each_lstring({n, {}}, [&](const BitString& w) {
            LString s = parse(w);
            for (std::size_t j = 0; j + 1 < budgets.size(); ++j) {
                if (budget_of(budgets[j], s) > budget_of(budgets[j + 1], s)) {
                    throw DominationPreconditionError(w.ascii(), budgets[j].id(), budgets[j + 1].id());
                }
            }
        });
    }

    std::vector<std::vector<BBRecord>> tables;
    for (const auto& b : budgets) tables.push_back(bb_table(n, b, opts));
    rep.pass = true;
    rep.first_separation.assign(budgets.empty() ? 0 : budgets.size() - 1, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Natural> row;
        for (std::size_t j = 0; j < budgets.size(); ++j) {
            row.push_back(tables[j][i].bb);
            if (j == 0) continue;
            const Natural& lo = tables[j - 1][i].bb;
            const Natural& hi = tables[j][i].bb;
            if (lo > hi) rep.pass = false;
            if (lo < hi && !rep.first_separation[j - 1]) rep.first_separation[j - 1] = i + 1;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

LadderReport check_budget_domination(std::size_t n, const Budget& b1, const Budget& b2,
                                     const EvalOptions& opts) {
    const Budget pair[] = {b1, b2};
    return check_ladder(n, pair, opts);
}

nlohmann::json to_json(const SubIncompressibilityReport& r) {
    nlohmann::json j;
    j["check"] = "sub_incompressibility";
    j["n"] = r.n;
    j["budget_id"] = r.budget_id;
    j["bb_plus"] = r.bb_plus.str();
    j["checked"] = r.checked;
    j["violations"] = r.violations;
    j["cap"] = r.cap;
    if (r.frontier_witness) {
        j["frontier"] = {{"witness", r.frontier_witness->ascii()},
                         {"length", r.frontier_witness->size()},
                         {"value", r.frontier_value.str()}};
    } else {
        j["frontier"] = "frontier beyond cap";
    }
    j["pass"] = r.pass;
    return j;
}

nlohmann::json to_json(const RefutationRecord& r) {
    return {{"check", "refutation"},
            {"candidate", r.candidate.bits.ascii()},
            {"budget_id", r.budget_id},
            {"n0", r.n0},
            {"frame", r.frame.ascii()},
            {"frame_len", r.frame_len},
            {"sub_value", r.sub_value.str()},
            {"bb_plus_n0", r.bb_plus_n0.str()},
            {"gap_ok", r.gap_ok},
            {"pass", r.gap_ok && r.frame_len <= r.n0}};
}

nlohmann::json to_json(const EventualDominationReport& r) {
    auto samples = nlohmann::json::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"n", s.n},
                           {"frame_len", s.frame_len},
                           {"sub_value", s.sub_value.str()},
                           {"bb_plus", s.bb_plus.str()}});
    }
    return {{"check", "eventual_domination"}, {"n0", r.n0}, {"cap", r.cap}, {"samples", samples}, {"pass", r.pass}};
}

nlohmann::json to_json(const StructuralReport& r) {
    return {{"check", "structural"},
            {"n", r.n},
            {"members", r.members},
            {"prefix_violations", r.prefix_violations},
            {"kraft", r.kraft.fraction()},
            {"kraft_decimal", r.kraft.decimal()},
            {"pass", r.pass}};
}

nlohmann::json to_json(const LadderReport& r) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        nlohmann::json row = {{"n", i + 1}};
        auto bbs = nlohmann::json::array();
        for (const auto& v : r.rows[i]) bbs.push_back(v.str());
        row["bb"] = bbs;
        rows.push_back(row);
    }
    auto seps = nlohmann::json::array();
    for (const auto& s : r.first_separation) seps.push_back(s ? nlohmann::json(*s) : nlohmann::json(nullptr));
    return {{"check", "budget_domination"},
            {"n", r.n},
            {"budgets", r.budget_ids},
            {"rows", rows},
            {"first_separation", seps},
            {"pass", r.pass}};
}

nlohmann::json run_verify(const VerifyConfig& cfg) {
    nlohmann::json checks = nlohmann::json::array();

    checks.push_back(to_json(check_structural(cfg.max_len)));

    auto evals = evaluate_all(cfg.max_len, cfg.budget, cfg.opts);
    auto table = reduce_table(evals, cfg.max_len, cfg.budget.id());
    bool carrot = std::all_of(table.begin(), table.end(),
                              [](const BBRecord& r) { return r.bb_plus == r.bb + 1; });
    checks.push_back({{"check", "carrot_identity"}, {"budget_id", cfg.budget.id()}, {"levels", table.size()},
                      {"pass", carrot}});

    auto level_violations = count_level_violations(evals, table);
    checks.push_back({{"check", "sub_incompressibility_levels"},
                      {"budget_id", cfg.budget.id()},
                      {"levels", table.size()},
                      {"violations", level_violations},
                      {"pass", level_violations == 0}});

    if (cfg.max_len >= 1) {
        checks.push_back(to_json(check_sub_incompressibility(cfg.max_len, cfg.budget,
                                                             std::max(cfg.cap, cfg.max_len), cfg.opts)));
    }
    if (cfg.budget2) checks.push_back(to_json(check_budget_domination(cfg.max_len, cfg.budget, *cfg.budget2, cfg.opts)));
    if (cfg.candidate) {
        try {
            checks.push_back(to_json(refute_candidate(*cfg.candidate, cfg.budget, cfg.cap, cfg.opts)));
            checks.push_back(to_json(check_eventual_domination(*cfg.candidate, cfg.budget, cfg.cap, cfg.opts)));
        } catch (const CapTooSmall& e) {
            checks.push_back({{"check", "refutation"},
                              {"candidate", cfg.candidate->bits.ascii()},
                              {"error", e.what()},
                              {"pass", false}});
        }
    }

    bool pass = std::all_of(checks.begin(), checks.end(), [](const nlohmann::json& c) { return c["pass"].get<bool>(); });
    return {{"vm_id", std::string(kVmId)}, {"max_len", cfg.max_len}, {"checks", checks}, {"pass", pass}};
}

}  // namespace subbeaver
