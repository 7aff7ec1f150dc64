// subbeaver: command-line driver for the time-bounded submachine toolkit.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subbeaver/beaver.hpp"
#include "subbeaver/codec.hpp"
#include "subbeaver/enumeration.hpp"
#include "subbeaver/errors.hpp"
#include "subbeaver/omega.hpp"
#include "subbeaver/props.hpp"
#include "subbeaver/store.hpp"
#include "subbeaver/submachine.hpp"
#include "subbeaver/vm.hpp"

namespace sb = subbeaver;

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kBudgetTotality = 3,
    kCacheIntegrity = 4,
    kVerificationFailed = 5,
};

// Raised for malformed bit-string arguments so they map to kParse rather than kUsage.
struct BitsArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string budget = "const:10";
    std::size_t max_len = 0;
    std::size_t jobs = 1;
    std::string cache_dir;
    std::string format = "csv";
    std::uint64_t meta_fuel = sb::kDefaultMetaFuel;

    sb::Budget parsed_budget() const { return sb::Budget::parse(budget, meta_fuel); }

    sb::EvalOptions eval_options() const {
        sb::EvalOptions opts;
        opts.jobs = jobs;
        if (!cache_dir.empty()) opts.cache_dir = cache_dir;
        return opts;
    }
};

sb::BitString bits_arg(const std::string& text) {
    try {
        return sb::BitString::from_text(text);
    } catch (const std::invalid_argument& e) {
        throw BitsArgumentError(e.what());
    }
}

sb::LString lstring_arg(const std::string& text) { return sb::parse(bits_arg(text)); }

void add_common(CLI::App* cmd, CliConfig& cfg, bool with_jobs) {
    cmd->add_option("--max-len", cfg.max_len, "Largest program length in bits")->required();
    cmd->add_option("--budget", cfg.budget, "Budget: const:C | linear:A:B | poly:A:K:B | prog:LEN:HEX@META");
    cmd->add_option("--meta-fuel", cfg.meta_fuel, "Step limit for evaluating prog budgets");
    if (with_jobs) {
        cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--cache", cfg.cache_dir, "Directory of the persistent run cache");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-bounded submachines, Busy Beaver Plus and time-limited halting probabilities"};
    app.require_subcommand(1);
    CliConfig cfg;

    std::string bits_text;
    auto* decode = app.add_subcommand("decode", "Pretty-print the parse tree of a sentence");
    decode->add_option("bits", bits_text, "Bits as 0/1 text or len:hex")->required();

    std::optional<std::uint64_t> fuel;
    std::optional<std::string> run_budget;
    auto* run = app.add_subcommand("run", "Run a sentence with a fuel limit, or on the submachine of a budget");
    run->add_option("bits", bits_text, "Bits as 0/1 text or len:hex")->required();
    auto* run_budget_opt = run->add_option("--budget", run_budget, "Report sub_run under this budget");
    run->add_option("--fuel", fuel, "Step limit (unbounded if neither --fuel nor --budget)")->excludes(run_budget_opt);
    run->add_option("--meta-fuel", cfg.meta_fuel, "Step limit for evaluating prog budgets");

    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List all sentences up to a length in shortlex order");
    enumerate->add_option("--max-len", cfg.max_len, "Largest length in bits")->required();
    enumerate->add_flag("--count-only", count_only, "Print only the count");

    bool plus = false;
    auto* bb = app.add_subcommand("bb", "Busy Beaver table for n = 1..max-len");
    add_common(bb, cfg, true);
    bb->add_flag("--plus", plus, "Also report BB+(max-len) on stderr");
    bb->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* omega = app.add_subcommand("omega", "Exact lower approximation of the time-limited halting probability");
    add_common(omega, cfg, true);
    omega->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    std::optional<std::string> budget2;
    std::optional<std::string> candidate;
    std::size_t cap = 24;
    auto* verify = app.add_subcommand("verify", "Run the property suite; nonzero exit on failure");
    add_common(verify, cfg, true);
    verify->add_option("--budget2", budget2, "Second budget for the domination check (pointwise >= --budget)");
    verify->add_option("--candidate", candidate, "Plain program to refute as a BB+ computer");
    verify->add_option("--cap", cap, "Largest size for frontier search and refutation");

    std::string literal_text;
    auto* encode_literal = app.add_subcommand("encode-literal", "Emit the literal program for N and its length bound");
    encode_literal->add_option("N", literal_text, "Natural number")->required();

    std::vector<std::string> compose_args;
    auto* compose = app.add_subcommand("compose", "Frame a plain program with arguments (alias 'star': same framing)");
    compose->alias("star");
    compose->add_option("head", bits_text, "Plain program bits")->required();
    compose->add_option("args", compose_args, "Argument sentences")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*decode) {
            std::cout << sb::describe(lstring_arg(bits_text));
        } else if (*run) {
            sb::LString w = lstring_arg(bits_text);
            if (run_budget) {
                sb::Budget b = sb::Budget::parse(*run_budget, cfg.meta_fuel);
                std::cout << sb::sub_run(w, b).str() << "\n";
            } else {
                sb::RunOutcome r = sb::run_universal(w, fuel ? sb::Fuel(*fuel) : std::nullopt);
                if (r.halted()) {
                    std::cout << "halted output=" << r.output.str() << " steps=" << r.steps << "\n";
                } else {
                    std::cout << "out-of-fuel steps=" << r.steps << "\n";
                }
            }
        } else if (*enumerate) {
            if (count_only) {
                std::cout << sb::count_valid(cfg.max_len) << "\n";
            } else {
                for (const auto& w : sb::enumerate_lstrings(cfg.max_len)) std::cout << w.ascii() << "\n";
            }
        } else if (*bb) {
            sb::Budget b = cfg.parsed_budget();
            auto table = sb::bb_table(cfg.max_len, b, cfg.eval_options());
            if (cfg.format == "json") {
                std::cout << sb::to_json(table).dump(2) << "\n";
            } else {
                std::cout << sb::render_csv(table);
            }
            if (plus) {
                std::cerr << "BB+(" << cfg.max_len << ") = "
                          << (table.empty() ? std::string("1") : table.back().bb_plus.str()) << "\n";
            }
        } else if (*omega) {
            sb::Budget b = cfg.parsed_budget();
            auto r = sb::omega_lower(cfg.max_len, b, cfg.eval_options());
            if (cfg.format == "json") {
                nlohmann::json j = {{"max_len", cfg.max_len},
                                    {"budget_id", b.id()},
                                    {"omega_lower", r.value.fraction()},
                                    {"decimal_approx", r.value.decimal(20)},
                                    {"halted", r.tallies.halted},
                                    {"timed_out", r.tallies.timed_out},
                                    {"total", r.tallies.total}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "max_len,budget_id,omega_lower,decimal_approx,halted,timed_out,total\n"
                          << cfg.max_len << ',' << b.id() << ',' << r.value.fraction() << ",~"
                          << r.value.decimal(20) << ',' << r.tallies.halted << ',' << r.tallies.timed_out
                          << ',' << r.tallies.total << "\n";
            }
        } else if (*verify) {
            sb::VerifyConfig vc;
            vc.max_len = cfg.max_len;
            vc.budget = cfg.parsed_budget();
            if (budget2) vc.budget2 = sb::Budget::parse(*budget2, cfg.meta_fuel);
            if (candidate) vc.candidate = lstring_arg(*candidate);
            vc.cap = cap;
            vc.opts = cfg.eval_options();
            auto report = sb::run_verify(vc);
            std::cout << report.dump(2) << "\n";
            if (!report["pass"].get<bool>()) return kVerificationFailed;
        } else if (*encode_literal) {
            sb::Natural n = sb::parse_natural(literal_text);
            sb::LString lit = sb::lit_program(n);
            double bound = sb::lit_program_bound(n);
            nlohmann::json j = {{"n", n.str()},
                                {"bits", lit.bits.ascii()},
                                {"compact", lit.bits.compact()},
                                {"length", lit.bits.size()},
                                {"bound", bound},
                                {"within_bound", static_cast<double>(lit.bits.size()) <= bound}};
            std::cout << j.dump(2) << "\n";
        } else if (*compose) {
            sb::LString head = lstring_arg(bits_text);
            std::vector<sb::LString> args;
            for (const auto& a : compose_args) args.push_back(lstring_arg(a));
            std::cout << sb::compose(head, args).ascii() << "\n";
        }
    } catch (const BitsArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const sb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const sb::BudgetNotTotal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetTotality;
    } catch (const sb::IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCacheIntegrity;
    } catch (const sb::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCacheIntegrity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
