// maxnim -- Grundy numbers of Maximum Nim and fast Josephus queries.
//
// Subcommands: grundy, josephus {order|survivor|rank|at}, verify, bench, play.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 overflow/bound/infeasible, 4 internal invariant violation.

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxnim/bench.hpp"
#include "maxnim/bridge.hpp"
#include "maxnim/errors.hpp"
#include "maxnim/grundy.hpp"
#include "maxnim/josephus.hpp"
#include "maxnim/report_json.hpp"
#include "maxnim/rule.hpp"
#include "maxnim/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

struct CommonOpts {
    std::string format = "text";
    std::string out;
    int jobs = 1;
    std::uint64_t seed = 1;
};

bool use_color() {
    return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string green(const std::string& s) {
    return use_color() ? "\033[32m" + s + "\033[0m" : s;
}

std::string red(const std::string& s) {
    return use_color() ? "\033[31m" + s + "\033[0m" : s;
}

void write_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << payload;
}

void require_format(const CommonOpts& common, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (common.format == f) return;
    throw std::invalid_argument("format '" + common.format +
                                "' is not available for this output");
}

// ---------------------------------------------------------------------------
// grundy
// ---------------------------------------------------------------------------

struct GrundyOpts {
    std::int64_t k = 0;
    std::string rule_file;
    std::optional<std::int64_t> x;
    std::string range;
    std::string method = "auto";
};

maxnim::RuleFunction load_rule(const GrundyOpts& opts) {
    if ((opts.k != 0) == !opts.rule_file.empty())
        throw std::invalid_argument("exactly one of --k and --rule-file is required");
    if (opts.k != 0) return maxnim::RuleFunction::floor_div(opts.k);

    std::ifstream file(opts.rule_file);
    if (!file) throw std::invalid_argument("cannot open rule file: " + opts.rule_file);
    std::vector<int> increments;
    long long value = 0;
    while (file >> value) increments.push_back(static_cast<int>(value));
    if (!file.eof())
        throw std::invalid_argument("rule file must contain whitespace-separated 0/1 increments");
    return maxnim::RuleFunction::tabulated(increments);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& range) {
    const std::size_t sep = range.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("--range expects LO..HI, got '" + range + "'");
    try {
        const std::int64_t lo = std::stoll(range.substr(0, sep));
        const std::int64_t hi = std::stoll(range.substr(sep + 2));
        if (lo < 0 || hi < lo) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("--range expects 0 <= LO <= HI, got '" + range + "'");
    }
}

int run_grundy(const GrundyOpts& opts, const CommonOpts& common) {
    const maxnim::RuleFunction rule = load_rule(opts);

    std::string method = opts.method;
    if (method == "auto")
        method = rule.kind() == maxnim::RuleFunction::Kind::floor_div ? "floork" : "levine";
    if (method == "floork" && rule.kind() != maxnim::RuleFunction::Kind::floor_div)
        throw std::invalid_argument("--method floork needs a --k rule");

    auto evaluate = [&](std::int64_t x) -> std::int64_t {
        if (method == "oracle") return maxnim::grundy_oracle(x, rule);
        if (method == "levine") return maxnim::grundy_levine(x, rule);
        return maxnim::grundy_floor_k(x, rule.k());
    };

    if (opts.x.has_value() == !opts.range.empty())
        throw std::invalid_argument("exactly one of --x and --range is required");

    if (opts.x) {
        require_format(common, {"text", "json"});
        const std::int64_t g = evaluate(*opts.x);
        if (common.format == "json") {
            maxnim::Json j;
            j["schema"] = 1;
            j["rule"] = rule.describe();
            j["method"] = method;
            j["x"] = *opts.x;
            j["grundy"] = g;
            write_payload(j.dump(2) + "\n", common.out);
        } else {
            write_payload(std::to_string(g) + "\n", common.out);
        }
        return kExitOk;
    }

    const auto [lo, hi] = parse_range(opts.range);
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(hi - lo + 1));
    if (method == "oracle") {
        const std::vector<std::int64_t> table = maxnim::grundy_table(hi, rule);
        for (std::int64_t x = lo; x <= hi; ++x)
            values.push_back(table[static_cast<std::size_t>(x)]);
    } else {
        for (std::int64_t x = lo; x <= hi; ++x) values.push_back(evaluate(x));
    }

    if (common.format == "json") {
        maxnim::Json j;
        j["schema"] = 1;
        j["rule"] = rule.describe();
        j["method"] = method;
        j["x_min"] = lo;
        j["x_max"] = hi;
        maxnim::Json pairs = maxnim::Json::array();
        for (std::int64_t x = lo; x <= hi; ++x)
            pairs.push_back({x, values[static_cast<std::size_t>(x - lo)]});
        j["values"] = std::move(pairs);
        write_payload(j.dump(2) + "\n", common.out);
    } else {
        std::ostringstream csv;
        csv << "x,grundy\n";
        for (std::int64_t x = lo; x <= hi; ++x)
            csv << x << ',' << values[static_cast<std::size_t>(x - lo)] << '\n';
        write_payload(csv.str(), common.out);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// josephus
// ---------------------------------------------------------------------------

struct JosephusOpts {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t m = 0;
    std::int64_t i = 0;
    std::string engine;  // empty = per-action default
};

int run_josephus_order(const JosephusOpts& opts, const CommonOpts& common) {
    const std::string engine = opts.engine.empty() ? "sim" : opts.engine;
    maxnim::EliminationTrace trace;
    if (engine == "fast") {
        trace.n = opts.n;
        trace.k = opts.k;
        trace.order = maxnim::full_order_fast(opts.n, opts.k);
        trace.survivor = trace.order.back();
    } else {
        trace = maxnim::simulate(opts.n, opts.k);
    }

    if (common.format == "csv") {
        std::ostringstream csv;
        maxnim::write_trace_csv(csv, trace);
        write_payload(csv.str(), common.out);
    } else if (common.format == "json") {
        write_payload(maxnim::trace_to_json(maxnim::label_rounds(trace)).dump(2) + "\n",
                      common.out);
    } else {
        std::ostringstream text;
        for (std::size_t idx = 0; idx < trace.order.size(); ++idx) {
            if (idx) text << ' ';
            text << trace.order[idx];
        }
        text << '\n';
        write_payload(text.str(), common.out);
    }
    return kExitOk;
}

int run_josephus_scalar(const std::string& action, const JosephusOpts& opts,
                        const CommonOpts& common) {
    require_format(common, {"text", "json"});
    const std::string engine = opts.engine.empty() ? "fast" : opts.engine;

    std::int64_t answer = 0;
    std::optional<std::int64_t> chain_length;
    if (engine == "fast") {
        if (action == "survivor") {
            const maxnim::BridgeResult res =
                maxnim::eliminated_at_traced(opts.n, opts.k, opts.n);
            answer = res.answer;
            chain_length = res.chain_length;
        } else if (action == "rank") {
            const maxnim::BridgeResult res =
                maxnim::elimination_rank_traced(opts.n, opts.k, opts.m);
            answer = res.answer;
            chain_length = res.chain_length;
        } else {  // at
            const maxnim::BridgeResult res =
                maxnim::eliminated_at_traced(opts.n, opts.k, opts.i);
            answer = res.answer;
            chain_length = res.chain_length;
        }
    } else {
        const maxnim::EliminationTrace trace = maxnim::simulate(opts.n, opts.k);
        if (action == "survivor") {
            answer = trace.survivor;
        } else if (action == "rank") {
            if (opts.m < 1 || opts.m > opts.n)
                throw std::invalid_argument("m must be in 1..n");
            answer = maxnim::elimination_ranks(trace)[static_cast<std::size_t>(opts.m - 1)];
        } else {
            if (opts.i < 1 || opts.i > opts.n)
                throw std::invalid_argument("i must be in 1..n");
            answer = trace.order[static_cast<std::size_t>(opts.i - 1)];
        }
    }

    if (common.format == "json") {
        maxnim::Json j;
        j["schema"] = 1;
        j["action"] = action;
        j["n"] = opts.n;
        j["k"] = opts.k;
        if (action == "rank") j["m"] = opts.m;
        if (action == "at") j["i"] = opts.i;
        j["engine"] = engine;
        j["answer"] = answer;
        if (chain_length) j["chain_length"] = *chain_length;
        write_payload(j.dump(2) + "\n", common.out);
    } else {
        write_payload(std::to_string(answer) + "\n", common.out);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
    std::int64_t k_min = 2;
    std::int64_t k_max = 8;
    std::int64_t n_min = 1;
    std::int64_t n_max = 200;
};

int run_verify(const VerifyOpts& opts, const CommonOpts& common) {
    require_format(common, {"text", "json"});
    const maxnim::VerificationReport report = maxnim::verify_theorem(
        opts.k_min, opts.k_max, opts.n_min, opts.n_max, common.jobs);

    const std::string json_payload =
        maxnim::verification_report_to_json(report).dump(2) + "\n";
    if (!common.out.empty()) write_payload(json_payload, common.out);

    if (common.format == "json") {
        if (common.out.empty()) std::cout << json_payload;
    } else {
        std::cout << "theorem check: JJ_k(n,m) == G(n*k - m) for k in [" << opts.k_min
                  << "," << opts.k_max << "], n in [" << opts.n_min << "," << opts.n_max
                  << "]\n";
        const std::int64_t n_span = opts.n_max - opts.n_min + 1;
        for (std::int64_t k = opts.k_min; k <= opts.k_max; ++k) {
            std::int64_t pass = 0;
            for (const maxnim::VerifyCell& cell : report.cells)
                if (cell.k == k && cell.pass) ++pass;
            std::cout << "  k=" << k << ": " << pass << "/" << n_span << " cells pass\n";
        }
        std::cout << "checked " << report.checked << " (n,k,m) triples in "
                  << report.elapsed_seconds << "s: "
                  << (report.all_pass() ? green("all pass") : red("FAIL")) << "\n";
        for (const maxnim::VerifyCell& cell : report.cells) {
            if (!cell.pass) {
                const maxnim::Counterexample& ce = *cell.counterexample;
                std::cout << red("counterexample") << ": n=" << ce.n << " k=" << ce.k
                          << " m=" << ce.m << " expected JJ=" << ce.expected
                          << " got G=" << ce.got << "\n";
                break;
            }
        }
    }
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchOpts {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t queries = 1000;
    std::vector<std::string> methods;
};

int run_bench(const BenchOpts& opts, const CommonOpts& common) {
    require_format(common, {"text", "json"});
    std::vector<maxnim::BenchMethod> methods;
    if (opts.methods.empty()) {
        methods = maxnim::all_bench_methods();
    } else {
        for (const std::string& name : opts.methods) {
            const auto method = maxnim::parse_bench_method(name);
            if (!method) throw std::invalid_argument("unknown bench method: " + name);
            methods.push_back(*method);
        }
    }

    const maxnim::BenchReport report =
        maxnim::run_bench(opts.n, opts.k, opts.queries, methods, common.seed);

    const std::string json_payload = maxnim::bench_report_to_json(report).dump(2) + "\n";
    if (!common.out.empty()) write_payload(json_payload, common.out);

    if (common.format == "json") {
        if (common.out.empty()) std::cout << json_payload;
    } else {
        std::cout << "bench: n=" << report.n << " k=" << report.k
                  << " queries=" << report.queries << " seed=" << report.seed << "\n";
        for (const maxnim::BenchRecord& record : report.records) {
            std::cout << "  " << maxnim::to_string(record.method) << ": ";
            if (record.infeasible) {
                std::cout << red("infeasible") << " (" << *record.infeasible << ")\n";
                continue;
            }
            std::cout << "reps=" << record.repetitions << " median=" << record.median_us
                      << "us p95=" << record.p95_us << "us";
            if (record.chain)
                std::cout << " chain med/p95/max=" << record.chain->median << "/"
                          << record.chain->p95 << "/" << record.chain->max
                          << (record.chain->within_bound ? " <= " : " EXCEEDS ")
                          << record.chain->bound;
            if (record.answer) std::cout << " answer=" << *record.answer;
            std::cout << "\n";
        }
    }
    return report.any_infeasible() ? kExitInfeasible : kExitOk;
}

// ---------------------------------------------------------------------------
// play
// ---------------------------------------------------------------------------

struct PlayOpts {
    std::int64_t n = 0;
    std::int64_t k = 0;
    bool human_first = false;
};

int run_play(const PlayOpts& opts, std::istream& in, std::ostream& out) {
    const maxnim::RuleFunction rule = maxnim::RuleFunction::floor_div(opts.k);
    std::int64_t pile = opts.n;
    bool humans_turn = opts.human_first;

    out << "Maximum Nim: pile of " << pile << ", take 1..floor(x/" << opts.k
        << ") stones; whoever takes the last stone wins.\n";
    while (true) {
        const std::int64_t cap = rule(pile);
        if (cap == 0) {
            // No legal move (pile 0 counts too): the player to move loses.
            out << "pile " << pile << ": " << (humans_turn ? "you have" : "engine has")
                << " no legal move. " << (humans_turn ? "Engine wins." : "You win.")
                << "\n";
            return kExitOk;
        }

        std::int64_t take = 0;
        if (humans_turn) {
            while (true) {
                out << "pile " << pile << ", your move (1.." << cap << "): " << std::flush;
                std::string line;
                if (!std::getline(in, line)) {
                    out << "\nsession ended.\n";
                    return kExitOk;
                }
                try {
                    std::size_t used = 0;
                    take = std::stoll(line, &used);
                    if (used != line.size() || take < 1 || take > cap) take = 0;
                } catch (const std::exception&) {
                    take = 0;
                }
                if (take != 0) break;
                out << "illegal move, take between 1 and " << cap << ".\n";
            }
        } else {
            const std::vector<std::int64_t> winning = maxnim::optimal_moves(pile, rule);
            take = winning.empty() ? 1 : winning.front();
            out << "pile " << pile << ", engine takes " << take << ".\n";
        }

        pile -= take;
        if (pile == 0) {
            out << (humans_turn ? "You took the last stone. You win!"
                                : "Engine took the last stone. Engine wins.")
                << "\n";
            return kExitOk;
        }
        humans_turn = !humans_turn;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-Nim Grundy numbers and fast Josephus queries"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", common.out, "Write the machine-readable output to PATH");
    app.add_option("--jobs", common.jobs, "Worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", common.seed, "Seed for random query sets")
        ->capture_default_str();

    int exit_code = kExitOk;

    // grundy
    GrundyOpts grundy_opts;
    CLI::App* grundy = app.add_subcommand("grundy", "Grundy numbers of Maximum Nim");
    grundy->fallthrough();
    grundy->add_option("--k", grundy_opts.k, "Rule f(x) = floor(x/k), k >= 2");
    grundy->add_option("--rule-file", grundy_opts.rule_file,
                       "Tabulated rule: file of 0/1 increments");
    grundy->add_option("--x", grundy_opts.x, "Pile size to evaluate");
    grundy->add_option("--range", grundy_opts.range, "Evaluate LO..HI, emits CSV");
    grundy->add_option("--method", grundy_opts.method, "Evaluator")
        ->check(CLI::IsMember({"auto", "oracle", "levine", "floork"}))
        ->capture_default_str();
    grundy->callback([&] { exit_code = run_grundy(grundy_opts, common); });

    // josephus
    JosephusOpts jo;
    CLI::App* josephus = app.add_subcommand("josephus", "Josephus elimination queries");
    josephus->fallthrough();
    josephus->require_subcommand(1);
    auto add_josephus_action = [&](const std::string& name, const std::string& desc,
                                   bool needs_m, bool needs_i) {
        CLI::App* sub = josephus->add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("--n", jo.n, "Circle size")->required();
        sub->add_option("--k", jo.k, "Every k-th number is removed")->required();
        if (needs_m) sub->add_option("--m", jo.m, "Number to locate")->required();
        if (needs_i) sub->add_option("--i", jo.i, "Elimination step")->required();
        sub->add_option("--engine", jo.engine, "sim or fast")
            ->check(CLI::IsMember({"sim", "fast"}));
        return sub;
    };
    add_josephus_action("order", "Full elimination order", false, false)
        ->callback([&] { exit_code = run_josephus_order(jo, common); });
    add_josephus_action("survivor", "The remaining number", false, false)
        ->callback([&] { exit_code = run_josephus_scalar("survivor", jo, common); });
    add_josephus_action("rank", "Step at which m is removed", true, false)
        ->callback([&] { exit_code = run_josephus_scalar("rank", jo, common); });
    add_josephus_action("at", "Number removed at step i", false, true)
        ->callback([&] { exit_code = run_josephus_scalar("at", jo, common); });

    // verify
    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "Grid check of JJ_k(n,m) == G(n*k-m)");
    verify->fallthrough();
    verify->add_option("--k-min", verify_opts.k_min, "")->capture_default_str();
    verify->add_option("--k-max", verify_opts.k_max, "")->capture_default_str();
    verify->add_option("--n-min", verify_opts.n_min, "")->capture_default_str();
    verify->add_option("--n-max", verify_opts.n_max, "")->capture_default_str();
    verify->callback([&] { exit_code = run_verify(verify_opts, common); });

    // bench
    BenchOpts bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "Time simulation against bridge queries");
    bench->fallthrough();
    bench->add_option("--n", bench_opts.n, "Circle size")->required();
    bench->add_option("--k", bench_opts.k, "Step")->required();
    bench->add_option("--queries", bench_opts.queries, "Random queries for rank methods")
        ->capture_default_str();
    bench->add_option("--methods", bench_opts.methods,
                      "Comma-separated method list (default: all)")
        ->delimiter(',');
    bench->callback([&] { exit_code = run_bench(bench_opts, common); });

    // play
    PlayOpts play_opts;
    CLI::App* play = app.add_subcommand("play", "Play Maximum Nim against the engine");
    play->fallthrough();
    play->add_option("--n", play_opts.n, "Initial pile size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    play->add_option("--k", play_opts.k, "Rule f(x) = floor(x/k)")->required();
    play->add_flag("--human-first", play_opts.human_first, "You move first");
    play->callback([&] { exit_code = run_play(play_opts, std::cin, std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const maxnim::internal_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const maxnim::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const maxnim::bound_error& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const maxnim::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInternal;
    }
    return exit_code;
}
