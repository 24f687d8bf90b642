#include "maxnim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "maxnim/bridge.hpp"
#include "maxnim/checked.hpp"
#include "maxnim/errors.hpp"
#include "maxnim/josephus.hpp"

namespace maxnim {

std::string to_string(BenchMethod method) {
    switch (method) {
        case BenchMethod::simulate_naive: return "simulate-naive";
        case BenchMethod::simulate_ostree: return "simulate-ostree";
        case BenchMethod::bridge_rank: return "bridge-rank";
        case BenchMethod::bridge_order: return "bridge-order";
        case BenchMethod::survivor_classic: return "survivor-classic";
        case BenchMethod::survivor_fast: return "survivor-fast";
    }
    return "unknown";
}

std::optional<BenchMethod> parse_bench_method(const std::string& name) {
    for (BenchMethod method : all_bench_methods())
        if (to_string(method) == name) return method;
    return std::nullopt;
}

std::vector<BenchMethod> all_bench_methods() {
    return {BenchMethod::simulate_naive,   BenchMethod::simulate_ostree,
            BenchMethod::bridge_rank,      BenchMethod::bridge_order,
            BenchMethod::survivor_classic, BenchMethod::survivor_fast};
}

double chain_length_bound(std::int64_t n, std::int64_t k) {
    const double nk = static_cast<double>(n) * static_cast<double>(k);
    return kChainBoundC * static_cast<double>(k) * std::log(nk) + kChainBoundC;
}

bool BenchReport::any_infeasible() const {
    for (const BenchRecord& record : records)
        if (record.infeasible) return true;
    return false;
}

namespace {

using Clock = std::chrono::steady_clock;

double to_us(Clock::duration d) {
    return std::chrono::duration<double, std::micro>(d).count();
}

double percentile(std::vector<double> samples, double p) {
    if (samples.empty()) return 0.0;
    std::sort(samples.begin(), samples.end());
    const std::size_t idx = static_cast<std::size_t>(
        std::min(samples.size() - 1.0, std::ceil(p * samples.size()) - 1.0));
    return samples[idx];
}

std::int64_t percentile_i(std::vector<std::int64_t> samples, double p) {
    if (samples.empty()) return 0;
    std::sort(samples.begin(), samples.end());
    const std::size_t idx = static_cast<std::size_t>(
        std::min(samples.size() - 1.0, std::ceil(p * samples.size()) - 1.0));
    return samples[idx];
}

std::uint64_t fnv1a(std::uint64_t hash, std::int64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
        hash ^= static_cast<std::uint64_t>(value >> (8 * byte)) & 0xffu;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::uint64_t hash_sequence(const std::vector<std::int64_t>& values) {
    std::uint64_t hash = 14695981039346656037ull;
    for (std::int64_t v : values) hash = fnv1a(hash, v);
    return hash;
}

std::string hex(std::uint64_t value) {
    std::ostringstream os;
    os << "0x" << std::hex << value;
    return os.str();
}

// Deterministic regardless of the standard library: plain modulo on the
// raw mt19937_64 stream (bias is irrelevant for benchmarking).
std::vector<std::int64_t> random_queries(std::int64_t n, std::int64_t count,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> queries;
    queries.reserve(static_cast<std::size_t>(count));
    for (std::int64_t q = 0; q < count; ++q)
        queries.push_back(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)));
    return queries;
}

ChainStats make_chain_stats(const std::vector<std::int64_t>& lengths, std::int64_t n,
                            std::int64_t k) {
    ChainStats stats;
    stats.median = percentile_i(lengths, 0.5);
    stats.p95 = percentile_i(lengths, 0.95);
    stats.max = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
    stats.bound = chain_length_bound(n, k);
    stats.within_bound = static_cast<double>(stats.max) <= stats.bound;
    return stats;
}

bool is_order_method(BenchMethod m) {
    return m == BenchMethod::simulate_naive || m == BenchMethod::simulate_ostree ||
           m == BenchMethod::bridge_order;
}

bool is_survivor_method(BenchMethod m) {
    return m == BenchMethod::survivor_classic || m == BenchMethod::survivor_fast;
}

std::optional<std::string> feasibility(BenchMethod method, std::int64_t n,
                                       std::int64_t k) {
    checked_mul(n, k);  // every method needs n*k representable
    if (is_order_method(method) && n > kMaxSimulationSize)
        return "materializing n=" + std::to_string(n) + " exceeds the cap of " +
               std::to_string(kMaxSimulationSize);
    return std::nullopt;
}

}  // namespace

BenchReport run_bench(std::int64_t n, std::int64_t k, std::int64_t queries,
                      const std::vector<BenchMethod>& methods, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (queries < 1) throw std::invalid_argument("queries must be >= 1");
    if (methods.empty()) throw std::invalid_argument("no bench methods selected");

    BenchReport report;
    report.n = n;
    report.k = k;
    report.queries = queries;
    report.seed = seed;

    // Whole-structure methods repeat the full run a few times; per-query
    // methods time each query.
    const std::int64_t reps = std::min<std::int64_t>(queries, 5);

    std::optional<std::uint64_t> order_hash;
    std::optional<std::int64_t> survivor_answer;

    for (BenchMethod method : methods) {
        BenchRecord record;
        record.method = method;
        record.n = n;
        record.k = k;

        if (auto reason = feasibility(method, n, k)) {
            record.infeasible = *reason;
            record.repetitions = 0;
            report.records.push_back(std::move(record));
            continue;
        }

        std::vector<double> times;
        switch (method) {
            case BenchMethod::simulate_naive:
            case BenchMethod::simulate_ostree:
            case BenchMethod::bridge_order: {
                record.repetitions = reps;
                std::uint64_t hash = 0;
                std::vector<std::int64_t> chain_lengths;
                for (std::int64_t r = 0; r < reps; ++r) {
                    const auto t0 = Clock::now();
                    std::vector<std::int64_t> order;
                    if (method == BenchMethod::bridge_order) {
                        order.reserve(static_cast<std::size_t>(n));
                        for (std::int64_t i = 1; i <= n; ++i) {
                            const BridgeResult res = eliminated_at_traced(n, k, i);
                            order.push_back(res.answer);
                            if (r == 0) chain_lengths.push_back(res.chain_length);
                        }
                    } else {
                        const SimEngine engine = method == BenchMethod::simulate_naive
                                                     ? SimEngine::naive
                                                     : SimEngine::ostree;
                        order = simulate(n, k, engine).order;
                    }
                    times.push_back(to_us(Clock::now() - t0));
                    hash = hash_sequence(order);
                }
                record.answer_hash = hex(hash);
                if (!chain_lengths.empty())
                    record.chain = make_chain_stats(chain_lengths, n, k);
                if (order_hash && *order_hash != hash)
                    throw internal_error("order methods disagree: " + to_string(method));
                order_hash = hash;
                break;
            }
            case BenchMethod::bridge_rank: {
                const std::vector<std::int64_t> ms = random_queries(n, queries, seed);
                record.repetitions = queries;
                std::vector<std::int64_t> answers, chain_lengths;
                answers.reserve(ms.size());
                chain_lengths.reserve(ms.size());
                for (std::int64_t m : ms) {
                    const auto t0 = Clock::now();
                    const BridgeResult res = elimination_rank_traced(n, k, m);
                    times.push_back(to_us(Clock::now() - t0));
                    answers.push_back(res.answer);
                    chain_lengths.push_back(res.chain_length);
                }
                record.answer_hash = hex(hash_sequence(answers));
                record.chain = make_chain_stats(chain_lengths, n, k);
                break;
            }
            case BenchMethod::survivor_classic:
            case BenchMethod::survivor_fast: {
                record.repetitions = reps;
                std::int64_t answer = 0;
                for (std::int64_t r = 0; r < reps; ++r) {
                    const auto t0 = Clock::now();
                    answer = method == BenchMethod::survivor_classic
                                 ? survivor_classic(n, k)
                                 : survivor_fast(n, k);
                    times.push_back(to_us(Clock::now() - t0));
                }
                record.answer = answer;
                if (survivor_answer && *survivor_answer != answer)
                    throw internal_error("survivor methods disagree: " +
                                         to_string(method));
                survivor_answer = answer;
                break;
            }
        }

        record.median_us = percentile(times, 0.5);
        record.p95_us = percentile(times, 0.95);
        report.records.push_back(std::move(record));
    }
    return report;
}

}  // namespace maxnim
