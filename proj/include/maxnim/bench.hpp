#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxnim {

enum class BenchMethod {
    simulate_naive,
    simulate_ostree,
    bridge_rank,
    bridge_order,
    survivor_classic,
    survivor_fast,
};

std::string to_string(BenchMethod method);
std::optional<BenchMethod> parse_bench_method(const std::string& name);
std::vector<BenchMethod> all_bench_methods();

/// Chain-iteration statistics plus the engineering bound
/// c * k * ln(n*k) + c that every bridge query is expected to respect.
struct ChainStats {
    std::int64_t median = 0;
    std::int64_t p95 = 0;
    std::int64_t max = 0;
    double bound = 0.0;
    bool within_bound = true;
};

/// Fitted constant for the chain-length bound; chosen with ~40% headroom
/// over the worst chains observed across k <= 8 up to n = 10^9.
inline constexpr double kChainBoundC = 1.25;

double chain_length_bound(std::int64_t n, std::int64_t k);

struct BenchRecord {
    BenchMethod method = BenchMethod::bridge_rank;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t repetitions = 0;       // timed samples actually run
    std::optional<std::string> infeasible;  // reason, when refused
    double median_us = 0.0;
    double p95_us = 0.0;
    std::optional<ChainStats> chain;    // bridge methods only
    std::optional<std::int64_t> answer;      // survivor methods
    std::optional<std::string> answer_hash;  // order/rank methods (FNV-1a, hex)
};

struct BenchReport {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t queries = 0;
    std::uint64_t seed = 0;
    std::vector<BenchRecord> records;

    bool any_infeasible() const;
};

/// Times each method on identical inputs. Rank methods answer `queries`
/// seeded random ranks; whole-structure methods (orders, survivors) run
/// min(queries, 5) repetitions. Methods that would materialize a circle
/// beyond the simulation cap are marked infeasible instead of run. Equal
/// outputs across comparable methods are enforced (internal_error on
/// disagreement).
BenchReport run_bench(std::int64_t n, std::int64_t k, std::int64_t queries,
                      const std::vector<BenchMethod>& methods, std::uint64_t seed);

}  // namespace maxnim
