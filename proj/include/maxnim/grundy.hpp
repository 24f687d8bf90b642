#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maxnim/rule.hpp"

namespace maxnim {

/// Default cap for the brute-force oracle. It exists to validate the fast
/// evaluators, not to scale; callers may raise it explicitly.
inline constexpr std::int64_t kDefaultOracleBound = 100000;

/// Smallest non-negative integer not contained in values (treated as a set;
/// duplicates and order are irrelevant).
std::int64_t mex(std::span<const std::int64_t> values);

/// Positions reachable in one move: { x-u : 1 <= u <= f(x) }, ascending.
/// Empty when f(x) = 0.
std::vector<std::int64_t> moves(std::int64_t x, const RuleFunction& f);

/// All Grundy values 0..x_max by the mex recursion. Ground truth for every
/// other evaluator. Throws bound_error when x_max exceeds the cap and
/// rule_error when f turns out to violate the step condition along the way.
std::vector<std::int64_t> grundy_table(std::int64_t x_max, const RuleFunction& f,
                                       std::int64_t bound = kDefaultOracleBound);

/// Grundy number of x by the mex recursion (memoizing 0..x internally).
std::int64_t grundy_oracle(std::int64_t x, const RuleFunction& f,
                           std::int64_t bound = kDefaultOracleBound);

/// Grundy number by iterated descent: x -> x - f(x) - 1 while f(x) = f(x-1),
/// answering f(x) at the first jump point. Works for every valid rule
/// function; throws rule_error when a step-condition violation is met.
std::int64_t grundy_levine(std::int64_t x, const RuleFunction& f);

struct GrundyChain {
    std::int64_t value;
    std::int64_t steps;  // iterations used, for chain-length accounting
};

/// Grundy number for f(x) = floor(x/k): iterate x -> x - floor(x/k) - 1
/// while x is not a multiple of k, then answer x/k. The step equals
/// floor((k-1)x/k) for non-multiples, so it never grows and always lands
/// on a multiple of k.
GrundyChain grundy_floor_k_chain(std::int64_t x, std::int64_t k);

inline std::int64_t grundy_floor_k(std::int64_t x, std::int64_t k) {
    return grundy_floor_k_chain(x, k).value;
}

/// Grundy number via the evaluator suited to the rule: the floor-k recursion
/// for floor_div rules, the descent evaluator otherwise.
std::int64_t grundy(std::int64_t x, const RuleFunction& f);

/// True iff G(x) = 0, i.e. the player who just moved wins with correct play.
bool is_p_position(std::int64_t x, const RuleFunction& f);

/// Winning removals: { u : 1 <= u <= f(x), G(x-u) = 0 }, ascending.
/// Empty exactly when x is a P-position.
std::vector<std::int64_t> optimal_moves(std::int64_t x, const RuleFunction& f);

}  // namespace maxnim
