#pragma once

#include <cstdint>
#include <vector>

namespace maxnim {

/// Query answer plus the number of Grundy-chain iterations spent on it.
struct BridgeResult {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t query = 0;  // m or i, echoed back
    std::int64_t answer = 0;
    std::int64_t chain_length = 0;
};

/// The unique x with x mod k != 0 and x - floor(x/k) - 1 = y. Solved in
/// closed form (x = y + floor(y/(k-1)) + 1) and always re-checked by the
/// roundtrip identity, falling back to a small window scan around the
/// candidate.
std::int64_t inverse_step(std::int64_t y, std::int64_t k);

/// 1-based step at which number m is removed from the circle of n:
/// i = n - G(n*k - m). Cost is one Grundy chain, independent of n.
BridgeResult elimination_rank_traced(std::int64_t n, std::int64_t k, std::int64_t m);
std::int64_t elimination_rank(std::int64_t n, std::int64_t k, std::int64_t m);

/// The number removed at step i, by running the Grundy chain upward from
/// the anchor (n-i)*k until it lands in [n*k-n, n*k-1]; the answer is
/// n*k - x. Overshooting the window would falsify the underlying theorem
/// and raises internal_error.
BridgeResult eliminated_at_traced(std::int64_t n, std::int64_t k, std::int64_t i);
std::int64_t eliminated_at(std::int64_t n, std::int64_t k, std::int64_t i);

/// The survivor, i.e. eliminated_at(n, k, n).
std::int64_t survivor_fast(std::int64_t n, std::int64_t k);

/// Full elimination order assembled from eliminated_at; equals
/// simulate(n, k).order.
std::vector<std::int64_t> full_order_fast(std::int64_t n, std::int64_t k);

/// Independent literature oracle: J(1) = 0, J(j) = (J(j-1) + k) mod j,
/// survivor J(n) + 1. Accepts k >= 1. Exists solely to cross-check
/// survivor_fast.
std::int64_t survivor_classic(std::int64_t n, std::int64_t k);

}  // namespace maxnim
