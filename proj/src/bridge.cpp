#include "maxnim/bridge.hpp"

#include <stdexcept>
#include <string>

#include "maxnim/checked.hpp"
#include "maxnim/errors.hpp"
#include "maxnim/grundy.hpp"

namespace maxnim {

namespace {

bool forward_step_hits(std::int64_t x, std::int64_t k, std::int64_t y) {
    return x % k != 0 && x - x / k - 1 == y;
}

void check_query(std::int64_t n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
}

}  // namespace

std::int64_t inverse_step(std::int64_t y, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (y < 0) throw std::invalid_argument("y must be non-negative");
    // On [qk+1, qk+k-1] the forward map is x -> x - q - 1, so the preimage
    // of y sits at x = y + q + 1 with q = floor(y/(k-1)).
    const std::int64_t candidate = checked_add(checked_add(y, y / (k - 1)), 1);
    if (forward_step_hits(candidate, k, y)) return candidate;
    for (std::int64_t x = candidate - 2; x <= checked_add(candidate, 2); ++x) {
        if (x >= 1 && forward_step_hits(x, k, y)) return x;
    }
    throw internal_error("no preimage for y=" + std::to_string(y) +
                         ", k=" + std::to_string(k));
}

BridgeResult elimination_rank_traced(std::int64_t n, std::int64_t k, std::int64_t m) {
    check_query(n, k);
    if (m < 1 || m > n)
        throw std::invalid_argument("m must be in 1..n, got " + std::to_string(m));
    const std::int64_t nk = checked_mul(n, k);
    const GrundyChain chain = grundy_floor_k_chain(nk - m, k);
    // G(nk-m) = JJ in 0..n-1, so the rank n - G lands in 1..n.
    return {n, k, m, n - chain.value, chain.steps};
}

std::int64_t elimination_rank(std::int64_t n, std::int64_t k, std::int64_t m) {
    return elimination_rank_traced(n, k, m).answer;
}

BridgeResult eliminated_at_traced(std::int64_t n, std::int64_t k, std::int64_t i) {
    check_query(n, k);
    if (i < 1 || i > n)
        throw std::invalid_argument("i must be in 1..n, got " + std::to_string(i));
    const std::int64_t nk = checked_mul(n, k);
    const std::int64_t window_lo = nk - n;  // positions encoding m = 1..n

    // Anchor: G(v*k) = v. Climb the Grundy-preserving chain until it enters
    // the window; the unique-preimage property makes the climb deterministic.
    const std::int64_t v = n - i;
    std::int64_t x = checked_mul(v, k);
    std::int64_t steps = 0;
    while (x < window_lo) {
        x = inverse_step(x, k);
        ++steps;
    }
    if (x > nk - 1)
        throw internal_error("grundy chain overshot the query window for n=" +
                             std::to_string(n) + ", k=" + std::to_string(k) +
                             ", i=" + std::to_string(i));
    return {n, k, i, nk - x, steps};
}

std::int64_t eliminated_at(std::int64_t n, std::int64_t k, std::int64_t i) {
    return eliminated_at_traced(n, k, i).answer;
}

std::int64_t survivor_fast(std::int64_t n, std::int64_t k) {
    return eliminated_at(n, k, n);
}

std::vector<std::int64_t> full_order_fast(std::int64_t n, std::int64_t k) {
    check_query(n, k);
    std::vector<std::int64_t> order;
    order.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) order.push_back(eliminated_at(n, k, i));
    return order;
}

std::int64_t survivor_classic(std::int64_t n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::int64_t j = 0;
    for (std::int64_t size = 2; size <= n; ++size) j = (j + k) % size;
    return j + 1;
}

}  // namespace maxnim
