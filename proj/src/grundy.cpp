#include "maxnim/grundy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "maxnim/errors.hpp"

namespace maxnim {

std::int64_t mex(std::span<const std::int64_t> values) {
    // mex of a set of size s is at most s, so marking s+1 slots suffices.
    const std::int64_t limit = static_cast<std::int64_t>(values.size());
    std::vector<bool> seen(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t v : values) {
        if (v >= 0 && v <= limit) seen[static_cast<std::size_t>(v)] = true;
    }
    std::int64_t v = 0;
    while (seen[static_cast<std::size_t>(v)]) ++v;
    return v;
}

namespace {

// 0 <= f(m) - f(m-1) <= 1, checked at every position an evaluator touches.
std::int64_t checked_step(const RuleFunction& f, std::int64_t m) {
    const std::int64_t diff = f(m) - f(m - 1);
    if (diff < 0 || diff > 1)
        throw rule_error("rule function violates the step condition at m=" +
                         std::to_string(m) + " (f(m)-f(m-1)=" + std::to_string(diff) +
                         ")");
    return diff;
}

}  // namespace

std::vector<std::int64_t> moves(std::int64_t x, const RuleFunction& f) {
    if (x < 0) throw std::invalid_argument("position must be non-negative");
    const std::int64_t cap = f(x);
    std::vector<std::int64_t> result;
    result.reserve(static_cast<std::size_t>(cap));
    for (std::int64_t u = cap; u >= 1; --u) result.push_back(x - u);
    return result;  // ascending: x-cap, ..., x-1
}

std::vector<std::int64_t> grundy_table(std::int64_t x_max, const RuleFunction& f,
                                       std::int64_t bound) {
    if (x_max < 0) throw std::invalid_argument("position must be non-negative");
    if (x_max > bound)
        throw bound_error("grundy_oracle limited to x <= " + std::to_string(bound) +
                          " (asked for " + std::to_string(x_max) +
                          "); use a fast evaluator");
    if (f(0) != 0) throw rule_error("rule function must satisfy f(0) = 0");

    std::vector<std::int64_t> g(static_cast<std::size_t>(x_max) + 1, 0);
    // stamp[v] == x marks Grundy value v as reachable from x; avoids
    // clearing a mark array for every position.
    std::vector<std::int64_t> stamp(static_cast<std::size_t>(x_max) + 2, -1);
    for (std::int64_t x = 1; x <= x_max; ++x) {
        checked_step(f, x);
        const std::int64_t cap = f(x);  // cap <= x for any valid rule
        for (std::int64_t u = 1; u <= cap; ++u) {
            const std::int64_t v = g[static_cast<std::size_t>(x - u)];
            if (v <= cap) stamp[static_cast<std::size_t>(v)] = x;
        }
        std::int64_t v = 0;
        while (stamp[static_cast<std::size_t>(v)] == x) ++v;
        g[static_cast<std::size_t>(x)] = v;
    }
    return g;
}

std::int64_t grundy_oracle(std::int64_t x, const RuleFunction& f, std::int64_t bound) {
    return grundy_table(x, f, bound)[static_cast<std::size_t>(x)];
}

std::int64_t grundy_levine(std::int64_t x, const RuleFunction& f) {
    if (x < 0) throw std::invalid_argument("position must be non-negative");
    while (x > 0) {
        const std::int64_t fx = f(x);
        if (checked_step(f, x) == 1) return fx;  // jump point: G(x) = f(x)
        if (fx > x - 1)
            throw rule_error("rule function exceeds pile size at m=" + std::to_string(x));
        x = x - fx - 1;  // f(x) = f(x-1): G(x) = G(x - f(x) - 1)
    }
    return 0;
}

GrundyChain grundy_floor_k_chain(std::int64_t x, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (x < 0) throw std::invalid_argument("position must be non-negative");
    std::int64_t steps = 0;
    while (x % k != 0) {
        x = x - x / k - 1;  // = floor((k-1)x/k) since x is not a multiple of k
        ++steps;
    }
    return {x / k, steps};
}

std::int64_t grundy(std::int64_t x, const RuleFunction& f) {
    if (f.kind() == RuleFunction::Kind::floor_div) return grundy_floor_k(x, f.k());
    return grundy_levine(x, f);
}

bool is_p_position(std::int64_t x, const RuleFunction& f) {
    return grundy(x, f) == 0;
}

std::vector<std::int64_t> optimal_moves(std::int64_t x, const RuleFunction& f) {
    if (x < 0) throw std::invalid_argument("position must be non-negative");
    std::vector<std::int64_t> winning;
    const std::int64_t cap = f(x);
    for (std::int64_t u = 1; u <= cap; ++u) {
        if (grundy(x - u, f) == 0) winning.push_back(u);
    }
    return winning;
}

}  // namespace maxnim
