#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace maxnim {

/// Complete elimination record of one Josephus circle. The survivor is kept
/// as the n-th removal so that every number has a rank; rounds are optional
/// presentation metadata and never feed any computation.
struct EliminationTrace {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> order;  // permutation of 1..n, survivor last
    std::int64_t survivor = 0;
    std::optional<std::vector<std::int64_t>> rounds;  // aligned with order, non-decreasing
};

enum class SimEngine {
    naive,   // circular pointer walk, O(n*k)
    ostree,  // Fenwick-tree order statistics, O(n log n)
};

/// Traces above this size are refused (infeasible_error) rather than
/// allocated; use the bridge queries for large n.
inline constexpr std::int64_t kMaxSimulationSize = 20'000'000;

/// Removes every k-th number from the circle 1..n, counting from number 1,
/// resetting the count after each removal, until the circle is empty. Both
/// engines produce identical traces; only the naive engine fills rounds.
EliminationTrace simulate(std::int64_t n, std::int64_t k,
                          SimEngine engine = SimEngine::ostree);

/// JJ_k(n, m) = n - i where m is the i-th number removed (survivor: i = n,
/// so JJ = 0). Runs a full simulation; use the bridge for repeated queries.
std::int64_t jj_by_definition(std::int64_t n, std::int64_t k, std::int64_t m);

/// ranks[m-1] = 1-based elimination step of number m.
std::vector<std::int64_t> elimination_ranks(const EliminationTrace& trace);

/// Copy of trace with rounds filled. A new round starts whenever the scan
/// passes from a number to a strictly smaller one, i.e. wraps past the top
/// of the circle.
EliminationTrace label_rounds(const EliminationTrace& trace);

/// CSV with header "i,removed,round"; labels rounds first when missing.
void write_trace_csv(std::ostream& os, const EliminationTrace& trace);

}  // namespace maxnim
