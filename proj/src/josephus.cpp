#include "maxnim/josephus.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "maxnim/errors.hpp"

namespace maxnim {

namespace {

void check_args(std::int64_t n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("circle size n must be >= 1");
    if (k < 2) throw std::invalid_argument("step k must be >= 2");
    if (n > kMaxSimulationSize)
        throw infeasible_error("simulating n=" + std::to_string(n) +
                               " exceeds the cap of " +
                               std::to_string(kMaxSimulationSize) +
                               "; use the bridge queries instead");
}

// Circular pointer walk. Counting starts at number 1 and resets after each
// removal; the survivor is taken as the n-th removal. A round boundary is a
// scan step from a number to a strictly smaller one (the wrap past the top),
// which reproduces the classic round narration for everything but the
// post-survivor tail.
EliminationTrace simulate_naive(std::int64_t n, std::int64_t k) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 1; i < n; ++i) next[static_cast<std::size_t>(i)] = i + 1;
    next[static_cast<std::size_t>(n)] = 1;

    EliminationTrace trace;
    trace.n = n;
    trace.k = k;
    trace.order.reserve(static_cast<std::size_t>(n));
    std::vector<std::int64_t> rounds;
    rounds.reserve(static_cast<std::size_t>(n));

    std::int64_t prev = n;  // element before the next count
    std::int64_t round = 1;
    std::int64_t last_visited = 0;  // 0 = nothing visited yet
    for (std::int64_t removed = 0; removed < n; ++removed) {
        std::int64_t victim = 0;
        for (std::int64_t count = 1; count <= k; ++count) {
            const std::int64_t cur = next[static_cast<std::size_t>(prev)];
            if (last_visited != 0 && cur < last_visited) ++round;
            last_visited = cur;
            if (count < k) {
                prev = cur;
            } else {
                victim = cur;
                next[static_cast<std::size_t>(prev)] = next[static_cast<std::size_t>(cur)];
            }
        }
        trace.order.push_back(victim);
        rounds.push_back(round);
    }
    trace.survivor = trace.order.back();
    trace.rounds = std::move(rounds);
    return trace;
}

// Fenwick tree over 1..n with one unit per live number.
class AliveTree {
public:
    explicit AliveTree(std::int64_t n) : n_(n), tree_(static_cast<std::size_t>(n) + 1) {
        for (std::int64_t i = 1; i <= n; ++i) tree_[static_cast<std::size_t>(i)] = i & -i;
        log_ = 1;
        while ((std::int64_t{1} << log_) <= n) ++log_;
    }

    void remove(std::int64_t pos) {
        for (; pos <= n_; pos += pos & -pos) --tree_[static_cast<std::size_t>(pos)];
    }

    // Smallest index whose prefix count reaches t (1-based t-th live number).
    std::int64_t select(std::int64_t t) const {
        std::int64_t pos = 0;
        for (int j = log_; j >= 0; --j) {
            const std::int64_t nxt = pos + (std::int64_t{1} << j);
            if (nxt <= n_ && tree_[static_cast<std::size_t>(nxt)] < t) {
                pos = nxt;
                t -= tree_[static_cast<std::size_t>(nxt)];
            }
        }
        return pos + 1;
    }

private:
    std::int64_t n_;
    int log_ = 0;
    std::vector<std::int64_t> tree_;
};

EliminationTrace simulate_ostree(std::int64_t n, std::int64_t k) {
    AliveTree alive(n);
    EliminationTrace trace;
    trace.n = n;
    trace.k = k;
    trace.order.reserve(static_cast<std::size_t>(n));

    std::int64_t hole = 0;  // 0-based slot among the remaining numbers
    for (std::int64_t remaining = n; remaining >= 1; --remaining) {
        hole = (hole + k - 1) % remaining;
        const std::int64_t victim = alive.select(hole + 1);
        alive.remove(victim);
        trace.order.push_back(victim);
    }
    trace.survivor = trace.order.back();
    return trace;
}

}  // namespace

EliminationTrace simulate(std::int64_t n, std::int64_t k, SimEngine engine) {
    check_args(n, k);
    return engine == SimEngine::naive ? simulate_naive(n, k) : simulate_ostree(n, k);
}

std::int64_t jj_by_definition(std::int64_t n, std::int64_t k, std::int64_t m) {
    if (m < 1 || m > n)
        throw std::invalid_argument("m must be in 1..n, got " + std::to_string(m));
    const EliminationTrace trace = simulate(n, k);
    for (std::int64_t i = 1; i <= n; ++i) {
        if (trace.order[static_cast<std::size_t>(i - 1)] == m) return n - i;
    }
    throw internal_error("number missing from elimination order");  // unreachable
}

std::vector<std::int64_t> elimination_ranks(const EliminationTrace& trace) {
    std::vector<std::int64_t> ranks(trace.order.size());
    for (std::size_t idx = 0; idx < trace.order.size(); ++idx) {
        const std::int64_t m = trace.order[idx];
        if (m < 1 || m > trace.n)
            throw std::invalid_argument("trace order is not a permutation of 1..n");
        ranks[static_cast<std::size_t>(m - 1)] = static_cast<std::int64_t>(idx) + 1;
    }
    return ranks;
}

EliminationTrace label_rounds(const EliminationTrace& trace) {
    EliminationTrace labeled = simulate(trace.n, trace.k, SimEngine::naive);
    if (labeled.order != trace.order)
        throw internal_error("trace does not match its own (n, k) simulation");
    return labeled;
}

void write_trace_csv(std::ostream& os, const EliminationTrace& trace) {
    const EliminationTrace* source = &trace;
    EliminationTrace labeled;
    if (!trace.rounds) {
        labeled = label_rounds(trace);
        source = &labeled;
    }
    os << "i,removed,round\n";
    for (std::size_t idx = 0; idx < source->order.size(); ++idx) {
        os << (idx + 1) << ',' << source->order[idx] << ','
           << (*source->rounds)[idx] << '\n';
    }
}

}  // namespace maxnim
