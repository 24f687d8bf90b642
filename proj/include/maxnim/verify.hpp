#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace maxnim {

struct Counterexample {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t m = 0;
    std::int64_t expected = 0;  // JJ_k(n, m) by simulation
    std::int64_t got = 0;       // G(n*k - m)
};

struct VerifyCell {
    std::int64_t n = 0;
    std::int64_t k = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;  // first failing m, if any
};

struct VerificationReport {
    std::int64_t k_min = 0, k_max = 0;
    std::int64_t n_min = 0, n_max = 0;
    std::vector<VerifyCell> cells;  // ordered by (k, n)
    std::int64_t checked = 0;       // total (n, k, m) comparisons = sum of n over cells
    double elapsed_seconds = 0.0;

    bool all_pass() const;
    std::int64_t failed_cells() const;
};

/// Compares simulation-defined JJ_k(n, m) against the floor-k Grundy value
/// G(n*k - m) for every m of every (n, k) cell in the grid. Cells are
/// independent and may be spread over `jobs` worker threads; the assembled
/// report does not depend on scheduling.
VerificationReport verify_theorem(std::int64_t k_min, std::int64_t k_max,
                                  std::int64_t n_min, std::int64_t n_max,
                                  int jobs = 1);

}  // namespace maxnim
