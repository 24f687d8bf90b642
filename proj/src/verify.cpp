#include "maxnim/verify.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "maxnim/checked.hpp"
#include "maxnim/grundy.hpp"
#include "maxnim/josephus.hpp"

namespace maxnim {

bool VerificationReport::all_pass() const {
    for (const VerifyCell& cell : cells)
        if (!cell.pass) return false;
    return true;
}

std::int64_t VerificationReport::failed_cells() const {
    std::int64_t failed = 0;
    for (const VerifyCell& cell : cells)
        if (!cell.pass) ++failed;
    return failed;
}

namespace {

VerifyCell check_cell(std::int64_t n, std::int64_t k) {
    VerifyCell cell;
    cell.n = n;
    cell.k = k;
    const EliminationTrace trace = simulate(n, k, SimEngine::ostree);
    const std::vector<std::int64_t> ranks = elimination_ranks(trace);
    const std::int64_t nk = checked_mul(n, k);
    for (std::int64_t m = 1; m <= n; ++m) {
        const std::int64_t expected = n - ranks[static_cast<std::size_t>(m - 1)];
        const std::int64_t got = grundy_floor_k(nk - m, k);
        if (expected != got) {
            cell.pass = false;
            cell.counterexample = Counterexample{n, k, m, expected, got};
            break;
        }
    }
    return cell;
}

}  // namespace

VerificationReport verify_theorem(std::int64_t k_min, std::int64_t k_max,
                                  std::int64_t n_min, std::int64_t n_max, int jobs) {
    if (k_min < 2) throw std::invalid_argument("k-min must be >= 2");
    if (n_min < 1) throw std::invalid_argument("n-min must be >= 1");
    if (k_min > k_max) throw std::invalid_argument("k-min must not exceed k-max");
    if (n_min > n_max) throw std::invalid_argument("n-min must not exceed n-max");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");

    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.k_min = k_min;
    report.k_max = k_max;
    report.n_min = n_min;
    report.n_max = n_max;
    const std::size_t cell_count =
        static_cast<std::size_t>((k_max - k_min + 1) * (n_max - n_min + 1));
    report.cells.resize(cell_count);

    // Cells are independent; workers pull indices and write into their own
    // slot, so the assembled report is scheduling-independent.
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t idx = cursor.fetch_add(1); idx < cell_count;
             idx = cursor.fetch_add(1)) {
            const std::int64_t k = k_min + static_cast<std::int64_t>(idx) /
                                               (n_max - n_min + 1);
            const std::int64_t n = n_min + static_cast<std::int64_t>(idx) %
                                               (n_max - n_min + 1);
            report.cells[idx] = check_cell(n, k);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    for (const VerifyCell& cell : report.cells) report.checked += cell.n;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace maxnim
