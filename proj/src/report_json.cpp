#include "maxnim/report_json.hpp"

namespace maxnim {

Json trace_to_json(const EliminationTrace& trace) {
    Json j;
    j["n"] = trace.n;
    j["k"] = trace.k;
    j["order"] = trace.order;
    j["survivor"] = trace.survivor;
    if (trace.rounds) j["rounds"] = *trace.rounds;
    return j;
}

Json verification_report_to_json(const VerificationReport& report) {
    Json j;
    j["schema"] = 1;
    j["grid"] = {{"k_min", report.k_min},
                 {"k_max", report.k_max},
                 {"n_min", report.n_min},
                 {"n_max", report.n_max}};
    j["all_pass"] = report.all_pass();
    j["totals"] = {{"cells", report.cells.size()},
                   {"failed_cells", report.failed_cells()},
                   {"checked", report.checked},
                   {"elapsed_seconds", report.elapsed_seconds}};
    Json cells = Json::array();
    for (const VerifyCell& cell : report.cells) {
        Json c;
        c["k"] = cell.k;
        c["n"] = cell.n;
        c["pass"] = cell.pass;
        if (cell.counterexample) {
            const Counterexample& ce = *cell.counterexample;
            c["counterexample"] = {{"n", ce.n},
                                   {"k", ce.k},
                                   {"m", ce.m},
                                   {"expected", ce.expected},
                                   {"got", ce.got}};
        }
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    return j;
}

Json bench_report_to_json(const BenchReport& report) {
    Json j;
    j["schema"] = 1;
    j["params"] = {{"n", report.n},
                   {"k", report.k},
                   {"queries", report.queries},
                   {"seed", report.seed}};
    Json records = Json::array();
    for (const BenchRecord& record : report.records) {
        Json r;
        r["method"] = to_string(record.method);
        r["n"] = record.n;
        r["k"] = record.k;
        if (record.infeasible) {
            r["infeasible"] = *record.infeasible;
        } else {
            r["repetitions"] = record.repetitions;
            r["median_us"] = record.median_us;
            r["p95_us"] = record.p95_us;
            if (record.chain) {
                r["chain"] = {{"median", record.chain->median},
                              {"p95", record.chain->p95},
                              {"max", record.chain->max},
                              {"bound", record.chain->bound},
                              {"within_bound", record.chain->within_bound}};
            }
            if (record.answer) r["answer"] = *record.answer;
            if (record.answer_hash) r["answer_hash"] = *record.answer_hash;
        }
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    return j;
}

}  // namespace maxnim
