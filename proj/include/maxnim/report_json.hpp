#pragma once

#include <json.hpp>

#include "maxnim/bench.hpp"
#include "maxnim/josephus.hpp"
#include "maxnim/verify.hpp"

namespace maxnim {

// ordered_json keeps field order stable so reports are byte-reproducible
// apart from timing fields.
using Json = nlohmann::ordered_json;

/// {n, k, order, survivor, rounds}; rounds only when present.
Json trace_to_json(const EliminationTrace& trace);

/// Versioned report ("schema": 1) with grid, totals and per-cell results.
Json verification_report_to_json(const VerificationReport& report);

/// Versioned report ("schema": 1) with parameters and per-method records.
Json bench_report_to_json(const BenchReport& report);

}  // namespace maxnim
