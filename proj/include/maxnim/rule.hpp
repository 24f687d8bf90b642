#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxnim {

/// Removal cap for Maximum Nim: from a pile of m stones a player may take
/// between 1 and f(m) stones. A rule function is valid when f(0) = 0 and
/// 0 <= f(m) - f(m-1) <= 1 for every m >= 1, which forces f(m) <= m so no
/// move ever takes more stones than the pile holds.
class RuleFunction {
public:
    enum class Kind { floor_div, tabulated };

    /// f(x) = floor(x / k) with k >= 2.
    static RuleFunction floor_div(std::int64_t k);

    /// f assembled from the successive increments f(m) - f(m-1), each 0 or 1,
    /// so validity holds by construction. Beyond the table f stays constant
    /// (all further increments 0). Throws rule_error on an increment outside
    /// {0, 1}.
    static RuleFunction tabulated(const std::vector<int>& increments);

    /// Takes per-position caps exactly as given, without checking the step
    /// condition; values[m] = f(m), constant beyond the table. Exists so the
    /// evaluators' own violation detection can be exercised. Prefer
    /// tabulated() everywhere else.
    static RuleFunction from_values(std::vector<std::int64_t> values);

    /// The cap f(m). m must be non-negative.
    std::int64_t operator()(std::int64_t m) const;

    Kind kind() const { return kind_; }

    /// Divisor of a floor_div rule; throws std::logic_error otherwise.
    std::int64_t k() const;

    std::string describe() const;

private:
    RuleFunction(Kind kind, std::int64_t k, std::vector<std::int64_t> values);

    Kind kind_;
    std::int64_t k_;
    std::vector<std::int64_t> values_;  // tabulated: values_[m] = f(m)
};

}  // namespace maxnim
