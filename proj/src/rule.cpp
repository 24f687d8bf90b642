#include "maxnim/rule.hpp"

#include <stdexcept>
#include <utility>

#include "maxnim/errors.hpp"

namespace maxnim {

RuleFunction::RuleFunction(Kind kind, std::int64_t k, std::vector<std::int64_t> values)
    : kind_(kind), k_(k), values_(std::move(values)) {}

RuleFunction RuleFunction::floor_div(std::int64_t k) {
    if (k < 2) throw std::invalid_argument("floor_div rule needs k >= 2");
    return RuleFunction(Kind::floor_div, k, {});
}

RuleFunction RuleFunction::tabulated(const std::vector<int>& increments) {
    std::vector<std::int64_t> values;
    values.reserve(increments.size() + 1);
    values.push_back(0);  // f(0) = 0
    for (int inc : increments) {
        if (inc != 0 && inc != 1)
            throw rule_error("tabulated rule increment must be 0 or 1, got " +
                             std::to_string(inc));
        values.push_back(values.back() + inc);
    }
    return RuleFunction(Kind::tabulated, 0, std::move(values));
}

RuleFunction RuleFunction::from_values(std::vector<std::int64_t> values) {
    if (values.empty()) values.push_back(0);
    return RuleFunction(Kind::tabulated, 0, std::move(values));
}

std::int64_t RuleFunction::operator()(std::int64_t m) const {
    if (m < 0) throw std::invalid_argument("pile size must be non-negative");
    if (kind_ == Kind::floor_div) return m / k_;
    if (m >= static_cast<std::int64_t>(values_.size())) return values_.back();
    return values_[static_cast<std::size_t>(m)];
}

std::int64_t RuleFunction::k() const {
    if (kind_ != Kind::floor_div)
        throw std::logic_error("k() is only defined for floor_div rules");
    return k_;
}

std::string RuleFunction::describe() const {
    if (kind_ == Kind::floor_div) return "floor(x/" + std::to_string(k_) + ")";
    return "tabulated[" + std::to_string(values_.size() - 1) + "]";
}

}  // namespace maxnim
