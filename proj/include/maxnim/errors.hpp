#pragma once

#include <stdexcept>
#include <string>

namespace maxnim {

/// Checked arithmetic left the supported range. All queries must keep
/// n*k below 2^63; anything larger is reported, never wrapped.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

/// grundy_oracle was asked for a position above its configured cap.
class bound_error : public std::runtime_error {
public:
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

/// The requested computation needs more memory or time than this tool will
/// spend (e.g. materializing a circle of 10^9 numbers).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

/// A rule function violated f(0) = 0 or 0 <= f(m) - f(m-1) <= 1.
class rule_error : public std::invalid_argument {
public:
    explicit rule_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An invariant guaranteed by theorem was violated. Must never fire.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace maxnim
