#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "maxnim/errors.hpp"
#include "maxnim/grundy.hpp"
#include "maxnim/rule.hpp"

using maxnim::RuleFunction;

namespace {

std::vector<std::int64_t> set_of(std::initializer_list<std::int64_t> values) {
    return values;
}

RuleFunction random_rule(std::mt19937_64& rng, std::size_t length) {
    std::vector<int> increments(length);
    for (int& inc : increments) inc = static_cast<int>(rng() & 1u);
    return RuleFunction::tabulated(increments);
}

}  // namespace

TEST_CASE("mex basics") {
    CHECK(maxnim::mex({}) == 0);
    CHECK(maxnim::mex(set_of({0, 1, 2})) == 3);
    CHECK(maxnim::mex(set_of({1, 2})) == 0);
    CHECK(maxnim::mex(set_of({0, 2, 3})) == 1);
    CHECK(maxnim::mex(set_of({0, 0, 1, 1})) == 2);  // duplicates are harmless
}

TEST_CASE("mex properties on random sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> s(rng() % 40);
        for (auto& v : s) v = static_cast<std::int64_t>(rng() % 50);
        const std::int64_t m = maxnim::mex(s);
        for (std::int64_t v : s) CHECK(v != m);
        for (std::int64_t below = 0; below < m; ++below)
            CHECK(std::find(s.begin(), s.end(), below) != s.end());
    }
}

TEST_CASE("moves") {
    const RuleFunction f3 = RuleFunction::floor_div(3);
    CHECK(maxnim::moves(7, f3) == set_of({5, 6}));  // f(7) = 2
    CHECK(maxnim::moves(2, f3).empty());            // f(2) = 0, terminal
    CHECK(maxnim::moves(4, RuleFunction::floor_div(2)) == set_of({2, 3}));
}

TEST_CASE("oracle matches hand recursion for k=2") {
    // mex recursion by hand: G(0..10) = 0,0,1,0,2,1,3,0,4,2,5
    const std::vector<std::int64_t> expected{0, 0, 1, 0, 2, 1, 3, 0, 4, 2, 5};
    CHECK(maxnim::grundy_table(10, RuleFunction::floor_div(2)) == expected);
    CHECK(maxnim::grundy_oracle(5, RuleFunction::floor_div(2)) == 1);
}

TEST_CASE("oracle values for k=3") {
    const RuleFunction f3 = RuleFunction::floor_div(3);
    CHECK(maxnim::grundy_oracle(0, f3) == 0);
    CHECK(maxnim::grundy_oracle(26, f3) == 0);
    CHECK(maxnim::grundy_oracle(27, f3) == 9);
    // positions 1..k-1 have no moves, so the empty-mex gives 0
    CHECK(maxnim::grundy_oracle(1, f3) == 0);
    CHECK(maxnim::grundy_oracle(2, f3) == 0);
}

TEST_CASE("oracle refuses positions above its cap") {
    const RuleFunction f = RuleFunction::floor_div(2);
    CHECK_THROWS_AS(maxnim::grundy_oracle(maxnim::kDefaultOracleBound + 1, f),
                    maxnim::bound_error);
    CHECK_NOTHROW(maxnim::grundy_oracle(500, f, 500));
    CHECK_THROWS_AS(maxnim::grundy_oracle(501, f, 500), maxnim::bound_error);
}

TEST_CASE("levine evaluator matches the oracle") {
    const RuleFunction f2 = RuleFunction::floor_div(2);
    CHECK(maxnim::grundy_levine(5, f2) == 1);
    CHECK(maxnim::grundy_levine(4, f2) == 2);  // f(4)=2 > f(3)=1: jump case
    CHECK(maxnim::grundy_levine(0, f2) == 0);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const RuleFunction f = random_rule(rng, 500);
        const std::vector<std::int64_t> table = maxnim::grundy_table(500, f);
        for (std::int64_t x = 0; x <= 500; ++x)
            REQUIRE(maxnim::grundy_levine(x, f) == table[static_cast<std::size_t>(x)]);
    }
}

TEST_CASE("levine detects step-condition violations") {
    // f(2) jumps by 2: invalid, only representable through the raw factory.
    const RuleFunction bad = RuleFunction::from_values({0, 0, 2, 2, 2});
    CHECK_THROWS_AS(maxnim::grundy_levine(2, bad), maxnim::rule_error);
    CHECK_THROWS_AS(maxnim::grundy_table(4, bad), maxnim::rule_error);
    // decreasing cap is just as invalid
    const RuleFunction decreasing = RuleFunction::from_values({0, 1, 0});
    CHECK_THROWS_AS(maxnim::grundy_levine(2, decreasing), maxnim::rule_error);
}

TEST_CASE("tabulated rules validate increments") {
    CHECK_THROWS_AS(RuleFunction::tabulated({0, 1, 2}), maxnim::rule_error);
    const RuleFunction f = RuleFunction::tabulated({1, 0, 1});
    CHECK(f(0) == 0);
    CHECK(f(1) == 1);
    CHECK(f(2) == 1);
    CHECK(f(3) == 2);
    CHECK(f(10) == 2);  // constant beyond the table
}

TEST_CASE("floor-k recursion matches oracle and paper anchors") {
    CHECK(maxnim::grundy_floor_k(27, 3) == 9);
    CHECK(maxnim::grundy_floor_k(20, 3) == 1);
    CHECK(maxnim::grundy_floor_k(26, 3) == 0);
    CHECK(maxnim::grundy_floor_k(0, 5) == 0);

    // chain 26 -> 17 -> 11 -> 7 -> 4 -> 2 -> 1 -> 0
    const maxnim::GrundyChain chain = maxnim::grundy_floor_k_chain(26, 3);
    CHECK(chain.value == 0);
    CHECK(chain.steps == 7);

    for (std::int64_t k = 2; k <= 6; ++k) {
        const std::vector<std::int64_t> table =
            maxnim::grundy_table(800, RuleFunction::floor_div(k));
        for (std::int64_t x = 0; x <= 800; ++x)
            REQUIRE(maxnim::grundy_floor_k(x, k) == table[static_cast<std::size_t>(x)]);
    }
}

TEST_CASE("floor-k argument checks") {
    CHECK_THROWS_AS(maxnim::grundy_floor_k(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(maxnim::grundy_floor_k(-1, 3), std::invalid_argument);
}

TEST_CASE("floor step identity") {
    // x - floor(x/k) - 1 == floor((k-1)x/k) exactly on non-multiples of k;
    // on multiples the right side is larger by exactly 1.
    for (std::int64_t k = 2; k <= 8; ++k) {
        for (std::int64_t x = 0; x <= 20000; ++x) {
            const std::int64_t lhs = x - x / k - 1;
            const std::int64_t rhs = (k - 1) * x / k;
            if (x % k != 0)
                REQUIRE(lhs == rhs);
            else
                REQUIRE(rhs - lhs == 1);
        }
    }
}

TEST_CASE("grundy value never exceeds floor(x/k)") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 7);
        const std::int64_t x = static_cast<std::int64_t>(rng() % 1000000);
        CHECK(maxnim::grundy_floor_k(x, k) <= x / k);
    }
}

TEST_CASE("P-positions and optimal moves") {
    const RuleFunction f3 = RuleFunction::floor_div(3);
    CHECK(maxnim::is_p_position(0, f3));
    CHECK(maxnim::is_p_position(26, f3));
    CHECK_FALSE(maxnim::is_p_position(27, f3));

    CHECK(maxnim::optimal_moves(27, f3) == set_of({1}));  // only G(26) = 0 in reach
    CHECK(maxnim::optimal_moves(26, f3).empty());
    CHECK(maxnim::optimal_moves(0, f3).empty());
}

TEST_CASE("P/N structure on small positions") {
    for (std::int64_t k = 2; k <= 4; ++k) {
        const RuleFunction f = RuleFunction::floor_div(k);
        for (std::int64_t x = 0; x <= 400; ++x) {
            const std::vector<std::int64_t> winning = maxnim::optimal_moves(x, f);
            if (maxnim::grundy_floor_k(x, k) == 0) {
                REQUIRE(winning.empty());
            } else {
                REQUIRE(!winning.empty());
                for (std::int64_t u : winning)
                    REQUIRE(maxnim::grundy_floor_k(x - u, k) == 0);
            }
        }
    }
}
