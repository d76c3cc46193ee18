#include <doctest.h>

#include <stdexcept>

#include "scrollres/splitting.hpp"

using namespace scrollres;

TEST_CASE("twists are kept as a sorted multiset") {
    const SplittingType s{0, 2, 1, 2, -1};
    CHECK(s.rank() == 5);
    CHECK(s.degree() == 4);
    CHECK(s.spread() == 3);
    CHECK(s.max_twist() == 2);
    CHECK(s.min_twist() == -1);
    CHECK(s.multiplicity(2) == 2);
    CHECK(s.multiplicity(5) == 0);
    CHECK(s.twists() == std::vector<std::int64_t>{2, 2, 1, 0, -1});
    CHECK(s.str() == "{2^2, 1, 0, -1}");
    CHECK(s == SplittingType::from_runs({{1, 1}, {2, 2}, {-1, 1}, {0, 1}}));
}

TEST_CASE("run constructor normalizes and validates") {
    CHECK(SplittingType::from_runs({{3, 0}, {1, 2}, {1, 1}}) == SplittingType{1, 1, 1});
    CHECK_THROWS_AS(SplittingType::from_runs({{0, -1}}), std::invalid_argument);
    const SplittingType zero;
    CHECK(zero.rank() == 0);
    CHECK(zero.degree() == 0);
    CHECK(zero.spread() == 0);
    CHECK(zero.str() == "{}");
    CHECK_THROWS_AS(zero.max_twist(), std::logic_error);
}

TEST_CASE("twisting shifts every summand") {
    const SplittingType s{2, 0, 0};
    CHECK(s.twisted(-1) == SplittingType{1, -1, -1});
    CHECK(s.twisted(0) == s);
    CHECK(s.twisted(3).degree() == s.degree() + 3 * s.rank());
}

TEST_CASE("balanced splitting: stated examples") {
    CHECK(balanced_splitting(9, 10) == SplittingType::from_runs({{1, 9}, {0, 1}}));
    CHECK(balanced_splitting(0, 5) == SplittingType::from_runs({{0, 5}}));
    CHECK(balanced_splitting(56, 44) == SplittingType::from_runs({{2, 12}, {1, 32}}));
    CHECK(balanced_splitting(0, 0) == SplittingType{});
}

TEST_CASE("balanced splitting: errors") {
    CHECK_THROWS_AS(balanced_splitting(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(balanced_splitting(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(balanced_splitting(1, -2), std::invalid_argument);
}

TEST_CASE("balanced splitting: spread, rank and degree over a grid") {
    for (std::int64_t rank = 1; rank <= 17; ++rank)
        for (std::int64_t degree = 0; degree <= 90; ++degree) {
            const SplittingType s = balanced_splitting(degree, rank);
            CHECK(s.rank() == rank);
            CHECK(s.degree() == degree);
            CHECK(s.spread() <= 1);
            CHECK(s.balanced());
        }
}
