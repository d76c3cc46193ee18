#include <doctest.h>

#include <limits>

#include "scrollres/arith.hpp"

using namespace scrollres;

TEST_CASE("binomial values and conventions") {
    CHECK(binomial(11, 3) == 165);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(9, 1) == 9);

    // out-of-range r gives 0, negative n is rejected outright
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 3) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial(-4, 2), std::invalid_argument);
}

TEST_CASE("binomial agrees with the Pascal recurrence") {
    // independent route: C(n,r) = C(n-1,r-1) + C(n-1,r)
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t r = 0; r <= n; ++r)
            CHECK(binomial_wide(n, r) ==
                  binomial_wide(n - 1, r - 1) + binomial_wide(n - 1, r));
}

TEST_CASE("128-bit values print in decimal") {
    CHECK(wide_str(0) == "0");
    CHECK(wide_str(-7) == "-7");
    CHECK(wide_str(binomial_wide(120, 60)) == "96614908840363322603893139521372656");
}

TEST_CASE("overflow is a hard error") {
    CHECK_THROWS_AS(binomial_wide(200, 100), std::overflow_error);
    CHECK_THROWS_AS(narrow(wmul(Wide(1) << 70, 1000)), std::overflow_error);
    CHECK(narrow(Wide(std::numeric_limits<std::int64_t>::max())) ==
          std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(narrow(wadd(Wide(std::numeric_limits<std::int64_t>::max()), 1)),
                    std::overflow_error);
    Wide big = Wide(1) << 126;
    CHECK_THROWS_AS(wadd(big, big), std::overflow_error);
    CHECK_THROWS_AS(wmul(big, 4), std::overflow_error);
}

TEST_CASE("exact division refuses remainders") {
    CHECK(exact_div(56, 8) == 7);
    CHECK(exact_div(-24, 6) == -4);
    CHECK_THROWS_AS(exact_div(7, 2), std::logic_error);
    CHECK_THROWS_AS(exact_div(1, 0), std::logic_error);
}
