#include <doctest.h>

#include "support/oracles.hpp"
#include "zfx/binomial.hpp"
#include "zfx/errors.hpp"

using namespace zfx;

TEST_SUITE("binomial") {

TEST_CASE("agrees with Pascal's triangle") {
    for (int a = -3; a <= 66; ++a)
        for (int b = -3; b <= 68; ++b) CHECK(binomial(a, b) == oracle::choose(a, b));
}

TEST_CASE("out of range is zero") {
    CHECK(binomial(-1, 3) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("overflow is reported") {
    CHECK(binomial(67, 33) == 14226520737620288370ULL);
    CHECK_THROWS_AS(binomial(68, 34), CapacityError);
}

}
