#include "binotrig/binomial.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace binotrig;

namespace {

// Gamma-function route, independent of the recurrence.
long double gamma_binom(long double n, int k)
{
    int s1 = 0, s2 = 0;
    const long double a = lgammal(n + 1);
    s1 = std::signbit(tgammal(n + 1)) ? -1 : 1;
    const long double b = lgammal(n - k + 1);
    s2 = std::signbit(tgammal(n - k + 1)) ? -1 : 1;
    return s1 * s2 * expl(a - b - lgammal(k + 1.0L));
}

double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

} // namespace

TEST_CASE("coefficient examples")
{
    CHECK(binom(4, 2) == 6.0);
    CHECK(binom(0.5, 2) == -0.125);
    CHECK(binom(-2, 3) == -4.0);
    CHECK(binom(4, 5) == 0.0);
    for (double n : {-7.5, -1.0, 0.0, 0.5, 3.0, 1e3})
        CHECK(binom(n, 0) == 1.0);
}

TEST_CASE("invalid arguments")
{
    CHECK_THROWS_AS(binom(2.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(binom(std::numeric_limits<double>::infinity(), 2), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientStream(std::nan("")), std::invalid_argument);
}

TEST_CASE("integer detection is exact")
{
    CHECK(is_integer(3.0));
    CHECK(is_integer(-4.0));
    CHECK_FALSE(is_integer(3.0 + 1e-9));
    CHECK_FALSE(is_nonnegative_integer(-1.0));
    CHECK(is_nonnegative_integer(0.0));
}

TEST_CASE("stream yields the incremental coefficients")
{
    SUBCASE("n = 3")
    {
        CoefficientStream s(3);
        CHECK(s.index() == 0);
        CHECK(s.current() == 1.0);
        const double want[] = {3, 3, 1, 0};
        for (double w : want)
            CHECK(s.advance() == w);
        CHECK(s.index() == 4);
    }
    SUBCASE("n = 0")
    {
        CoefficientStream s(0);
        CHECK(s.current() == 1.0);
        for (int i = 0; i < 5; ++i)
            CHECK(s.advance() == 0.0);
    }
    SUBCASE("n = -1")
    {
        CoefficientStream s(-1);
        for (int k = 1; k <= 20; ++k)
            CHECK(s.advance() == (k % 2 ? -1.0 : 1.0));
    }
    SUBCASE("matches binom")
    {
        for (double n : {-3.25, -0.5, 0.5, 2.75, 11.0}) {
            CoefficientStream s(n);
            for (int k = 0; k < 60; ++k, s.advance())
                CHECK(s.current() == binom(n, k));
        }
    }
}

TEST_CASE("vanishing past integer n")
{
    for (int n = 0; n <= 30; ++n) {
        CoefficientStream s(n);
        for (int k = 0; k <= n; ++k)
            s.advance();
        for (int j = 1; j <= 50; ++j, s.advance()) {
            REQUIRE(s.current() == 0.0);
            REQUIRE(binom(n, n + j) == 0.0);
        }
    }
}

TEST_CASE("symmetry is exact for integer n")
{
    // Up to n = 50 every intermediate c*(n-k) is an integer below 2^53.
    for (int n = 0; n <= 50; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(binom(n, k) == binom(n, n - k));
}

TEST_CASE("agrees with the gamma-function route")
{
    std::mt19937_64 rng(20261014);
    std::uniform_real_distribution<double> exponent(-5.0, 5.0);
    std::uniform_int_distribution<int> index(0, 30);
    for (int i = 0; i < 1000; ++i) {
        const double n = exponent(rng);
        const int k = index(rng);
        if (is_integer(n))
            continue;
        const auto want = static_cast<double>(gamma_binom(n, k));
        REQUIRE(rel_diff(binom(n, k), want) < 1e-10);
    }
}

TEST_CASE("recurrence consistency, randomized")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-50.0, 50.0);
    std::uniform_int_distribution<int> index(0, 200);
    for (int i = 0; i < 1000; ++i) {
        const double n = exponent(rng);
        const int k = index(rng);
        const double lhs = binom(n, k + 1) * (k + 1);
        const double rhs = binom(n, k) * (n - k);
        if (lhs == 0.0 && rhs == 0.0)
            continue;
        REQUIRE(std::abs(lhs - rhs) <= 1e-14 * std::max(std::abs(lhs), std::abs(rhs)));
    }
}

TEST_CASE("Pascal rule, randomized")
{
    // Relative to |binom(n,k)| + |binom(n,k-1)|, the scale of the addends.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> exponent(-20.0, 20.0);
    std::uniform_int_distribution<int> index(1, 40);
    for (int i = 0; i < 1000; ++i) {
        // Dyadic grid so that n + 1 is exact.
        const double n = i % 4 == 0 ? std::round(exponent(rng)) : std::round(exponent(rng) * 1024.0) / 1024.0;
        const int k = index(rng);
        const double a = binom(n, k);
        const double b = binom(n, k - 1);
        const double lhs = binom(n + 1, k);
        const double scale = std::abs(a) + std::abs(b);
        if (scale == 0.0) {
            REQUIRE(lhs == 0.0);
            continue;
        }
        REQUIRE(std::abs(lhs - (a + b)) <= 1e-12 * scale);
    }
}
