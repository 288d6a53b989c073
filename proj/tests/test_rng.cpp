#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "localdeg/rng.hpp"

using localdeg::RngStream;

TEST_CASE("same seed reproduces, keyed streams differ") {
    RngStream a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    bool any_diff = false;
    RngStream a2(42);
    for (int i = 0; i < 100; ++i) any_diff |= (a2.next_u64() != c.next_u64());
    CHECK(any_diff);

    RngStream k1 = RngStream::keyed(7, 1, 2, 3);
    RngStream k1b = RngStream::keyed(7, 1, 2, 3);
    RngStream k2 = RngStream::keyed(7, 1, 2, 4);
    CHECK(k1.next_u64() == k1b.next_u64());
    CHECK(k1.next_u64() != k2.next_u64());
}

TEST_CASE("uniform01 stays in [0,1) and has the right mean") {
    RngStream rng(1);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    // se of the mean is 1/sqrt(12 n)
    CHECK(std::abs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

TEST_CASE("uniform_below is unbiased over a small range") {
    RngStream rng(5);
    std::map<std::uint64_t, int> counts;
    const int n = 70000;
    for (int i = 0; i < n; ++i) ++counts[rng.uniform_below(7)];
    for (const auto& [v, c] : counts) {
        CHECK(v < 7);
        CHECK(std::abs(c - n / 7.0) < 5.0 * std::sqrt(n * (1.0 / 7) * (6.0 / 7)));
    }
}

TEST_CASE("normal moments") {
    RngStream rng(11);
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        s += z;
        s2 += z * z;
    }
    CHECK(std::abs(s / n) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(s2 / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("gamma and beta moments") {
    RngStream rng(13);
    const int n = 200000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gamma(2.5);
    CHECK(std::abs(s / n - 2.5) < 4.0 * std::sqrt(2.5 / n));

    // shape < 1 branch
    s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gamma(0.4);
    CHECK(std::abs(s / n - 0.4) < 4.0 * std::sqrt(0.4 / n));

    s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.beta(2.0, 5.0);
    const double var = 10.0 / (49.0 * 8.0);
    CHECK(std::abs(s / n - 2.0 / 7.0) < 4.0 * std::sqrt(var / n));
}

TEST_CASE("binomial matches exact pmf for small n") {
    RngStream rng(17);
    const int n = 200000;
    std::vector<int> counts(21, 0);
    for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(rng.binomial(20, 0.3))];
    // exact pmf by recurrence
    double pmf = std::pow(0.7, 20.0);
    for (int k = 0; k <= 20; ++k) {
        const double expected = n * pmf;
        const double sd = std::sqrt(n * pmf * (1.0 - pmf));
        if (expected > 20.0) CHECK(std::abs(counts[static_cast<std::size_t>(k)] - expected) < 5.0 * sd);
        pmf *= (20.0 - k) / (k + 1.0) * (0.3 / 0.7);
    }
}

TEST_CASE("binomial handles large n and extreme p") {
    RngStream rng(19);
    CHECK(rng.binomial(1000, 0.0) == 0);
    CHECK(rng.binomial(1000, 1.0) == 1000);
    CHECK(rng.binomial(0, 0.5) == 0);

    const int reps = 20000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < reps; ++i) {
        const double b = static_cast<double>(rng.binomial(1000000, 0.5));
        s += b;
        s2 += b * b;
    }
    const double mean = s / reps;
    const double var = s2 / reps - mean * mean;
    CHECK(std::abs(mean - 500000.0) < 4.0 * 500.0 / std::sqrt(static_cast<double>(reps)));
    CHECK(std::abs(var / 250000.0 - 1.0) < 0.05);
}
