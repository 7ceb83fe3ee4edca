#include <doctest.h>

#include <cmath>
#include <vector>

#include "qgb/errors.hpp"
#include "qgb/rng.hpp"
#include "support/oracle.hpp"

using qgb::RandomStream;

TEST_SUITE_BEGIN("rng");

TEST_CASE("same seed reproduces the stream") {
    RandomStream a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomStream c(43);
    bool all_equal = true;
    RandomStream a2(42);
    for (int i = 0; i < 16; ++i) all_equal = all_equal && (a2.next_u64() == c.next_u64());
    CHECK_FALSE(all_equal);
}

TEST_CASE("uniform01 stays in [0,1) and looks uniform") {
    RandomStream rng(7);
    double sum = 0.0;
    const int n = 100'000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::fabs(sum / n - 0.5) < 0.005);
}

TEST_CASE("normal moments") {
    RandomStream rng(11);
    const int n = 200'000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sq += x * x;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::fabs(mean) < 0.01);
    CHECK(std::fabs(var - 1.0) < 0.02);
}

TEST_CASE("uniform_below bounds and rejection of zero") {
    RandomStream rng(3);
    for (int i = 0; i < 10'000; ++i) CHECK(rng.uniform_below(7) < 7);
    CHECK_THROWS_AS(rng.uniform_below(0), qgb::validation_error);
}

namespace {

// Exact Binomial(n, p) log-pmf.
double binom_log_pmf(std::uint64_t n, double p, std::uint64_t k) {
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0) + kd * std::log(p) +
           (nd - kd) * std::log1p(-p);
}

// Chi-square goodness of fit against the exact pmf, pooling bins with
// expected count below 5 into the tails.
void check_binomial_distribution(std::uint64_t n, double p, int draws, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<int> counts(n + 1, 0);
    for (int i = 0; i < draws; ++i) ++counts[rng.binomial(n, p)];

    std::vector<double> expected(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) expected[k] = std::exp(binom_log_pmf(n, p, k)) * draws;

    double chi2 = 0.0;
    int df = -1;
    double pool_obs = 0.0, pool_exp = 0.0;
    for (std::uint64_t k = 0; k <= n; ++k) {
        pool_obs += counts[k];
        pool_exp += expected[k];
        if (pool_exp >= 5.0) {
            chi2 += (pool_obs - pool_exp) * (pool_obs - pool_exp) / pool_exp;
            ++df;
            pool_obs = pool_exp = 0.0;
        }
    }
    if (pool_exp > 0.0) {
        chi2 += (pool_obs - pool_exp) * (pool_obs - pool_exp) / std::max(pool_exp, 1e-9);
        ++df;
    }
    REQUIRE(df >= 3);
    CHECK(chi2 < oracle::chi2_critical(df, 3.9));  // ~1e-4 level
}

}  // namespace

TEST_CASE("binomial matches the exact distribution in both regimes") {
    check_binomial_distribution(40, 0.3, 20'000, 101);   // inversion path (np = 12)
    check_binomial_distribution(500, 0.3, 20'000, 202);  // BTRS path (np = 150)
    check_binomial_distribution(200, 0.9, 20'000, 303);  // symmetry + BTRS
}

TEST_CASE("binomial edge cases") {
    RandomStream rng(5);
    CHECK(rng.binomial(100, 0.0) == 0);
    CHECK(rng.binomial(100, 1.0) == 100);
    CHECK(rng.binomial(0, 0.5) == 0);
    for (int i = 0; i < 1000; ++i) CHECK(rng.binomial(10, 0.5) <= 10);
    CHECK_THROWS_AS(rng.binomial(10, 1.5), qgb::validation_error);
}

TEST_CASE("binomial mean for very large n (multinomial regime)") {
    RandomStream rng(9);
    const std::uint64_t n = 1'000'000;
    const double p = 2.4e-4;
    double sum = 0.0;
    const int draws = 2000;
    for (int i = 0; i < draws; ++i) sum += static_cast<double>(rng.binomial(n, p));
    const double mean = sum / draws;
    const double expect = static_cast<double>(n) * p;
    const double sigma = std::sqrt(expect * (1.0 - p) / draws);
    CHECK(std::fabs(mean - expect) < 5.0 * sigma);
}

TEST_SUITE_END();
