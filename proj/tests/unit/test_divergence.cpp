#include <doctest.h>

#include <cmath>

#include "qgb/divergence.hpp"
#include "qgb/errors.hpp"
#include "qgb/statevector.hpp"
#include "support/oracle.hpp"

using namespace qgb;

TEST_SUITE_BEGIN("divergence");

TEST_CASE("KL of a distribution with itself is zero") {
    RandomStream rng(3);
    std::vector<double> params;
    const Circuit c = oracle::random_circuit(3, 20, rng, params);
    const Pmf p = exact_pmf(simulate(c, params));
    CHECK(kl_divergence(p, p) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("two-bin value against a direct-summation oracle") {
    Pmf p, q;
    p.probs = {0.5, 0.5};
    q.probs = {0.25, 0.75};
    const double expected = 0.5 * std::log(0.5 / 0.25) + 0.5 * std::log(0.5 / 0.75);
    CHECK(kl_divergence(p, q) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(kl_divergence(p, q) == doctest::Approx(0.14384).epsilon(1e-4));
}

TEST_CASE("KL against uniform equals ln(2^n) minus entropy") {
    RandomStream rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> params;
        const Circuit c = oracle::random_circuit(4, 25, rng, params);
        const Pmf p = exact_pmf(simulate(c, params));
        const double identity = std::log(16.0) - entropy(p);
        CHECK(random_baseline(p) == doctest::Approx(identity).epsilon(1e-10));
    }
}

TEST_CASE("nonnegativity with equality only at p == q") {
    RandomStream rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        // Random strictly positive pmfs keep the floor inactive.
        Pmf p, q;
        p.probs.resize(8);
        q.probs.resize(8);
        double sp = 0.0, sq = 0.0;
        for (int i = 0; i < 8; ++i) {
            p.probs[i] = 0.05 + rng.uniform01();
            q.probs[i] = 0.05 + rng.uniform01();
            sp += p.probs[i];
            sq += q.probs[i];
        }
        for (int i = 0; i < 8; ++i) {
            p.probs[i] /= sp;
            q.probs[i] /= sq;
        }
        const double kl = kl_divergence(p, q);
        CHECK(kl >= 0.0);
        if (kl < 1e-12) {
            for (int i = 0; i < 8; ++i) CHECK(p.probs[i] == doctest::Approx(q.probs[i]).epsilon(1e-6));
        }
    }
}

TEST_CASE("random baseline of uniform and one-hot distributions") {
    CHECK(random_baseline(Pmf::uniform(5)) == doctest::Approx(0.0).epsilon(1e-14));
    Pmf one_hot;
    one_hot.probs.assign(16, 0.0);
    one_hot.probs[3] = 1.0;
    CHECK(random_baseline(one_hot) == doctest::Approx(std::log(16.0)).epsilon(1e-12));
    CHECK(random_baseline(one_hot) == doctest::Approx(2.7726).epsilon(1e-4));
}

TEST_CASE("the floor keeps empty estimate bins finite") {
    Pmf p, q;
    p.probs = {0.5, 0.5};
    q.probs = {1.0, 0.0};
    const double kl = kl_divergence(p, q, 1e-8);
    CHECK(std::isfinite(kl));
    CHECK(kl == doctest::Approx(0.5 * std::log(0.5 / 1.0) + 0.5 * std::log(0.5 / 1e-8)));
}

TEST_CASE("validation") {
    Pmf p = Pmf::uniform(2);
    Pmf q = Pmf::uniform(3);
    CHECK_THROWS_AS(kl_divergence(p, q), validation_error);
    CHECK_THROWS_AS(kl_divergence(p, p, 0.0), validation_error);
}

TEST_SUITE_END();
