#include <doctest.h>

#include <cmath>

#include "qgb/errors.hpp"
#include "qgb/noise_model.hpp"
#include "qgb/profile.hpp"
#include "qgb/trajectory.hpp"
#include "support/oracle.hpp"

using namespace qgb;

TEST_SUITE_BEGIN("noise");

TEST_CASE("confusion matrix basics") {
    Pmf p;
    p.probs = {1.0, 0.0};
    const Pmf identity = confusion_matrix_pmf(p, 0.0, 0.0);
    CHECK(identity.probs[0] == doctest::Approx(1.0));

    const Pmf flipped = confusion_matrix_pmf(p, 0.1, 0.0);
    CHECK(flipped.probs[0] == doctest::Approx(0.9));
    CHECK(flipped.probs[1] == doctest::Approx(0.1));

    Pmf p11;
    p11.probs = {0.0, 0.0, 0.0, 1.0};
    const Pmf swapped = confusion_matrix_pmf(p11, 0.0, 1.0);
    CHECK(swapped.probs[0] == doctest::Approx(1.0));
}

TEST_CASE("confusion matrix preserves total probability and is linear") {
    RandomStream rng(3);
    std::vector<double> params;
    const Circuit ca = oracle::random_circuit(3, 15, rng, params);
    const Pmf a = exact_pmf(simulate(ca, params));
    const Circuit cb = oracle::random_circuit(3, 15, rng, params);
    const Pmf b = exact_pmf(simulate(cb, params));

    const Pmf ca_out = confusion_matrix_pmf(a, 0.07, 0.12);
    double total = 0.0;
    for (const double v : ca_out.probs) total += v;
    CHECK(std::fabs(total - 1.0) < 1e-12);

    const double w = 0.3;
    Pmf mix;
    mix.probs.resize(a.probs.size());
    for (std::size_t i = 0; i < mix.probs.size(); ++i) mix.probs[i] = w * a.probs[i] + (1.0 - w) * b.probs[i];
    const Pmf mixed_out = confusion_matrix_pmf(mix, 0.07, 0.12);
    const Pmf cb_out = confusion_matrix_pmf(b, 0.07, 0.12);
    for (std::size_t i = 0; i < mix.probs.size(); ++i) {
        CHECK(mixed_out.probs[i] ==
              doctest::Approx(w * ca_out.probs[i] + (1.0 - w) * cb_out.probs[i]).epsilon(1e-12));
    }
}

TEST_CASE("symmetric readout composes like binary symmetric channels") {
    RandomStream rng(5);
    std::vector<double> params;
    const Circuit c = oracle::random_circuit(3, 20, rng, params);
    const Pmf pmf = exact_pmf(simulate(c, params));
    const double p = 0.08, q = 0.15;
    const Pmf twice = confusion_matrix_pmf(confusion_matrix_pmf(pmf, p, p), q, q);
    const double combined = p + q - 2.0 * p * q;
    const Pmf once = confusion_matrix_pmf(pmf, combined, combined);
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        CHECK(twice.probs[i] == doctest::Approx(once.probs[i]).epsilon(1e-12));
}

TEST_CASE("probabilities out of range are rejected") {
    Pmf p = Pmf::uniform(1);
    CHECK_THROWS_AS(confusion_matrix_pmf(p, -0.1, 0.0), validation_error);
    CHECK_THROWS_AS(confusion_matrix_pmf(p, 0.0, 1.2), validation_error);
    NoiseModel bad;
    bad.p_depol_2q = 1.5;
    CHECK_THROWS_AS(bad.validate(), validation_error);
}

TEST_CASE("confusion-on-pmf equals trajectory bit-flip statistics") {
    RandomStream rng(7);
    std::vector<double> params;
    const Circuit c = oracle::random_circuit(2, 10, rng, params);
    NoiseModel noise;
    noise.p01 = 0.08;
    noise.p10 = 0.13;
    const Pmf analytic = confusion_matrix_pmf(exact_pmf(simulate(c, params)), noise.p01, noise.p10);
    const ShotHistogram hist = trajectory_histogram(c, params, noise, 100'000, rng);
    CHECK(oracle::tv_distance(analytic, hist.empirical()) < 0.01);
}

TEST_CASE("profile parsing: hardware snapshot values") {
    const auto sherbrooke = load_profile(
        "name = ibm_sherbrooke\n"
        "basis_gates = rz, sx, cx\n"
        "p01 = 1e-2\n"
        "p10 = 1e-2\n"
        "p_depol_2q = 7.477e-3\n");
    CHECK(sherbrooke.name == "ibm_sherbrooke");
    CHECK(sherbrooke.noise.p01 == doctest::Approx(1e-2));
    CHECK(sherbrooke.noise.p10 == doctest::Approx(1e-2));
    CHECK(sherbrooke.noise.p_depol_2q == doctest::Approx(7.477e-3));
    CHECK(sherbrooke.basis_gates.size() == 3);

    const auto harmony = load_profile(
        "# trapped-ion snapshot\n"
        "name = ionq_harmony\n"
        "basis_gates = rz,rx,rxx\n"
        "p01 = 1.8e-3\n"
        "p10 = 1.8e-3\n"
        "p_depol_2q = 2.7e-2\n"
        "coupling_map = 0-1;1-2;0-2\n");
    CHECK(harmony.noise.p01 == doctest::Approx(1.8e-3));
    CHECK(harmony.noise.p_depol_2q == doctest::Approx(2.7e-2));
    CHECK(harmony.coupling_map.size() == 3);
    CHECK(harmony.coupling_map[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("profile rejects bad documents") {
    CHECK_THROWS_AS(load_profile("basis_gates = rz\np_depol_2q = 1.5\n"), validation_error);  // out of range
    CHECK_THROWS_AS(load_profile("basis_gates = rz\nfoo = 1\n"), validation_error);           // unknown key
    CHECK_THROWS_AS(load_profile("name = x\n"), validation_error);                            // missing basis gates
    CHECK_THROWS_AS(load_profile("basis_gates = warp\n"), validation_error);                  // unknown gate
    CHECK_THROWS_AS(load_profile("basis_gates = rz\ncoupling_map = 0:1\n"), validation_error);
}

TEST_SUITE_END();
