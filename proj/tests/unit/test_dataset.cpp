#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qgb/dataset.hpp"
#include "qgb/errors.hpp"

using namespace qgb;

TEST_SUITE_BEGIN("dataset");

TEST_CASE("jitter-free X points lie exactly on the diagonals") {
    const ContinuousDataset ds = generate_x_dataset(500, 0.0, 9);
    for (const auto& p : ds.points) {
        const double on_main = std::fabs(p[1] - p[0]);
        const double on_anti = std::fabs(p[1] - (1.0 - p[0]));
        CHECK(std::min(on_main, on_anti) < 1e-15);
    }
}

TEST_CASE("X dataset is centered and deterministic") {
    const ContinuousDataset ds = generate_x_dataset(10'000, 0.02, 17);
    double mx = 0.0, my = 0.0;
    for (const auto& p : ds.points) {
        mx += p[0];
        my += p[1];
    }
    mx /= 10'000.0;
    my /= 10'000.0;
    CHECK(std::fabs(mx - 0.5) < 0.02);
    CHECK(std::fabs(my - 0.5) < 0.02);

    const ContinuousDataset again = generate_x_dataset(10'000, 0.02, 17);
    CHECK(ds.points == again.points);
    const ContinuousDataset other = generate_x_dataset(10'000, 0.02, 18);
    CHECK(ds.points != other.points);
    for (const auto& p : ds.points) {
        CHECK(p[0] >= 0.0);
        CHECK(p[0] <= 1.0);
        CHECK(p[1] >= 0.0);
        CHECK(p[1] <= 1.0);
    }
}

TEST_CASE("minmax transform") {
    ContinuousDataset ds;
    ds.points = {{2.0, 0.0}, {4.0, 0.5}, {6.0, 1.0}};
    const ContinuousDataset out = minmax_transform(ds);
    CHECK(out.points[0][0] == doctest::Approx(0.0));
    CHECK(out.points[1][0] == doctest::Approx(0.5));
    CHECK(out.points[2][0] == doctest::Approx(1.0));
    // Second column already spans [0,1]: unchanged.
    CHECK(out.points[0][1] == doctest::Approx(0.0));
    CHECK(out.points[1][1] == doctest::Approx(0.5));
    CHECK(out.points[2][1] == doctest::Approx(1.0));

    // Affine copies map to the same output.
    ContinuousDataset affine = ds;
    for (auto& p : affine.points) {
        p[0] = 3.0 * p[0] - 7.0;
        p[1] = 0.25 * p[1] + 11.0;
    }
    const ContinuousDataset from_affine = minmax_transform(affine);
    for (std::size_t i = 0; i < ds.points.size(); ++i) {
        CHECK(from_affine.points[i][0] == doctest::Approx(out.points[i][0]).epsilon(1e-12));
        CHECK(from_affine.points[i][1] == doctest::Approx(out.points[i][1]).epsilon(1e-12));
    }

    ContinuousDataset constant;
    constant.points = {{1.0, 0.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(minmax_transform(constant), validation_error);
}

TEST_CASE("pit transform ranks per dimension") {
    ContinuousDataset ds;
    ds.points = {{3.0, 0.1}, {1.0, 0.2}, {2.0, 0.3}};
    const ContinuousDataset out = pit_transform(ds);
    CHECK(out.points[0][0] == doctest::Approx(1.0));
    CHECK(out.points[1][0] == doctest::Approx(1.0 / 3.0));
    CHECK(out.points[2][0] == doctest::Approx(2.0 / 3.0));

    // Monotone deformation leaves ranks, hence the output, unchanged.
    ContinuousDataset cubed = ds;
    for (auto& p : cubed.points) p[0] = p[0] * p[0] * p[0];
    const ContinuousDataset from_cubed = pit_transform(cubed);
    for (std::size_t i = 0; i < ds.points.size(); ++i)
        CHECK(from_cubed.points[i][0] == doctest::Approx(out.points[i][0]));
}

TEST_CASE("pit marginals are exactly the uniform grid (KS bound)") {
    const ContinuousDataset raw = generate_x_dataset(1000, 0.1, 23);
    const ContinuousDataset out = pit_transform(raw);
    const std::size_t n = out.points.size();
    for (int d = 0; d < 2; ++d) {
        std::vector<double> vals;
        for (const auto& p : out.points) vals.push_back(p[static_cast<std::size_t>(d)]);
        std::sort(vals.begin(), vals.end());
        double ks = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(vals[i] == doctest::Approx(static_cast<double>(i + 1) / static_cast<double>(n)));
            ks = std::max(ks, std::fabs(vals[i] - static_cast<double>(i + 1) / static_cast<double>(n)));
        }
        CHECK(ks <= 1.0 / static_cast<double>(n) + 1e-12);
    }
}

TEST_CASE("pit breaks ties by original index") {
    ContinuousDataset ds;
    ds.points = {{0.5, 0.0}, {0.5, 0.0}, {0.1, 0.0}};
    const ContinuousDataset out = pit_transform(ds);
    CHECK(out.points[2][0] == doctest::Approx(1.0 / 3.0));
    CHECK(out.points[0][0] == doctest::Approx(2.0 / 3.0));  // earlier index ranks first
    CHECK(out.points[1][0] == doctest::Approx(1.0));
}

TEST_CASE("discretize bin layout: dimension 0 in the low bits") {
    ContinuousDataset ds;
    ds.points = {{0.1, 0.9}};
    const TargetDistribution t = discretize(ds, 4, TransformKind::PIT);
    // m = 2: (0.1, 0.9) -> bins (0, 3) -> index 0 + (3 << 2) = 12.
    CHECK(t.pmf.probs[12] == doctest::Approx(1.0));
    CHECK(t.bits_per_dim == 2);

    ContinuousDataset top;
    top.points = {{1.0, 1.0}};
    const TargetDistribution t2 = discretize(top, 4, TransformKind::PIT);
    CHECK(t2.pmf.probs[15] == doctest::Approx(1.0));  // 1.0 falls in the top bin
}

TEST_CASE("discretize: repeated point, row permutation, uniform bound") {
    ContinuousDataset rep;
    rep.points.assign(50, {0.3, 0.3});
    const TargetDistribution one_hot = discretize(rep, 6, TransformKind::PIT);
    int nonzero = 0;
    for (const double p : one_hot.pmf.probs) {
        if (p > 0.0) ++nonzero;
    }
    CHECK(nonzero == 1);

    ContinuousDataset original = generate_x_dataset(2000, 0.05, 31);
    ContinuousDataset shuffled = original;
    std::mt19937 rng(4);
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
    const TargetDistribution ta = discretize(original, 6, TransformKind::PIT);
    const TargetDistribution tb = discretize(shuffled, 6, TransformKind::PIT);
    for (std::size_t i = 0; i < ta.pmf.probs.size(); ++i)
        CHECK(ta.pmf.probs[i] == doctest::Approx(tb.pmf.probs[i]).epsilon(1e-12));

    // One million uniform points: every bin within the multinomial bound.
    RandomStream uniform_rng(37);
    ContinuousDataset uniform;
    uniform.points.reserve(1'000'000);
    for (int i = 0; i < 1'000'000; ++i)
        uniform.points.push_back({uniform_rng.uniform01(), uniform_rng.uniform01()});
    const TargetDistribution tu = discretize(uniform, 8, TransformKind::PIT);
    const double p0 = 1.0 / 256.0;
    const double bound = 5.0 * std::sqrt(p0 * (1.0 - p0) / 1e6);
    for (const double p : tu.pmf.probs) CHECK(std::fabs(p - p0) < bound);

    ContinuousDataset outside;
    outside.points = {{1.2, 0.0}};
    CHECK_THROWS_AS(discretize(outside, 4, TransformKind::PIT), validation_error);
    CHECK_THROWS_AS(discretize(rep, 5, TransformKind::PIT), validation_error);
}

TEST_CASE("parity targets") {
    const TargetDistribution p0 = generate_parity_dataset(2, 0);
    CHECK(p0.pmf.probs[0] == doctest::Approx(0.5));
    CHECK(p0.pmf.probs[3] == doctest::Approx(0.5));
    CHECK(p0.pmf.probs[1] == doctest::Approx(0.0));

    const TargetDistribution p1 = generate_parity_dataset(3, 1);
    int quarter_bins = 0;
    for (const double p : p1.pmf.probs) {
        if (p > 0.0) {
            CHECK(p == doctest::Approx(0.25));
            ++quarter_bins;
        }
    }
    CHECK(quarter_bins == 4);

    const TargetDistribution q0 = generate_parity_dataset(3, 0);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(q0.pmf.probs[i] + p1.pmf.probs[i] == doctest::Approx(0.25));

    CHECK_THROWS_AS(generate_parity_dataset(2, 2), validation_error);
}

TEST_CASE("bin centers follow the register layout") {
    CHECK(bin_center(0, 1) == std::array<double, 2>{0.25, 0.25});
    CHECK(bin_center(3, 1) == std::array<double, 2>{0.75, 0.75});
    CHECK(bin_center(12, 2) == std::array<double, 2>{0.125, 0.875});
    CHECK_THROWS_AS(bin_center(0, 0), validation_error);
}

TEST_SUITE_END();
