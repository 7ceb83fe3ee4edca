#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qgb/mlp.hpp"
#include "qgb/rng.hpp"

using namespace qgb;

TEST_SUITE_BEGIN("mlp");

TEST_CASE("zero weights give output 0.5 everywhere") {
    RandomStream rng(1);
    MlpDiscriminator disc({8, 4}, rng);
    std::fill(disc.params().begin(), disc.params().end(), 0.0);
    CHECK(disc.forward({0.3, 0.7}) == doctest::Approx(0.5));
    CHECK(disc.forward({-5.0, 12.0}) == doctest::Approx(0.5));
}

TEST_CASE("output stays strictly inside (0,1)") {
    RandomStream rng(2);
    MlpDiscriminator disc({4}, rng);
    for (double& w : disc.params()) w *= 500.0;  // force saturation
    for (const auto& x : {std::array<double, 2>{100.0, 100.0}, std::array<double, 2>{-100.0, -100.0}}) {
        const double d = disc.forward(x);
        CHECK(d > 0.0);
        CHECK(d < 1.0);
    }
}

TEST_CASE("backward gradients match central finite differences") {
    RandomStream rng(3);
    MlpDiscriminator disc({32, 16}, rng);
    std::vector<std::array<double, 2>> batch;
    std::vector<double> labels;
    for (int i = 0; i < 8; ++i) {
        batch.push_back({rng.uniform01(), rng.uniform01()});
        labels.push_back(i % 2 == 0 ? 1.0 : 0.0);
    }
    std::vector<double> grad;
    disc.backward(batch, labels, grad);

    auto loss_at = [&](MlpDiscriminator& d) {
        double acc = 0.0;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const double p = d.forward(batch[i]);
            acc += -(labels[i] * std::log(p) + (1.0 - labels[i]) * std::log(1.0 - p));
        }
        return acc / static_cast<double>(batch.size());
    };

    const double h = 1e-5;
    double max_rel = 0.0;
    for (std::size_t j = 0; j < disc.params().size(); ++j) {
        const double saved = disc.params()[j];
        disc.params()[j] = saved + h;
        const double up = loss_at(disc);
        disc.params()[j] = saved - h;
        const double down = loss_at(disc);
        disc.params()[j] = saved;
        const double fd = (up - down) / (2.0 * h);
        const double scale = std::max({std::fabs(fd), std::fabs(grad[j]), 1e-6});
        max_rel = std::max(max_rel, std::fabs(fd - grad[j]) / scale);
    }
    CHECK(max_rel < 1e-4);
}

TEST_CASE("backward returns the mean binary cross-entropy") {
    RandomStream rng(5);
    MlpDiscriminator disc({6}, rng);
    std::vector<std::array<double, 2>> batch{{0.2, 0.4}, {0.9, 0.1}};
    std::vector<double> labels{1.0, 0.0};
    std::vector<double> grad;
    const double loss = disc.backward(batch, labels, grad);
    const double direct = (-std::log(disc.forward(batch[0])) - std::log(1.0 - disc.forward(batch[1]))) / 2.0;
    CHECK(loss == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("adam leaves parameters alone on zero gradients") {
    RandomStream rng(7);
    MlpDiscriminator disc({4}, rng);
    const std::vector<double> before(disc.params().begin(), disc.params().end());
    AdamOptimizer adam(disc.params().size(), 1e-3);
    const std::vector<double> zeros(disc.params().size(), 0.0);
    adam.step(disc.params(), zeros);
    for (std::size_t i = 0; i < before.size(); ++i) CHECK(disc.params()[i] == before[i]);
}

TEST_CASE("adam first step moves by roughly lr in the gradient direction") {
    std::vector<double> params{1.0, -2.0};
    AdamOptimizer adam(2, 0.01, 0.9, 0.999, 1e-8);
    const std::vector<double> grad{0.3, -0.7};
    adam.step(params, grad);
    // Bias-corrected first step: -lr * g / (|g| + eps) = -lr * sign(g).
    CHECK(params[0] == doctest::Approx(1.0 - 0.01).epsilon(1e-6));
    CHECK(params[1] == doctest::Approx(-2.0 + 0.01).epsilon(1e-6));
}

TEST_CASE("adam drives a quadratic to its minimum") {
    std::vector<double> params{3.0};
    AdamOptimizer adam(1, 0.05);
    for (int i = 0; i < 2000; ++i) {
        const std::vector<double> grad{2.0 * (params[0] - 1.25)};
        adam.step(params, grad);
    }
    CHECK(params[0] == doctest::Approx(1.25).epsilon(1e-4));
}

TEST_SUITE_END();
