// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qvm/spacetime.hpp"
#include "qvm/vqa.hpp"

using namespace qvm;

namespace {
Eigen::VectorXcd random_state(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = {dist(rng), dist(rng)};
    v.normalize();
    return v;
}

Eigen::VectorXd random_theta(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta[i] = dist(rng);
    return theta;
}
}  // namespace

TEST_CASE("ansatz matrix is unitary and matches its gate sequence") {
    const Ansatz ansatz{2, 3};
    const Eigen::VectorXd theta = random_theta(ansatz.n_params(), 1);
    const Eigen::MatrixXcd f = ansatz.matrix(theta);
    CHECK(is_unitary(f, 1e-12));
    StateVector s{random_state(4, 2), 2};
    StateVector via_gates = s;
    for (const auto& op : ansatz.gates(theta)) via_gates = apply(via_gates, op);
    CHECK((via_gates.amplitudes - f * s.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("cost is zero for an exact prediction and two for an orthogonal one") {
    const Ansatz ansatz{1, 1};
    const Eigen::VectorXd theta = random_theta(ansatz.n_params(), 3);
    const Eigen::MatrixXcd f = ansatz.matrix(theta);
    const Eigen::VectorXcd x = random_state(2, 4);

    const CostReport exact = cost_direct(ansatz, theta, {WaveState{x}, WaveState{f * x}});
    CHECK(exact.value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(exact.z_expectation == doctest::Approx(1.0).epsilon(1e-12));

    // Orthogonal target: pick y orthogonal to f x.
    const Eigen::VectorXcd fx = f * x;
    Eigen::VectorXcd y(2);
    y << -std::conj(fx[1]), std::conj(fx[0]);
    const CostReport ortho = cost_direct(ansatz, theta, {WaveState{x}, WaveState{y}});
    CHECK(ortho.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ortho.z_expectation == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("C equals 2 - 2<Z> on random instances") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const Ansatz ansatz{2, 2};
        const Eigen::VectorXd theta = random_theta(ansatz.n_params(), 10 + trial);
        const std::pair<WaveState, WaveState> pair{WaveState{random_state(4, 30 + trial)},
                                                   WaveState{random_state(4, 60 + trial)}};
        const CostReport r = cost_direct(ansatz, theta, pair, 1 + static_cast<int>(trial % 3));
        CHECK(std::abs(r.value - (2.0 - 2.0 * r.z_expectation)) < 1e-12);
        CHECK(r.value >= -1e-15);
    }
}

TEST_CASE("cost_direct exponentiates F for k > 1") {
    const Ansatz ansatz{1, 2};
    const Eigen::VectorXd theta = random_theta(ansatz.n_params(), 90);
    const Eigen::MatrixXcd f = ansatz.matrix(theta);
    const Eigen::VectorXcd x = random_state(2, 91);
    // k = 3 means F^(2^2) = F^4.
    const CostReport r =
        cost_direct(ansatz, theta, {WaveState{x}, WaveState{f * f * f * f * x}}, 3);
    CHECK(r.value < 1e-12);
}

TEST_CASE("cost_hadamard agrees with cost_direct on random instances") {
    for (std::uint64_t trial = 0; trial < 12; ++trial) {
        const Ansatz ansatz{2, 2};
        const Eigen::VectorXd theta = random_theta(ansatz.n_params(), 100 + trial);
        const Eigen::VectorXcd xi = random_state(4, 130 + trial);
        const Eigen::VectorXcd xik = random_state(4, 160 + trial);
        const int k = 1 + static_cast<int>(trial % 2);
        const CostReport direct =
            cost_direct(ansatz, theta, {WaveState{xi}, WaveState{xik}}, k);
        const CostReport circuit = cost_hadamard(ansatz, theta, completion_unitary(xi),
                                                 completion_unitary(xik), k);
        CHECK(std::abs(circuit.value - direct.value) < 1e-10);
        CHECK(std::abs(circuit.z_expectation - direct.z_expectation) < 1e-10);
    }
}

TEST_CASE("cost_hadamard limiting cases") {
    const Ansatz ansatz{1, 1};
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(ansatz.n_params());
    const Eigen::VectorXcd xi = random_state(2, 200);
    // Target exactly F(theta) xi -> <Z> = 1, C = 0.
    const Eigen::VectorXcd target = ansatz.matrix(theta) * xi;
    const CostReport r = cost_hadamard(ansatz, theta, completion_unitary(xi),
                                       completion_unitary(target));
    CHECK(r.z_expectation == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-10));

    // F = I (theta = 0 gives identity rotations) with orthogonal frames -> <Z> = 0.
    Eigen::VectorXcd ortho(2);
    ortho << -std::conj(xi[1]), std::conj(xi[0]);
    const CostReport r0 = cost_hadamard(ansatz, theta, completion_unitary(xi),
                                        completion_unitary(ansatz.matrix(theta) * ortho));
    CHECK(std::abs(r0.z_expectation) < 1e-10);
}

TEST_CASE("parameter-shift gradient vanishes at the planted optimum") {
    const Ansatz ansatz{1, 1};
    Eigen::VectorXd theta_star = random_theta(ansatz.n_params(), 300);
    const Eigen::VectorXcd x = random_state(2, 301);
    const std::pair<WaveState, WaveState> pair{WaveState{x},
                                               WaveState{ansatz.matrix(theta_star) * x}};
    const Eigen::VectorXd g = gradient_parameter_shift(ansatz, theta_star, pair);
    CHECK(g.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("parameter-shift gradient matches central finite differences") {
    const Ansatz ansatz{2, 2};
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        Eigen::VectorXd theta = random_theta(ansatz.n_params(), 400 + trial);
        const std::pair<WaveState, WaveState> pair{WaveState{random_state(4, 420 + trial)},
                                                   WaveState{random_state(4, 440 + trial)}};
        const Eigen::VectorXd g = gradient_parameter_shift(ansatz, theta, pair);
        const double h = 1e-5;
        for (int l = 0; l < ansatz.n_params(); ++l) {
            Eigen::VectorXd tp = theta, tm = theta;
            tp[l] += h;
            tm[l] -= h;
            const double fd = (cost_direct(ansatz, tp, pair).value -
                               cost_direct(ansatz, tm, pair).value) /
                              (2.0 * h);
            CHECK(std::abs(g[l] - fd) < 1e-6);
        }
    }
}

TEST_CASE("gradient via the Hadamard-test circuit matches the direct route") {
    const Ansatz ansatz{1, 2};
    const Eigen::VectorXd theta = random_theta(ansatz.n_params(), 500);
    const std::pair<WaveState, WaveState> pair{WaveState{random_state(2, 501)},
                                               WaveState{random_state(2, 502)}};
    const Eigen::VectorXd gd = gradient_parameter_shift(ansatz, theta, pair, 1, false);
    const Eigen::VectorXd gh = gradient_parameter_shift(ansatz, theta, pair, 1, true);
    CHECK((gd - gh).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("constant landscape gives the zero gradient") {
    // Single qubit, states |0> and |0>: every RZ-only direction leaves the
    // cost flat. Use eigenstates of Z so the Y rotations see a symmetric
    // landscape only at theta = 0, and check just the identity-cost case:
    // target == prediction for theta = 0 and the cost stationary there.
    const Ansatz ansatz{1, 1};
    WaveState zero{Eigen::VectorXcd(2)};
    zero.amplitudes << 1.0, 0.0;
    const Eigen::VectorXd g = gradient_parameter_shift(
        ansatz, Eigen::VectorXd::Zero(ansatz.n_params()), {zero, zero});
    CHECK(g.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("train recovers a planted realizable target") {
    const Ansatz ansatz{1, 2};
    const Eigen::VectorXd theta_star = 0.3 * random_theta(ansatz.n_params(), 600);
    const Eigen::MatrixXcd f_star = ansatz.matrix(theta_star);
    TrainingSet training;
    for (std::uint64_t i = 0; i < 4; ++i) {
        const Eigen::VectorXcd x = random_state(2, 610 + i);
        training.pairs.emplace_back(WaveState{x}, WaveState{f_star * x});
    }
    VqaOptions options;
    options.seed = 9;
    const VqaResult result = train(ansatz, training, options);
    CHECK(result.final_loss < 1e-8);
    CHECK(result.loss_history.size() >= 1);
}

TEST_CASE("zero-iteration budget returns the initial point") {
    const Ansatz ansatz{1, 1};
    TrainingSet training;
    const Eigen::VectorXcd x = random_state(2, 700);
    training.pairs.emplace_back(WaveState{x}, WaveState{x});
    VqaOptions options;
    options.max_iters = 0;
    options.seed = 4;
    const VqaResult a = train(ansatz, training, options);
    const VqaResult b = train(ansatz, training, options);
    CHECK(a.theta == b.theta);
    CHECK(a.final_loss ==
          doctest::Approx(cost_direct(ansatz, a.theta, training.pairs[0]).value));
}

TEST_CASE("dimension mismatches raise") {
    const Ansatz ansatz{2, 1};
    const Eigen::VectorXd theta = Eigen::VectorXd::Zero(ansatz.n_params());
    const std::pair<WaveState, WaveState> pair{WaveState{random_state(2, 800)},
                                               WaveState{random_state(2, 801)}};
    CHECK_THROWS_AS(cost_direct(ansatz, theta, pair), Error);
}
