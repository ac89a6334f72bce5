// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/spacetime.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qvm {

Eigen::VectorXcd pad_to_power_of_two(const Eigen::VectorXcd& amplitudes) {
    Eigen::Index dim = 1;
    while (dim < amplitudes.size()) dim <<= 1;
    Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(dim);
    padded.head(amplitudes.size()) = amplitudes;
    return padded;
}

Eigen::MatrixXcd embed_unitary(const Eigen::MatrixXcd& u, Eigen::Index dim) {
    if (u.rows() > dim) throw DimensionError("embed_unitary: target dimension too small");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
    out.topLeftCorner(u.rows(), u.cols()) = u;
    return out;
}

Eigen::MatrixXcd completion_unitary(const Eigen::VectorXcd& column) {
    const Eigen::Index n = column.size();
    if (std::abs(column.norm() - 1.0) > 1e-9) {
        throw NonUnitaryError("completion_unitary: column not normalized");
    }
    const Complex c0 = column[0];
    const Complex phase = std::abs(c0) > 1e-14 ? c0 / std::abs(c0) : Complex{1.0, 0.0};

    Eigen::VectorXcd u = column;
    u[0] -= phase;
    const double un = u.norm();
    Eigen::MatrixXcd refl = Eigen::MatrixXcd::Identity(n, n);
    if (un > 1e-14) {
        const Eigen::VectorXcd v = u / un;
        refl -= 2.0 * v * v.adjoint();
    }
    // refl swaps phase*e0 and column; U = refl * diag(phase, 1, ..., 1) then
    // sends e0 exactly to column.
    Eigen::MatrixXcd result = refl;
    result.col(0) *= phase;
    return result;
}

SpacetimePlan build_plan(int n_t, const WaveState& initial, const Eigen::MatrixXcd& f) {
    if (n_t < 1) throw ConfigError("build_plan: n_t must be >= 1");
    if (!is_unitary(f)) throw NonUnitaryError("build_plan: F is not unitary");
    const Eigen::Index dim = f.rows();
    if ((dim & (dim - 1)) != 0) {
        throw DimensionError("build_plan: F dimension must be a power of two");
    }
    Eigen::VectorXcd psi0 = pad_to_power_of_two(initial.amplitudes);
    if (psi0.size() > dim) throw DimensionError("build_plan: initial state larger than F");
    if (psi0.size() < dim) {
        Eigen::VectorXcd tmp = Eigen::VectorXcd::Zero(dim);
        tmp.head(psi0.size()) = psi0;
        psi0 = tmp;
    }

    SpacetimePlan plan;
    plan.n_t = n_t;
    plan.n_p = 0;
    for (Eigen::Index d = dim; d > 1; d >>= 1) ++plan.n_p;
    plan.step_unitary = f;
    plan.prep_unitary = completion_unitary(psi0 / psi0.norm());

    plan.f_ladder.reserve(static_cast<std::size_t>(n_t));
    Eigen::MatrixXcd fk = f;
    for (int k = 1; k <= n_t; ++k) {
        if (k > 1) fk = (fk * fk).eval();
        plan.f_ladder.push_back(fk);
    }
    return plan;
}

SpacetimeState run(const SpacetimePlan& plan) {
    const int n = plan.n_p + plan.n_t;
    StateVector sv = StateVector::zero(n);

    std::vector<int> spatial(static_cast<std::size_t>(plan.n_p));
    std::iota(spatial.begin(), spatial.end(), 0);

    sv = apply(sv, GateOp::dense(plan.prep_unitary, spatial));
    for (int q = plan.n_p; q < n; ++q) sv = apply(sv, GateOp::hadamard(q));

    int controlled = 0;
    for (int k = 1; k <= plan.n_t; ++k) {
        GateOp op = GateOp::dense(plan.f_ladder[static_cast<std::size_t>(k - 1)], spatial)
                        .controlled_by({plan.n_p + k - 1});
        sv = apply(sv, op);
        ++controlled;
    }
    return SpacetimeState{std::move(sv), plan.n_p, plan.n_t, controlled};
}

std::pair<WaveState, double> extract_block(const SpacetimeState& state, std::size_t i) {
    const std::size_t n_t_steps = std::size_t{1} << state.n_t;
    if (i >= n_t_steps) throw IndexError("extract_block: temporal index out of range");
    const Eigen::Index block = Eigen::Index{1} << state.n_p;
    const Eigen::VectorXcd raw =
        state.state.amplitudes.segment(static_cast<Eigen::Index>(i) * block, block);
    const double weight = raw.squaredNorm();
    const double expected = 1.0 / static_cast<double>(n_t_steps);
    if (std::abs(weight - expected) > 1e-6) {
        throw BlockWeightError("extract_block: block " + std::to_string(i) + " weight " +
                               std::to_string(weight) + " deviates from 1/N_t");
    }
    return {WaveState{raw / std::sqrt(weight)}, weight};
}

}  // namespace qvm
