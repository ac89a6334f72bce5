// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace qvm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

// c(t) for raw amplitudes; shared by c_of_t and the psi ODE right-hand side.
Complex c_value(const Eigen::VectorXcd& psi, const std::vector<double>& gamma,
                double lambda, double min_separation) {
    const Eigen::Index n = psi.size();
    const Complex denom = psi.conjugate().sum();
    if (std::abs(denom) <= kDenominatorGuard) {
        throw DenominatorError("c(t): |sum conj(psi_i)| below guard");
    }
    const double sep2 = min_separation * lambda * min_separation * lambda;
    Complex sum{0.0, 0.0};
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            if (j == k) continue;
            const double d2 = std::norm(psi[j] - psi[k]);
            if (d2 <= sep2) {
                throw SingularityError("c(t): near-coincident wave components " +
                                       std::to_string(j) + "," + std::to_string(k));
            }
            sum += gamma[k] * (psi[j] * std::conj(psi[k]) - psi[k] * std::conj(psi[j])) / d2;
        }
    }
    return Complex{0.0, 1.0} * lambda / kFourPi * sum / denom;
}

// dpsi_j/dt = (i lambda^2 / 2pi) sum_{k!=j} Gamma_k (psi_j - psi_k)/|psi_j - psi_k|^2
//             - lambda c(t)
Eigen::VectorXcd psi_rhs(const Eigen::VectorXcd& psi, const std::vector<double>& gamma,
                         double lambda, double min_separation) {
    const Eigen::Index n = psi.size();
    const Complex lc = lambda * c_value(psi, gamma, lambda, min_separation);
    const double sep2 = min_separation * lambda * min_separation * lambda;
    Eigen::VectorXcd rhs(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex sum{0.0, 0.0};
        for (Eigen::Index k = 0; k < n; ++k) {
            if (j == k) continue;
            const Complex d = psi[j] - psi[k];
            const double d2 = std::norm(d);
            if (d2 <= sep2) {
                throw SingularityError("psi dynamics: components nearly coincide");
            }
            sum += gamma[k] * d / d2;
        }
        rhs[j] = Complex{0.0, 1.0} * lambda * lambda / kTwoPi * sum - lc;
    }
    return rhs;
}
}  // namespace

std::pair<WaveState, EncodingFrame> encode(const VortexSystem& system, Complex c0) {
    const std::size_t n = system.count();
    if (n == 0 || system.strengths.size() != n) {
        throw DimensionError("encode: invalid vortex system");
    }
    double scale2 = 0.0;
    for (const Complex& phi : system.positions) scale2 += std::norm(phi - c0);
    if (scale2 <= 0.0) {
        throw DegenerateEncodingError("encode: all positions coincide with c0");
    }
    const double lambda = 1.0 / std::sqrt(scale2);

    WaveState state;
    state.amplitudes.resize(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        state.amplitudes[static_cast<Eigen::Index>(j)] = lambda * (system.positions[j] - c0);
    }
    EncodingFrame frame{lambda, c0, Complex{0.0, 0.0}, system.strengths};
    return {std::move(state), std::move(frame)};
}

Complex c_of_t(const WaveState& state, const EncodingFrame& frame, double min_separation) {
    if (static_cast<std::size_t>(state.size()) != frame.strengths.size()) {
        throw DimensionError("c_of_t: state/frame size mismatch");
    }
    return c_value(state.amplitudes, frame.strengths, frame.lambda, min_separation);
}

std::vector<WaveState> evolve_wavestate(const WaveState& state, const EncodingFrame& frame,
                                        double dt, std::size_t n_steps,
                                        double min_separation) {
    if (dt <= 0.0) throw ConfigError("evolve_wavestate: dt must be positive");
    const auto& gamma = frame.strengths;
    if (static_cast<std::size_t>(state.size()) != gamma.size()) {
        throw DimensionError("evolve_wavestate: state/frame size mismatch");
    }

    std::vector<WaveState> out;
    out.reserve(n_steps + 1);
    out.push_back(state);

    Eigen::VectorXcd psi = state.amplitudes;
    for (std::size_t step = 0; step < n_steps; ++step) {
        const Eigen::VectorXcd k1 = psi_rhs(psi, gamma, frame.lambda, min_separation);
        const Eigen::VectorXcd k2 =
            psi_rhs(psi + 0.5 * dt * k1, gamma, frame.lambda, min_separation);
        const Eigen::VectorXcd k3 =
            psi_rhs(psi + 0.5 * dt * k2, gamma, frame.lambda, min_separation);
        const Eigen::VectorXcd k4 = psi_rhs(psi + dt * k3, gamma, frame.lambda, min_separation);
        psi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (std::abs(psi.squaredNorm() - 1.0) > 1e-6) {
            throw NormDriftError("evolve_wavestate: norm drift at step " +
                                 std::to_string(step + 1) + "; reduce dt");
        }
        out.push_back(WaveState{psi});
    }
    return out;
}

EncodingFrame advance_frame(const EncodingFrame& frame,
                            const std::vector<WaveState>& states, double dt) {
    EncodingFrame out = frame;
    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
        const Complex a = c_of_t(states[i], frame);
        const Complex b = c_of_t(states[i + 1], frame);
        out.c_integral += 0.5 * dt * (a + b);
    }
    return out;
}

Trajectory decode(const std::vector<WaveState>& states, const EncodingFrame& frame,
                  double dt, const DecodeOptions& options, double t_offset) {
    if (states.empty()) throw EmptySampleError("decode: no states to sample");
    if (options.sampling_proportion <= 0.0 || options.sampling_proportion > 1.0) {
        throw ConfigError("decode: sampling_proportion must be in (0, 1]");
    }
    const std::size_t n_frames = states.size();

    std::vector<Complex> c_history;
    std::vector<Complex> offsets(n_frames);
    if (options.exact_integration) {
        c_history.reserve(n_frames);
        for (const auto& s : states) c_history.push_back(c_of_t(s, frame));
        Complex integral = frame.c_integral;
        offsets[0] = integral;
        for (std::size_t i = 1; i < n_frames; ++i) {
            integral += 0.5 * dt * (c_history[i - 1] + c_history[i]);
            offsets[i] = integral;
        }
    } else {
        const std::size_t n_sample = static_cast<std::size_t>(
            std::ceil(options.sampling_proportion * static_cast<double>(n_frames)));
        if (n_sample == 0) throw EmptySampleError("decode: sample rounds to zero frames");

        std::vector<std::size_t> indices(n_frames);
        std::iota(indices.begin(), indices.end(), std::size_t{0});
        std::mt19937_64 rng(options.seed);
        std::shuffle(indices.begin(), indices.end(), rng);
        indices.resize(n_sample);
        std::sort(indices.begin(), indices.end());

        Complex c_const{0.0, 0.0};
        for (std::size_t idx : indices) c_const += c_of_t(states[idx], frame);
        c_const /= static_cast<double>(n_sample);
        for (std::size_t i = 0; i < n_frames; ++i) {
            offsets[i] = c_const * (t_offset + static_cast<double>(i) * dt);
        }
    }

    Trajectory traj;
    traj.times.reserve(n_frames);
    traj.frames.reserve(n_frames);
    for (std::size_t i = 0; i < n_frames; ++i) {
        VortexSystem sys;
        sys.strengths = frame.strengths;
        sys.positions.resize(frame.strengths.size());
        for (std::size_t j = 0; j < sys.positions.size(); ++j) {
            sys.positions[j] =
                states[i].amplitudes[static_cast<Eigen::Index>(j)] / frame.lambda +
                offsets[i] + frame.c0;
        }
        traj.times.push_back(t_offset + static_cast<double>(i) * dt);
        traj.frames.push_back(std::move(sys));
    }
    return traj;
}

}  // namespace qvm
