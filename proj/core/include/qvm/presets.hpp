// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qvm/encoding.hpp"
#include "qvm/hamiltonian_fit.hpp"
#include "qvm/io.hpp"
#include "qvm/vortex.hpp"

namespace qvm {

/// Fully resolved run parameters. Presets populate every field; custom runs
/// are validated before any computation.
struct RunConfig {
    std::string preset = "custom";
    VortexSystem initial;
    Complex c0{0.0, 0.0};

    /// Ground-truth integrator.
    double dt_ode = 0.01;
    std::size_t n_ode_steps = 0;

    /// Training window: pair i spans [train_start + i*train_stride,
    /// ... + dt_train], i = 0..n_train-1.
    double train_start = 0.0;
    double train_stride = 0.0;
    double dt_train = 1.0;
    std::size_t n_train = 0;

    /// Spacetime circuit: blocks at predict_start + i*dt_predict.
    double predict_start = 0.0;
    double dt_predict = 1.0;
    int n_p = 0;
    int n_t = 0;

    double sampling_proportion = 1.0;
    int ansatz_depth = 4;
    std::uint64_t seed = 0;
    std::string noise_config;
    /// Trajectory CSV consumed instead of internal integration (viscous runs).
    std::string import_path;
    std::string out_dir = ".";

    void validate() const;
};

/// Two co-moving vortex pairs that repeatedly pass through each other.
RunConfig leapfrog_preset();
/// Eight random vortices; positions uniform in [-1,1]^2, strengths uniform
/// in [-1,1] excluding a dead zone around 0. Not tied to published data.
// Default seed picked so the full 128-time-unit trajectory stays resolvable
// at the preset's fixed step; many seeds produce near-collisions that a
// non-adaptive integrator cannot follow.
RunConfig turbulent_preset(std::uint64_t seed = 1);
/// Externally computed (viscous) trajectory consumed from CSV.
RunConfig viscous_import_preset(const std::string& csv_path);

/// Build a RunConfig from a parsed file: `preset.name` selects a base preset
/// ("custom" for none) and flat keys override individual fields.
RunConfig resolve_config(const Config& config);
/// Snapshot of every resolved field, parseable by resolve_config.
Config snapshot_config(const RunConfig& run);

/// Everything the pipeline stages exchange.
struct PresetData {
    Trajectory truth;
    EncodingFrame frame;
    /// psi sampled on the truth grid (empty for imported trajectories where
    /// the continuous dynamics is unknown; `states` then holds per-frame
    /// normalized encodings instead).
    std::vector<WaveState> states;
    TrainingSet training;
    WaveState initial_state;
    /// Frame advanced to predict_start (c integral accumulated).
    EncodingFrame predict_frame;
};

/// Integrate (or import) the truth, encode it, and slice out the training
/// pairs and the circuit's initial state.
PresetData prepare(const RunConfig& run);

}  // namespace qvm
