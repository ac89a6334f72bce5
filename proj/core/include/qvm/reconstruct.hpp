// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qvm/encoding.hpp"
#include "qvm/vortex.hpp"

namespace qvm {

/// Sampled Biot-Savart velocity field on a regular grid. `velocities` is
/// row-major over y (outer) then x (inner); masked nodes (delta == 0 within
/// min_separation of a vortex) carry velocity 0 and a mask flag.
struct FieldGrid {
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    int nx = 0, ny = 0;
    double delta = 0.0;
    std::vector<Complex> velocities;
    std::vector<bool> masked;

    double x_at(int ix) const { return x_min + (x_max - x_min) * ix / (nx - 1); }
    double y_at(int iy) const { return y_min + (y_max - y_min) * iy / (ny - 1); }
    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
               static_cast<std::size_t>(ix);
    }
};

struct PhaseFixResult {
    WaveState state;
    /// True when sum_j psi_j was below the guard and the largest-magnitude
    /// component fixed the phase instead.
    bool used_fallback = false;
};

/// Multiply by e^{i alpha} so that sum_j psi_j is real and non-negative
/// (guard 1e-10; fallback makes the largest-magnitude component
/// real-positive). Idempotent and gauge-invariant.
PhaseFixResult fix_global_phase(const WaveState& state);

/// F = |<ideal|test>|^2.
double fidelity(const WaveState& ideal, const WaveState& test);

/// d = sum_j |phi_test,j - phi_ideal,j| with correspondence by index.
double deviation(const VortexSystem& ideal, const VortexSystem& test);

/// Smoothed 2D kernel v(z) = (1/2pi) sum_k Gamma_k i (z - phi_k) / (|z - phi_k|^2 + delta^2).
/// With delta == 0, nodes within min_separation of a vortex are masked.
FieldGrid velocity_field(const VortexSystem& system, double x_min, double x_max,
                         double y_min, double y_max, int nx, int ny, double delta,
                         double min_separation = kMinSeparation);

/// Phase-fix every block, then invert the encoding. Uniform block spacing dt
/// starting at t_offset. When c_reference is given, the linear drift c is
/// estimated from those states (classical side information) and only the
/// vortex amplitudes come from the measured blocks.
Trajectory decode_experiment(const std::vector<WaveState>& blocks,
                             const EncodingFrame& frame, double dt,
                             const DecodeOptions& options, double t_offset = 0.0,
                             const std::vector<WaveState>* c_reference = nullptr);

/// RK2 streamline polylines through the grid field (bilinear interpolation),
/// seeded uniformly on the grid boundary; at most 2000 steps per line.
std::vector<std::vector<Complex>> streamlines(const FieldGrid& grid,
                                              int seeds_per_edge = 8,
                                              double step = 0.0,
                                              int max_steps = 2000);

/// Deterministic standalone SVG with a quiver layer and streamline polylines.
std::string render_svg(const FieldGrid& grid,
                       const std::vector<std::vector<Complex>>& lines,
                       int width = 640, int height = 640);

}  // namespace qvm
