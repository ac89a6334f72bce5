// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qvm/errors.hpp"

namespace qvm {

using Complex = std::complex<double>;

/// Hard floor on pairwise vortex separation; crossing it raises
/// SingularityError rather than silently regularizing the kernel.
inline constexpr double kMinSeparation = 1e-8;

/// N_p point vortices in the complex plane. Position phi_j = x_j + i*y_j,
/// circulation strengths Gamma_j are constant in time (ideal 2D flow).
struct VortexSystem {
    std::vector<Complex> positions;
    std::vector<double> strengths;

    std::size_t count() const { return positions.size(); }

    /// Throws if sizes mismatch, the system is empty, or any pair sits
    /// closer than min_separation.
    void validate(double min_separation = kMinSeparation) const;
};

/// Snapshots of a VortexSystem on a uniform time grid.
struct Trajectory {
    std::vector<double> times;
    std::vector<VortexSystem> frames;

    double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
    std::size_t size() const { return times.size(); }
};

/// Biot-Savart velocity induced at `point`, as dphi/dt:
///   (i/2pi) * sum_{k != exclude} Gamma_k (point - phi_k) / |point - phi_k|^2.
/// Re is the x-velocity, Im the y-velocity. Summation runs in ascending
/// vortex index, pairwise left to right.
Complex induced_velocity(const VortexSystem& system, Complex point,
                         std::optional<std::size_t> exclude = std::nullopt,
                         double min_separation = kMinSeparation);

/// Point-vortex interaction Hamiltonian
///   H^p = (1/4pi) sum_{j != k} Gamma_j Gamma_k log|phi_j - phi_k|^2.
double hamiltonian_hp(const VortexSystem& system,
                      double min_separation = kMinSeparation);

/// Fixed-step RK4 integration of dphi_j/dt. Frame 0 is the input system;
/// SingularityError reports the offending step index.
Trajectory integrate(const VortexSystem& system, double dt, std::size_t n_steps,
                     double min_separation = kMinSeparation);

/// Linear impulse sum_j Gamma_j phi_j, conserved by the exact dynamics.
Complex linear_impulse(const VortexSystem& system);

}  // namespace qvm
