// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/vortex.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qvm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

// Right-hand side dphi_j/dt for every vortex at once.
std::vector<Complex> velocities(const std::vector<Complex>& pos,
                                const std::vector<double>& gamma,
                                double min_separation) {
    const std::size_t n = pos.size();
    std::vector<Complex> vel(n, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        Complex sum{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const Complex d = pos[j] - pos[k];
            const double r2 = std::norm(d);
            if (r2 <= min_separation * min_separation) {
                throw SingularityError("vortices " + std::to_string(j) + " and " +
                                       std::to_string(k) + " within min_separation");
            }
            sum += gamma[k] * d / r2;
        }
        vel[j] = Complex{0.0, 1.0} / kTwoPi * sum;
    }
    return vel;
}
}  // namespace

void VortexSystem::validate(double min_separation) const {
    if (positions.empty() || positions.size() != strengths.size()) {
        throw DimensionError("VortexSystem: positions/strengths size mismatch or empty");
    }
    for (std::size_t j = 0; j < positions.size(); ++j) {
        for (std::size_t k = j + 1; k < positions.size(); ++k) {
            if (std::abs(positions[j] - positions[k]) <= min_separation) {
                throw SingularityError("VortexSystem: vortices " + std::to_string(j) +
                                       " and " + std::to_string(k) + " nearly coincide");
            }
        }
    }
}

Complex induced_velocity(const VortexSystem& system, Complex point,
                         std::optional<std::size_t> exclude, double min_separation) {
    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < system.count(); ++k) {
        if (exclude && *exclude == k) continue;
        const Complex d = point - system.positions[k];
        const double r2 = std::norm(d);
        if (r2 <= min_separation * min_separation) {
            throw SingularityError("evaluation point within min_separation of vortex " +
                                   std::to_string(k));
        }
        sum += system.strengths[k] * d / r2;
    }
    return Complex{0.0, 1.0} / kTwoPi * sum;
}

double hamiltonian_hp(const VortexSystem& system, double min_separation) {
    double h = 0.0;
    for (std::size_t j = 0; j < system.count(); ++j) {
        for (std::size_t k = 0; k < system.count(); ++k) {
            if (j == k) continue;
            const double r2 = std::norm(system.positions[j] - system.positions[k]);
            if (r2 <= min_separation * min_separation) {
                throw SingularityError("coincident vortices in hamiltonian_hp");
            }
            h += system.strengths[j] * system.strengths[k] * std::log(r2);
        }
    }
    return h / kFourPi;
}

Trajectory integrate(const VortexSystem& system, double dt, std::size_t n_steps,
                     double min_separation) {
    if (dt <= 0.0) throw ConfigError("integrate: dt must be positive");
    system.validate(min_separation);

    Trajectory traj;
    traj.times.reserve(n_steps + 1);
    traj.frames.reserve(n_steps + 1);
    traj.times.push_back(0.0);
    traj.frames.push_back(system);

    const std::size_t n = system.count();
    std::vector<Complex> pos = system.positions;
    for (std::size_t step = 0; step < n_steps; ++step) {
        try {
            const auto k1 = velocities(pos, system.strengths, min_separation);
            std::vector<Complex> tmp(n);
            for (std::size_t j = 0; j < n; ++j) tmp[j] = pos[j] + 0.5 * dt * k1[j];
            const auto k2 = velocities(tmp, system.strengths, min_separation);
            for (std::size_t j = 0; j < n; ++j) tmp[j] = pos[j] + 0.5 * dt * k2[j];
            const auto k3 = velocities(tmp, system.strengths, min_separation);
            for (std::size_t j = 0; j < n; ++j) tmp[j] = pos[j] + dt * k3[j];
            const auto k4 = velocities(tmp, system.strengths, min_separation);
            for (std::size_t j = 0; j < n; ++j) {
                pos[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            }
        } catch (const SingularityError& e) {
            throw SingularityError("step " + std::to_string(step) + ": " + e.what());
        }
        VortexSystem frame{pos, system.strengths};
        traj.times.push_back(static_cast<double>(step + 1) * dt);
        traj.frames.push_back(std::move(frame));
    }
    return traj;
}

Complex linear_impulse(const VortexSystem& system) {
    Complex p{0.0, 0.0};
    for (std::size_t j = 0; j < system.count(); ++j) {
        p += system.strengths[j] * system.positions[j];
    }
    return p;
}

}  // namespace qvm
