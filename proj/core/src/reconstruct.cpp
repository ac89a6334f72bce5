// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qvm {

PhaseFixResult fix_global_phase(const WaveState& state) {
    const Complex total = state.amplitudes.sum();
    PhaseFixResult result;
    Complex anchor = total;
    if (std::abs(total) < 1e-10) {
        result.used_fallback = true;
        Eigen::Index imax = 0;
        state.amplitudes.cwiseAbs().maxCoeff(&imax);
        anchor = state.amplitudes[imax];
    }
    const Complex phase =
        std::abs(anchor) > 0.0 ? std::conj(anchor) / std::abs(anchor) : Complex{1.0, 0.0};
    result.state.amplitudes = phase * state.amplitudes;
    return result;
}

double fidelity(const WaveState& ideal, const WaveState& test) {
    if (ideal.size() != test.size()) throw DimensionError("fidelity: size mismatch");
    return std::norm(ideal.amplitudes.dot(test.amplitudes));
}

double deviation(const VortexSystem& ideal, const VortexSystem& test) {
    if (ideal.count() != test.count()) throw DimensionError("deviation: vortex count mismatch");
    double d = 0.0;
    for (std::size_t j = 0; j < ideal.count(); ++j) {
        d += std::abs(test.positions[j] - ideal.positions[j]);
    }
    return d;
}

FieldGrid velocity_field(const VortexSystem& system, double x_min, double x_max,
                         double y_min, double y_max, int nx, int ny, double delta,
                         double min_separation) {
    if (nx < 2 || ny < 2) throw ConfigError("velocity_field: nx, ny must be >= 2");
    if (delta < 0.0) throw ConfigError("velocity_field: delta must be >= 0");
    FieldGrid grid;
    grid.x_min = x_min;
    grid.x_max = x_max;
    grid.y_min = y_min;
    grid.y_max = y_max;
    grid.nx = nx;
    grid.ny = ny;
    grid.delta = delta;
    grid.velocities.assign(static_cast<std::size_t>(nx) * ny, Complex{0.0, 0.0});
    grid.masked.assign(grid.velocities.size(), false);

    const double d2 = delta * delta;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Complex z{grid.x_at(ix), grid.y_at(iy)};
            const std::size_t node = grid.index(ix, iy);
            Complex v{0.0, 0.0};
            bool mask = false;
            for (std::size_t k = 0; k < system.count(); ++k) {
                const Complex dz = z - system.positions[k];
                const double r2 = std::norm(dz);
                if (delta == 0.0 && r2 < min_separation * min_separation) {
                    mask = true;
                    break;
                }
                v += system.strengths[k] * Complex{0.0, 1.0} * dz / (r2 + d2);
            }
            if (mask) {
                grid.masked[node] = true;
            } else {
                grid.velocities[node] = v / (2.0 * std::numbers::pi);
            }
        }
    }
    return grid;
}

Trajectory decode_experiment(const std::vector<WaveState>& blocks,
                             const EncodingFrame& frame, double dt,
                             const DecodeOptions& options, double t_offset,
                             const std::vector<WaveState>* c_reference) {
    std::vector<WaveState> fixed;
    fixed.reserve(blocks.size());
    for (const auto& block : blocks) fixed.push_back(fix_global_phase(block).state);
    if (c_reference == nullptr) return decode(fixed, frame, dt, options, t_offset);

    if (c_reference->size() != blocks.size()) {
        throw DimensionError("decode_experiment: reference/block count mismatch");
    }
    std::vector<WaveState> ref_fixed;
    ref_fixed.reserve(c_reference->size());
    for (const auto& s : *c_reference) ref_fixed.push_back(fix_global_phase(s).state);
    // Decode the reference, then shift each vortex by the measured amplitude
    // difference: phi = psi / lambda + drift, and the drift terms coincide.
    Trajectory traj = decode(ref_fixed, frame, dt, options, t_offset);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (fixed[i].amplitudes.size() != ref_fixed[i].amplitudes.size()) {
            throw DimensionError("decode_experiment: reference/block dimension mismatch");
        }
        for (std::size_t j = 0; j < traj.frames[i].positions.size(); ++j) {
            traj.frames[i].positions[j] +=
                (fixed[i].amplitudes[static_cast<Eigen::Index>(j)] -
                 ref_fixed[i].amplitudes[static_cast<Eigen::Index>(j)]) /
                frame.lambda;
        }
    }
    return traj;
}

namespace {
// Bilinearly interpolated velocity; zero outside the grid or on masked cells.
Complex sample(const FieldGrid& grid, Complex z, bool& inside) {
    const double fx = (z.real() - grid.x_min) / (grid.x_max - grid.x_min) * (grid.nx - 1);
    const double fy = (z.imag() - grid.y_min) / (grid.y_max - grid.y_min) * (grid.ny - 1);
    if (fx < 0.0 || fy < 0.0 || fx > grid.nx - 1 || fy > grid.ny - 1) {
        inside = false;
        return {0.0, 0.0};
    }
    inside = true;
    const int ix = std::min(static_cast<int>(fx), grid.nx - 2);
    const int iy = std::min(static_cast<int>(fy), grid.ny - 2);
    const double tx = fx - ix, ty = fy - iy;
    Complex v{0.0, 0.0};
    const double w[4] = {(1 - tx) * (1 - ty), tx * (1 - ty), (1 - tx) * ty, tx * ty};
    const std::size_t nodes[4] = {grid.index(ix, iy), grid.index(ix + 1, iy),
                                  grid.index(ix, iy + 1), grid.index(ix + 1, iy + 1)};
    for (int c = 0; c < 4; ++c) {
        if (grid.masked[nodes[c]]) continue;
        v += w[c] * grid.velocities[nodes[c]];
    }
    return v;
}
}  // namespace

std::vector<std::vector<Complex>> streamlines(const FieldGrid& grid, int seeds_per_edge,
                                              double step, int max_steps) {
    if (step <= 0.0) {
        step = std::min(grid.x_max - grid.x_min, grid.y_max - grid.y_min) /
               (2.0 * std::max(grid.nx, grid.ny));
    }
    std::vector<Complex> seeds;
    for (int s = 0; s < seeds_per_edge; ++s) {
        const double f = (s + 0.5) / seeds_per_edge;
        const double x = grid.x_min + f * (grid.x_max - grid.x_min);
        const double y = grid.y_min + f * (grid.y_max - grid.y_min);
        seeds.emplace_back(x, grid.y_min);
        seeds.emplace_back(x, grid.y_max);
        seeds.emplace_back(grid.x_min, y);
        seeds.emplace_back(grid.x_max, y);
    }

    std::vector<std::vector<Complex>> lines;
    for (Complex z : seeds) {
        std::vector<Complex> line{z};
        for (int i = 0; i < max_steps; ++i) {
            bool inside = true;
            const Complex v1 = sample(grid, z, inside);
            if (!inside) break;
            const double s1 = std::abs(v1);
            if (s1 < 1e-12) break;
            const Complex mid = z + 0.5 * step * v1 / s1;
            const Complex v2 = sample(grid, mid, inside);
            if (!inside) break;
            const double s2 = std::abs(v2);
            if (s2 < 1e-12) break;
            z += step * v2 / s2;
            if (z.real() < grid.x_min || z.real() > grid.x_max ||
                z.imag() < grid.y_min || z.imag() > grid.y_max) {
                break;
            }
            line.push_back(z);
        }
        if (line.size() > 1) lines.push_back(std::move(line));
    }
    return lines;
}

std::string render_svg(const FieldGrid& grid, const std::vector<std::vector<Complex>>& lines,
                       int width, int height) {
    const double sx = width / (grid.x_max - grid.x_min);
    const double sy = height / (grid.y_max - grid.y_min);
    auto px = [&](double x) { return (x - grid.x_min) * sx; };
    // SVG y axis points down.
    auto py = [&](double y) { return height - (y - grid.y_min) * sy; };

    double vmax = 0.0;
    for (std::size_t i = 0; i < grid.velocities.size(); ++i) {
        if (!grid.masked[i]) vmax = std::max(vmax, std::abs(grid.velocities[i]));
    }
    if (vmax == 0.0) vmax = 1.0;
    const double arrow = 0.9 * std::min(width / double(grid.nx), height / double(grid.ny));

    std::ostringstream out;
    out.precision(3);
    out << std::fixed;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g stroke=\"#2c5f8a\" stroke-width=\"1\">\n";
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const std::size_t node = grid.index(ix, iy);
            if (grid.masked[node]) continue;
            const Complex v = grid.velocities[node];
            const double mag = std::abs(v);
            if (mag < 1e-14) continue;
            const double len = arrow * mag / vmax;
            const double x0 = px(grid.x_at(ix));
            const double y0 = py(grid.y_at(iy));
            const double dx = v.real() / mag * len;
            const double dy = -v.imag() / mag * len;
            out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + dx
                << "\" y2=\"" << y0 + dy << "\"/>\n";
        }
    }
    out << "</g>\n<g stroke=\"#c44e52\" stroke-width=\"1.2\" fill=\"none\">\n";
    for (const auto& line : lines) {
        out << "<polyline points=\"";
        for (const Complex& z : line) out << px(z.real()) << "," << py(z.imag()) << " ";
        out << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace qvm
