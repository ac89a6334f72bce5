// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvm/encoding.hpp"
#include "qvm/hamiltonian_fit.hpp"
#include "qvm/noise.hpp"
#include "qvm/reconstruct.hpp"
#include "qvm/statevector.hpp"
#include "qvm/vortex.hpp"
#include "qvm/vqa.hpp"

namespace qvm {

/// Trajectory CSV: header `t,j,x,y,gamma`, one row per (frame, vortex),
/// floats with 17 significant digits. Also the import path for externally
/// generated trajectories.
void write_trajectory_csv(const std::string& path, const Trajectory& trajectory);
Trajectory read_trajectory_csv(const std::string& path);

/// Single encoded state + frame: complex numbers as [re, im]; top-level
/// fields `amplitudes`, `lambda`, `c0`, `strengths`, `dt`, `seed`.
void write_encoded_state(const std::string& path, const WaveState& state,
                         const EncodingFrame& frame, double dt, std::uint64_t seed);
std::pair<WaveState, EncodingFrame> read_encoded_state(const std::string& path,
                                                       double* dt = nullptr,
                                                       std::uint64_t* seed = nullptr);

/// Block history (e.g. extracted circuit outputs): `blocks` array of states
/// plus the frame fields and the block time grid.
void write_blocks_json(const std::string& path, const std::vector<WaveState>& blocks,
                       const EncodingFrame& frame, double dt, double t_offset,
                       std::uint64_t seed);
struct BlocksFile {
    std::vector<WaveState> blocks;
    EncodingFrame frame;
    double dt = 0.0;
    double t_offset = 0.0;
    std::uint64_t seed = 0;
};
BlocksFile read_blocks_json(const std::string& path);

/// Hamiltonian JSON: `matrix` row-major [re,im] pairs, `dt_train`,
/// `dt_predict`, `loss`, `iterations`.
void write_hamiltonian_json(const std::string& path, const EffectiveHamiltonian& h);
EffectiveHamiltonian read_hamiltonian_json(const std::string& path);

/// Statevector dump: `amplitudes` as [re,im] pairs, `n_qubits`, and an
/// `ordering` note (qubit 0 = least-significant bit of the index).
void write_statevector_json(const std::string& path, const StateVector& state);
StateVector read_statevector_json(const std::string& path);

/// DensityMatrix JSON: `matrix` row-major [re,im], `n_qubits`.
void write_density_json(const std::string& path, const DensityMatrix& rho);
DensityMatrix read_density_json(const std::string& path);

/// Plan JSON: `n_p`, `n_t`, `F` matrix, `initial` amplitudes.
void write_plan_json(const std::string& path, int n_p, int n_t,
                     const Eigen::MatrixXcd& f, const Eigen::VectorXcd& initial);

/// FieldGrid CSV: header `x,y,ux,uy` (masked nodes omitted).
void write_field_csv(const std::string& path, const FieldGrid& grid);

/// Streamlines as JSON polylines: array of arrays of [x, y].
void write_streamlines_json(const std::string& path,
                            const std::vector<std::vector<Complex>>& lines);

/// Training run log: per-iteration loss, final theta, seed, ansatz descriptor.
void write_training_log_json(const std::string& path, const VqaResult& result,
                             const Ansatz& ansatz, std::uint64_t seed);

/// Flat key/value config (TOML-style sections); keys inside a [section] are
/// exposed as "section.key". Values keep their raw text; typed accessors
/// throw ConfigError on parse failure or missing required keys.
class Config {
  public:
    Config() = default;
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    double require_double(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    long require_int(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    const std::map<std::string, std::string>& values() const { return values_; }

    /// Serialized snapshot, keys grouped back into sections, sorted.
    std::string dump() const;

  private:
    std::map<std::string, std::string> values_;
};

/// Noise model keys: p1, p2, f0[q], f1[q], t1[q], t2[q], gate_ns_1q,
/// gate_ns_2q, cz_phase_error. Indexed keys must be contiguous from 0.
NoiseModel parse_noise_model(const Config& config);

/// Formats with 17 significant digits (round-trips doubles exactly).
std::string format_double(double value);

}  // namespace qvm
