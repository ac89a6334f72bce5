// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qvm {

using nlohmann::json;

namespace {
json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ConfigError("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
    return out;
}

Eigen::VectorXcd vector_from_json(const json& j) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = complex_from(j[static_cast<std::size_t>(i)]);
    }
    return v;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(m(r, c)));
    }
    return out;
}

Eigen::MatrixXcd matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols) {
    if (static_cast<Eigen::Index>(j.size()) != rows * cols) {
        throw ConfigError("matrix entry count mismatch");
    }
    Eigen::MatrixXcd m(rows, cols);
    std::size_t idx = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from(j[idx++]);
    }
    return m;
}

json frame_fields(const EncodingFrame& frame) {
    json out;
    out["lambda"] = frame.lambda;
    out["c0"] = to_json(frame.c0);
    out["c_integral"] = to_json(frame.c_integral);
    out["strengths"] = frame.strengths;
    return out;
}

EncodingFrame frame_from(const json& j) {
    EncodingFrame frame;
    frame.lambda = j.at("lambda").get<double>();
    frame.c0 = complex_from(j.at("c0"));
    if (j.contains("c_integral")) frame.c_integral = complex_from(j.at("c_integral"));
    frame.strengths = j.at("strengths").get<std::vector<double>>();
    return frame;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}
}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_trajectory_csv(const std::string& path, const Trajectory& trajectory) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "t,j,x,y,gamma\n";
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        const VortexSystem& frame = trajectory.frames[i];
        for (std::size_t j = 0; j < frame.count(); ++j) {
            out << format_double(trajectory.times[i]) << ',' << j << ','
                << format_double(frame.positions[j].real()) << ','
                << format_double(frame.positions[j].imag()) << ','
                << format_double(frame.strengths[j]) << '\n';
        }
    }
}

Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,j,x,y,gamma", 0) != 0) {
        throw ConfigError(path + ": expected header t,j,x,y,gamma");
    }
    Trajectory trajectory;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        double t, x, y, gamma;
        std::size_t j;
        char c1, c2, c3, c4;
        if (!(row >> t >> c1 >> j >> c2 >> x >> c3 >> y >> c4 >> gamma) || c1 != ',' ||
            c2 != ',' || c3 != ',' || c4 != ',') {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": malformed row");
        }
        if (trajectory.times.empty() || t != trajectory.times.back()) {
            if (j != 0) {
                throw ConfigError(path + ":" + std::to_string(line_no) +
                                  ": frame must start at vortex 0");
            }
            trajectory.times.push_back(t);
            trajectory.frames.emplace_back();
        }
        VortexSystem& frame = trajectory.frames.back();
        if (j != frame.count()) {
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": vortex indices must be contiguous");
        }
        frame.positions.emplace_back(x, y);
        frame.strengths.push_back(gamma);
    }
    if (trajectory.frames.empty()) throw InsufficientDataError(path + ": no frames");
    const std::size_t n = trajectory.frames.front().count();
    for (const auto& frame : trajectory.frames) {
        if (frame.count() != n) throw ConfigError(path + ": ragged frames");
    }
    return trajectory;
}

void write_encoded_state(const std::string& path, const WaveState& state,
                         const EncodingFrame& frame, double dt, std::uint64_t seed) {
    json j = frame_fields(frame);
    j["amplitudes"] = vector_to_json(state.amplitudes);
    j["dt"] = dt;
    j["seed"] = seed;
    save_file(path, j);
}

std::pair<WaveState, EncodingFrame> read_encoded_state(const std::string& path, double* dt,
                                                       std::uint64_t* seed) {
    const json j = load_file(path);
    if (dt != nullptr) *dt = j.at("dt").get<double>();
    if (seed != nullptr) *seed = j.at("seed").get<std::uint64_t>();
    return {WaveState{vector_from_json(j.at("amplitudes"))}, frame_from(j)};
}

void write_blocks_json(const std::string& path, const std::vector<WaveState>& blocks,
                       const EncodingFrame& frame, double dt, double t_offset,
                       std::uint64_t seed) {
    json j = frame_fields(frame);
    json arr = json::array();
    for (const auto& block : blocks) arr.push_back(vector_to_json(block.amplitudes));
    j["blocks"] = std::move(arr);
    j["dt"] = dt;
    j["t_offset"] = t_offset;
    j["seed"] = seed;
    save_file(path, j);
}

BlocksFile read_blocks_json(const std::string& path) {
    const json j = load_file(path);
    BlocksFile file;
    file.frame = frame_from(j);
    file.dt = j.at("dt").get<double>();
    file.t_offset = j.value("t_offset", 0.0);
    file.seed = j.value("seed", std::uint64_t{0});
    for (const auto& block : j.at("blocks")) {
        file.blocks.push_back(WaveState{vector_from_json(block)});
    }
    return file;
}

void write_hamiltonian_json(const std::string& path, const EffectiveHamiltonian& h) {
    json j;
    j["matrix"] = matrix_to_json(h.matrix);
    j["dim"] = h.matrix.rows();
    j["dt_train"] = h.dt_train;
    j["dt_predict"] = h.dt_predict;
    j["loss"] = h.loss;
    j["iterations"] = h.iterations;
    save_file(path, j);
}

EffectiveHamiltonian read_hamiltonian_json(const std::string& path) {
    const json j = load_file(path);
    EffectiveHamiltonian h;
    const Eigen::Index dim = j.at("dim").get<Eigen::Index>();
    h.matrix = matrix_from_json(j.at("matrix"), dim, dim);
    h.dt_train = j.at("dt_train").get<double>();
    h.dt_predict = j.at("dt_predict").get<double>();
    h.loss = j.value("loss", 0.0);
    h.iterations = j.value("iterations", 0);
    return h;
}

void write_statevector_json(const std::string& path, const StateVector& state) {
    json j;
    j["n_qubits"] = state.n_qubits;
    j["ordering"] = "qubit 0 is the least-significant bit of the amplitude index";
    j["amplitudes"] = vector_to_json(state.amplitudes);
    save_file(path, j);
}

StateVector read_statevector_json(const std::string& path) {
    const json j = load_file(path);
    StateVector state;
    state.n_qubits = j.at("n_qubits").get<int>();
    state.amplitudes = vector_from_json(j.at("amplitudes"));
    if (state.amplitudes.size() != (Eigen::Index{1} << state.n_qubits)) {
        throw DimensionError(path + ": amplitude count != 2^n_qubits");
    }
    return state;
}

void write_density_json(const std::string& path, const DensityMatrix& rho) {
    json j;
    j["n_qubits"] = rho.n_qubits;
    j["matrix"] = matrix_to_json(rho.matrix);
    save_file(path, j);
}

DensityMatrix read_density_json(const std::string& path) {
    const json j = load_file(path);
    DensityMatrix rho;
    rho.n_qubits = j.at("n_qubits").get<int>();
    const Eigen::Index dim = Eigen::Index{1} << rho.n_qubits;
    rho.matrix = matrix_from_json(j.at("matrix"), dim, dim);
    return rho;
}

void write_plan_json(const std::string& path, int n_p, int n_t, const Eigen::MatrixXcd& f,
                     const Eigen::VectorXcd& initial) {
    json j;
    j["n_p"] = n_p;
    j["n_t"] = n_t;
    j["F"] = matrix_to_json(f);
    j["initial"] = vector_to_json(initial);
    save_file(path, j);
}

void write_field_csv(const std::string& path, const FieldGrid& grid) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "x,y,ux,uy\n";
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const std::size_t node = grid.index(ix, iy);
            if (grid.masked[node]) continue;
            out << format_double(grid.x_at(ix)) << ',' << format_double(grid.y_at(iy)) << ','
                << format_double(grid.velocities[node].real()) << ','
                << format_double(grid.velocities[node].imag()) << '\n';
        }
    }
}

void write_streamlines_json(const std::string& path,
                            const std::vector<std::vector<Complex>>& lines) {
    json arr = json::array();
    for (const auto& line : lines) {
        json poly = json::array();
        for (const Complex& z : line) poly.push_back(json::array({z.real(), z.imag()}));
        arr.push_back(std::move(poly));
    }
    json j;
    j["streamlines"] = std::move(arr);
    save_file(path, j);
}

void write_training_log_json(const std::string& path, const VqaResult& result,
                             const Ansatz& ansatz, std::uint64_t seed) {
    json j;
    j["ansatz"] = "ry-rz-czring(n_qubits=" + std::to_string(ansatz.n_qubits) +
                  ",depth=" + std::to_string(ansatz.depth) + ")";
    j["seed"] = seed;
    j["loss_history"] = result.loss_history;
    j["final_loss"] = result.final_loss;
    j["theta"] = std::vector<double>(result.theta.data(),
                                     result.theta.data() + result.theta.size());
    save_file(path, j);
}

namespace {
std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
}  // namespace

Config Config::parse_string(const std::string& text) {
    Config config;
    std::istringstream in(text);
    std::string line, section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (!section.empty()) key = section + "." + key;
        config.values_[key] = value;
    }
    return config;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_string(text.str());
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::string Config::require_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing config key: " + key);
    return it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? require_double(key) : fallback;
}

double Config::require_double(const std::string& key) const {
    const std::string raw = require_string(key);
    try {
        std::size_t pos = 0;
        const double v = std::stod(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not a number: " + raw);
    }
}

long Config::get_int(const std::string& key, long fallback) const {
    return has(key) ? require_int(key) : fallback;
}

long Config::require_int(const std::string& key) const {
    const std::string raw = require_string(key);
    try {
        std::size_t pos = 0;
        const long v = std::stol(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not an integer: " + raw);
    }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string raw = require_string(key);
    if (raw == "true" || raw == "1") return true;
    if (raw == "false" || raw == "0") return false;
    throw ConfigError("config key " + key + ": not a boolean: " + raw);
}

std::string Config::dump() const {
    // Group dotted keys back into sections; std::map keeps everything sorted.
    std::map<std::string, std::map<std::string, std::string>> sections;
    for (const auto& [key, value] : values_) {
        const auto dot = key.find('.');
        if (dot == std::string::npos) {
            sections[""][key] = value;
        } else {
            sections[key.substr(0, dot)][key.substr(dot + 1)] = value;
        }
    }
    std::ostringstream out;
    for (const auto& [section, entries] : sections) {
        if (!section.empty()) out << "[" << section << "]\n";
        for (const auto& [key, value] : entries) out << key << " = " << value << "\n";
    }
    return out.str();
}

NoiseModel parse_noise_model(const Config& config) {
    NoiseModel model;
    model.p1 = config.get_double("p1", 0.0);
    model.p2 = config.get_double("p2", 0.0);
    model.gate_ns_1q = config.get_double("gate_ns_1q", 24.0);
    model.gate_ns_2q = config.get_double("gate_ns_2q", 40.0);
    model.cz_phase_error = config.get_double("cz_phase_error", 0.0);

    auto indexed = [&](const std::string& name, std::vector<double>& out) {
        for (int q = 0;; ++q) {
            const std::string key = name + "[" + std::to_string(q) + "]";
            if (!config.has(key)) break;
            out.push_back(config.require_double(key));
        }
        // Indices must be contiguous from 0; a stray higher index is a typo.
        std::size_t present = 0;
        for (const auto& [key, value] : config.values()) {
            if (key.rfind(name + "[", 0) == 0) ++present;
        }
        if (present != out.size()) {
            throw ConfigError("noise model: " + name + "[] indices must be contiguous from 0");
        }
    };
    indexed("f0", model.f0);
    indexed("f1", model.f1);
    indexed("t1", model.t1_us);
    indexed("t2", model.t2_us);
    if (model.f0.size() != model.f1.size()) {
        throw ConfigError("noise model: f0[] and f1[] must have the same length");
    }
    if (model.t1_us.size() != model.t2_us.size()) {
        throw ConfigError("noise model: t1[] and t2[] must have the same length");
    }
    return model;
}

}  // namespace qvm
