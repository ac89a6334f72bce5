// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/presets.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qvm {

void RunConfig::validate() const {
    if (dt_ode <= 0.0) throw ConfigError("dt_ode must be > 0");
    if (dt_train <= 0.0) throw ConfigError("dt_train must be > 0");
    if (dt_predict <= 0.0) throw ConfigError("dt_predict must be > 0");
    if (sampling_proportion <= 0.0 || sampling_proportion > 1.0) {
        throw ConfigError("sampling_proportion must be in (0, 1]");
    }
    if (n_p < 0 || n_t < 0) throw ConfigError("n_p and n_t must be >= 0");
    if (import_path.empty()) {
        if (initial.count() == 0) throw ConfigError("no initial vortex data");
        try {
            initial.validate();
        } catch (const SingularityError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
        if (n_p > 0 && initial.count() > (std::size_t{1} << n_p)) {
            throw ConfigError("vortex count exceeds 2^n_p");
        }
    }
    if (ansatz_depth < 1) throw ConfigError("ansatz_depth must be >= 1");
}

RunConfig leapfrog_preset() {
    RunConfig run;
    run.preset = "leapfrog";
    run.initial.positions = {{0.0, 1.0}, {0.0, 0.3}, {0.0, -1.0}, {0.0, -0.3}};
    run.initial.strengths = {1.0, 1.0, -1.0, -1.0};
    run.c0 = {-1.7903, 0.0};
    run.dt_ode = 0.01;
    run.n_ode_steps = 1882;  // t up to 18.82, covering every training pair
    run.train_start = 0.0;
    run.train_stride = 0.18;
    run.dt_train = 1.0;
    run.n_train = 100;
    run.predict_start = 18.0;
    run.dt_predict = 1.0;
    run.n_p = 2;
    run.n_t = 6;
    return run;
}

RunConfig turbulent_preset(std::uint64_t seed) {
    RunConfig run;
    run.preset = "turbulent";
    run.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int j = 0; j < 8; ++j) {
        const double x = coord(rng);
        const double y = coord(rng);
        double g = 0.0;
        while (std::abs(g) < 0.2) g = coord(rng);
        run.initial.positions.emplace_back(x, y);
        run.initial.strengths.push_back(g);
    }
    run.c0 = {-2.5, 0.0};
    run.dt_ode = 0.01;
    run.n_ode_steps = 12800;  // t up to 128, covering every training pair
    run.train_start = 0.0;
    run.train_stride = 2.0;
    run.dt_train = 2.0;
    run.n_train = 64;
    run.predict_start = 0.0;
    run.dt_predict = 0.5;
    run.n_p = 3;
    run.n_t = 9;
    return run;
}

RunConfig viscous_import_preset(const std::string& csv_path) {
    RunConfig run;
    run.preset = "viscous-import";
    run.import_path = csv_path;
    run.c0 = {-2.0, 0.0};
    run.n_train = 4;
    run.n_p = 1;
    run.n_t = 4;
    return run;
}

namespace {
void parse_initial(const Config& config, RunConfig& run) {
    if (config.has("positions")) {
        run.initial.positions.clear();
        std::istringstream in(config.require_string("positions"));
        std::string entry;
        while (std::getline(in, entry, ';')) {
            std::istringstream pair(entry);
            double x, y;
            if (!(pair >> x >> y)) throw ConfigError("positions: expected 'x y; x y; ...'");
            run.initial.positions.emplace_back(x, y);
        }
    }
    if (config.has("strengths")) {
        run.initial.strengths.clear();
        std::istringstream in(config.require_string("strengths"));
        double g;
        while (in >> g) run.initial.strengths.push_back(g);
        if (!in.eof()) throw ConfigError("strengths: expected space-separated reals");
    }
}
}  // namespace

RunConfig resolve_config(const Config& config) {
    const std::string name = config.get_string("preset.name", "custom");
    RunConfig run;
    if (name == "leapfrog") {
        run = leapfrog_preset();
    } else if (name == "turbulent") {
        run = turbulent_preset(
            static_cast<std::uint64_t>(config.get_int("seed", 1)));
    } else if (name == "viscous-import") {
        run = viscous_import_preset(config.get_string("import_path", ""));
    } else if (name == "custom") {
        run.preset = "custom";
    } else {
        throw ConfigError("unknown preset: " + name);
    }

    parse_initial(config, run);
    run.c0 = {config.get_double("c0_re", run.c0.real()),
              config.get_double("c0_im", run.c0.imag())};
    run.dt_ode = config.get_double("dt_ode", run.dt_ode);
    run.n_ode_steps =
        static_cast<std::size_t>(config.get_int("n_ode_steps", static_cast<long>(run.n_ode_steps)));
    run.train_start = config.get_double("train_start", run.train_start);
    run.train_stride = config.get_double("train_stride", run.train_stride);
    run.dt_train = config.get_double("dt_train", run.dt_train);
    run.n_train =
        static_cast<std::size_t>(config.get_int("n_train", static_cast<long>(run.n_train)));
    run.predict_start = config.get_double("predict_start", run.predict_start);
    run.dt_predict = config.get_double("dt_predict", run.dt_predict);
    run.n_p = static_cast<int>(config.get_int("n_p", run.n_p));
    run.n_t = static_cast<int>(config.get_int("n_t", run.n_t));
    run.sampling_proportion =
        config.get_double("sampling_proportion", run.sampling_proportion);
    run.ansatz_depth = static_cast<int>(config.get_int("ansatz_depth", run.ansatz_depth));
    run.seed = static_cast<std::uint64_t>(config.get_int("seed", static_cast<long>(run.seed)));
    run.noise_config = config.get_string("noise_config", run.noise_config);
    run.import_path = config.get_string("import_path", run.import_path);
    run.out_dir = config.get_string("out", run.out_dir);
    run.validate();
    return run;
}

Config snapshot_config(const RunConfig& run) {
    Config config;
    config.set("preset.name", run.preset == "custom" ? "custom" : run.preset);
    {
        std::ostringstream pos, str;
        for (std::size_t j = 0; j < run.initial.count(); ++j) {
            if (j) {
                pos << "; ";
                str << " ";
            }
            pos << format_double(run.initial.positions[j].real()) << " "
                << format_double(run.initial.positions[j].imag());
            str << format_double(run.initial.strengths[j]);
        }
        if (run.initial.count() > 0) {
            config.set("positions", pos.str());
            config.set("strengths", str.str());
        }
    }
    config.set("c0_re", format_double(run.c0.real()));
    config.set("c0_im", format_double(run.c0.imag()));
    config.set("dt_ode", format_double(run.dt_ode));
    config.set("n_ode_steps", std::to_string(run.n_ode_steps));
    config.set("train_start", format_double(run.train_start));
    config.set("train_stride", format_double(run.train_stride));
    config.set("dt_train", format_double(run.dt_train));
    config.set("n_train", std::to_string(run.n_train));
    config.set("predict_start", format_double(run.predict_start));
    config.set("dt_predict", format_double(run.dt_predict));
    config.set("n_p", std::to_string(run.n_p));
    config.set("n_t", std::to_string(run.n_t));
    config.set("sampling_proportion", format_double(run.sampling_proportion));
    config.set("ansatz_depth", std::to_string(run.ansatz_depth));
    config.set("seed", std::to_string(run.seed));
    if (!run.noise_config.empty()) config.set("noise_config", run.noise_config);
    if (!run.import_path.empty()) config.set("import_path", run.import_path);
    // The output directory is where the snapshot itself lives; recording it
    // would make otherwise identical runs produce different snapshots.
    return config;
}

namespace {
std::size_t grid_index(double t, double dt, std::size_t n_max, const char* what) {
    const double raw = t / dt;
    const auto idx = static_cast<long long>(std::llround(raw));
    if (idx < 0 || std::abs(raw - static_cast<double>(idx)) > 1e-9) {
        throw ConfigError(std::string(what) + ": time " + format_double(t) +
                          " not on the dt_ode grid");
    }
    if (static_cast<std::size_t>(idx) > n_max) {
        throw ConfigError(std::string(what) + ": time " + format_double(t) +
                          " beyond the integrated range");
    }
    return static_cast<std::size_t>(idx);
}
}  // namespace

PresetData prepare(const RunConfig& run) {
    run.validate();
    PresetData data;

    if (!run.import_path.empty()) {
        data.truth = read_trajectory_csv(run.import_path);
        if (data.truth.size() < run.n_train + 1) {
            throw InsufficientDataError("imported trajectory too short for training window");
        }
        // The continuous dynamics behind an import is unknown; encode each
        // frame independently (normalized offsets from c0).
        auto encoded = encode(data.truth.frames.front(), run.c0);
        data.frame = encoded.second;
        for (const auto& frame : data.truth.frames) {
            Eigen::VectorXcd psi(static_cast<Eigen::Index>(frame.count()));
            for (std::size_t j = 0; j < frame.count(); ++j) {
                psi[static_cast<Eigen::Index>(j)] = frame.positions[j] - run.c0;
            }
            psi.normalize();
            data.states.push_back(WaveState{std::move(psi)});
        }
        for (std::size_t i = 0; i < run.n_train; ++i) {
            data.training.pairs.emplace_back(data.states[i], data.states[i + 1]);
        }
        data.initial_state = data.states.front();
        data.predict_frame = data.frame;
        return data;
    }

    data.truth = integrate(run.initial, run.dt_ode, run.n_ode_steps);
    auto encoded = encode(run.initial, run.c0);
    data.frame = encoded.second;
    data.states = evolve_wavestate(encoded.first, data.frame, run.dt_ode, run.n_ode_steps);

    for (std::size_t i = 0; i < run.n_train; ++i) {
        const double t0 = run.train_start + static_cast<double>(i) * run.train_stride;
        const std::size_t a = grid_index(t0, run.dt_ode, run.n_ode_steps, "training pair");
        const std::size_t b =
            grid_index(t0 + run.dt_train, run.dt_ode, run.n_ode_steps, "training pair");
        data.training.pairs.emplace_back(data.states[a], data.states[b]);
    }

    const std::size_t p0 =
        grid_index(run.predict_start, run.dt_ode, run.n_ode_steps, "predict_start");
    data.initial_state = data.states[p0];
    data.predict_frame = advance_frame(
        data.frame,
        std::vector<WaveState>(data.states.begin(), data.states.begin() + p0 + 1),
        run.dt_ode);
    return data;
}

}  // namespace qvm
