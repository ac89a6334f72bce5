// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line pipeline around libqvm_core: truth generation, encoding,
// model training, spacetime-circuit simulation (optionally noisy), and
// reconstruction back to trajectories and velocity fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qvm/experiment.hpp"
#include "qvm/io.hpp"
#include "qvm/presets.hpp"
#include "qvm/reconstruct.hpp"
#include "qvm/vqa.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

/// The CLI caps noisy runs below the library's 10-qubit density limit.
constexpr int kNoisyQubitCap = 8;

struct GlobalOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    bool noisy = false;
};

qvm::RunConfig load_run(const GlobalOptions& global) {
    qvm::Config config;
    if (!global.config_path.empty()) config = qvm::Config::parse_file(global.config_path);
    if (global.seed) config.set("seed", std::to_string(*global.seed));
    if (!global.out_dir.empty()) config.set("out", global.out_dir);
    qvm::RunConfig run = qvm::resolve_config(config);
    fs::create_directories(run.out_dir);
    std::ofstream snapshot(fs::path(run.out_dir) / "resolved.cfg");
    snapshot << qvm::snapshot_config(run).dump();
    return run;
}

std::string out_path(const qvm::RunConfig& run, const std::string& name) {
    return (fs::path(run.out_dir) / name).string();
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw qvm::Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::size_t grid_index(double t, double dt, std::size_t n_max, const char* what) {
    const double raw = t / dt;
    const auto idx = static_cast<long long>(std::llround(raw));
    if (idx < 0 || std::abs(raw - static_cast<double>(idx)) > 1e-9 ||
        static_cast<std::size_t>(idx) > n_max) {
        throw qvm::ConfigError(std::string(what) + ": time " + qvm::format_double(t) +
                               " not on the stored state grid");
    }
    return static_cast<std::size_t>(idx);
}

qvm::TrainingSet training_from_states(const qvm::RunConfig& run, const qvm::BlocksFile& file) {
    qvm::TrainingSet training;
    const std::size_t last = file.blocks.size() - 1;
    for (std::size_t i = 0; i < run.n_train; ++i) {
        const double t0 = run.train_start + static_cast<double>(i) * run.train_stride;
        const std::size_t a = grid_index(t0, file.dt, last, "training pair");
        const std::size_t b = grid_index(t0 + run.dt_train, file.dt, last, "training pair");
        training.pairs.emplace_back(file.blocks[a], file.blocks[b]);
    }
    return training;
}

int cmd_gen_truth(const GlobalOptions& global) {
    const qvm::RunConfig run = load_run(global);
    qvm::Trajectory truth;
    if (!run.import_path.empty()) {
        truth = qvm::read_trajectory_csv(run.import_path);
    } else {
        truth = qvm::integrate(run.initial, run.dt_ode, run.n_ode_steps);
    }
    qvm::write_trajectory_csv(out_path(run, "truth.csv"), truth);
    json meta;
    meta["integrator"] = run.import_path.empty() ? "rk4" : "imported";
    meta["dt"] = run.import_path.empty() ? run.dt_ode : truth.dt();
    meta["n_frames"] = truth.size();
    meta["seed"] = run.seed;
    save_json(out_path(run, "truth_meta.json"), meta);
    std::cout << "wrote " << out_path(run, "truth.csv") << " (" << truth.size()
              << " frames)\n";
    return kExitOk;
}

int cmd_encode(const GlobalOptions& global) {
    const qvm::RunConfig run = load_run(global);
    const qvm::PresetData data = qvm::prepare(run);
    const double dt = run.import_path.empty() ? run.dt_ode : data.truth.dt();
    qvm::write_encoded_state(out_path(run, "encoded.json"), data.states.front(), data.frame,
                             dt, run.seed);
    qvm::write_blocks_json(out_path(run, "states.json"), data.states, data.frame, dt, 0.0,
                           run.seed);
    std::cout << "wrote " << out_path(run, "states.json") << " (" << data.states.size()
              << " states, lambda " << data.frame.lambda << ")\n";
    return kExitOk;
}

int cmd_train_ham(const GlobalOptions& global) {
    const qvm::RunConfig run = load_run(global);
    const qvm::BlocksFile states = qvm::read_blocks_json(out_path(run, "states.json"));
    const qvm::TrainingSet training = training_from_states(run, states);
    qvm::FitOptions options;
    options.seed = run.seed;
    qvm::EffectiveHamiltonian h = qvm::fit(training, run.dt_train, options);
    h.dt_predict = run.dt_predict;
    qvm::write_hamiltonian_json(out_path(run, "model.json"), h);
    json log;
    log["loss"] = h.loss;
    log["iterations"] = h.iterations;
    log["n_pairs"] = training.size();
    save_json(out_path(run, "train_ham_log.json"), log);
    std::cout << "fit loss " << h.loss << " after " << h.iterations << " iterations\n";
    return kExitOk;
}

int cmd_train_vqa(const GlobalOptions& global) {
    const qvm::RunConfig run = load_run(global);
    const qvm::BlocksFile states = qvm::read_blocks_json(out_path(run, "states.json"));
    qvm::TrainingSet training = training_from_states(run, states);
    for (auto& [x, y] : training.pairs) {
        x.amplitudes = qvm::pad_to_power_of_two(x.amplitudes);
        y.amplitudes = qvm::pad_to_power_of_two(y.amplitudes);
    }
    const qvm::Ansatz ansatz{run.n_p, run.ansatz_depth};
    qvm::VqaOptions options;
    options.seed = run.seed;
    const qvm::VqaResult result = qvm::train(ansatz, training, options);
    qvm::write_training_log_json(out_path(run, "train_vqa_log.json"), result, ansatz,
                                 run.seed);

    json model;
    model["kind"] = "vqa";
    model["n_qubits"] = ansatz.n_qubits;
    model["depth"] = ansatz.depth;
    model["dt_step"] = run.dt_train;
    model["final_loss"] = result.final_loss;
    model["theta"] = std::vector<double>(result.theta.data(),
                                         result.theta.data() + result.theta.size());
    save_json(out_path(run, "model_vqa.json"), model);
    std::cout << "vqa final loss " << result.final_loss << " ("
              << result.loss_history.size() - 1 << " iterations)\n";
    return kExitOk;
}

struct Model {
    Eigen::MatrixXcd f;   // one-block-step propagator
    double block_dt = 0;  // time advanced per application of f
};

Model load_model(const qvm::RunConfig& run, const std::string& model_path) {
    const fs::path path = model_path.empty() ? fs::path(run.out_dir) / "model.json"
                                             : fs::path(model_path);
    std::ifstream probe(path);
    if (!probe) throw qvm::Error("cannot open model " + path.string());
    json j;
    probe >> j;
    Model model;
    if (j.contains("kind") && j["kind"] == "vqa") {
        const qvm::Ansatz ansatz{j.at("n_qubits").get<int>(), j.at("depth").get<int>()};
        const auto raw = j.at("theta").get<std::vector<double>>();
        const Eigen::VectorXd theta =
            Eigen::Map<const Eigen::VectorXd>(raw.data(), static_cast<Eigen::Index>(raw.size()));
        model.f = ansatz.matrix(theta);
        model.block_dt = j.at("dt_step").get<double>();
    } else {
        const qvm::EffectiveHamiltonian h = qvm::read_hamiltonian_json(path.string());
        model.f = qvm::evolution_operator(h.matrix, run.dt_predict);
        model.block_dt = run.dt_predict;
    }
    return model;
}

int cmd_simulate(const GlobalOptions& global, const std::string& model_path) {
    const qvm::RunConfig run = load_run(global);
    if (run.n_p < 1 || run.n_t < 1) throw qvm::ConfigError("simulate: n_p and n_t must be >= 1");
    if (global.noisy && run.n_p + run.n_t > kNoisyQubitCap) {
        throw qvm::ConfigError("simulate --noisy: n_p + n_t exceeds the 8-qubit cap");
    }
    const qvm::BlocksFile states = qvm::read_blocks_json(out_path(run, "states.json"));
    const Model model = load_model(run, model_path);

    const std::size_t p0 = grid_index(run.predict_start, states.dt,
                                      states.blocks.size() - 1, "predict_start");
    qvm::WaveState psi0 = states.blocks[p0];
    qvm::EncodingFrame frame = states.frame;
    if (p0 > 0 && run.import_path.empty()) {
        frame = qvm::advance_frame(
            frame,
            std::vector<qvm::WaveState>(states.blocks.begin(), states.blocks.begin() + p0 + 1),
            states.dt);
    }

    const qvm::SpacetimePlan plan = qvm::build_plan(run.n_t, psi0, model.f);
    qvm::write_plan_json(out_path(run, "plan.json"), run.n_p, run.n_t, model.f,
                         qvm::pad_to_power_of_two(psi0.amplitudes));

    std::vector<qvm::WaveState> blocks;
    if (global.noisy) {
        qvm::NoisyRunOptions options;
        options.seed = run.seed;
        if (!run.noise_config.empty()) {
            options.model = qvm::parse_noise_model(qvm::Config::parse_file(run.noise_config));
        } else {
            options.model.p1 = qvm::depolarizing_rate_1q(0.9997);
            options.model.p2 = qvm::depolarizing_rate_2q(0.9976);
        }
        options.readout_error = options.model.has_readout_error();
        const qvm::NoisyRunResult result = qvm::run_noisy_spacetime(plan, options);
        blocks = result.blocks;
        json meta;
        meta["eigenvalues"] = result.eigenvalues;
        meta["branch_probabilities"] = result.branch_probabilities;
        meta["n_twirl_variants"] = options.n_twirl_variants;
        save_json(out_path(run, "noisy_meta.json"), meta);
    } else {
        const qvm::SpacetimeState state = qvm::run(plan);
        qvm::write_statevector_json(out_path(run, "statevector.json"), state.state);
        const std::size_t n_steps = std::size_t{1} << run.n_t;
        for (std::size_t i = 0; i < n_steps; ++i) {
            blocks.push_back(qvm::extract_block(state, i).first);
        }
    }
    qvm::write_blocks_json(out_path(run, "blocks.json"), blocks, frame, model.block_dt,
                           run.predict_start, run.seed);
    std::cout << "wrote " << out_path(run, "blocks.json") << " (" << blocks.size()
              << " blocks" << (global.noisy ? ", noisy" : "") << ")\n";
    return kExitOk;
}

qvm::FieldGrid frame_field(const qvm::VortexSystem& frame, const qvm::Config& extra) {
    qvm::Complex centroid{0.0, 0.0};
    for (const auto& p : frame.positions) centroid += p;
    centroid /= static_cast<double>(frame.count());
    const double half = extra.get_double("field_halfwidth", 2.5);
    const int nx = static_cast<int>(extra.get_int("field_nx", 41));
    const int ny = static_cast<int>(extra.get_int("field_ny", 41));
    const double x_min = extra.get_double("field_xmin", centroid.real() - half);
    const double x_max = extra.get_double("field_xmax", centroid.real() + half);
    const double y_min = extra.get_double("field_ymin", centroid.imag() - half);
    const double y_max = extra.get_double("field_ymax", centroid.imag() + half);
    const double diag = std::hypot(x_max - x_min, y_max - y_min);
    const double delta = extra.get_double("field_delta", 0.05 * diag);
    return qvm::velocity_field(frame, x_min, x_max, y_min, y_max, nx, ny, delta);
}

void export_field(const qvm::VortexSystem& frame, const qvm::Config& extra,
                  const std::string& stem) {
    const qvm::FieldGrid grid = frame_field(frame, extra);
    const auto lines = qvm::streamlines(grid);
    qvm::write_field_csv(stem + ".csv", grid);
    qvm::write_streamlines_json(stem + "_streamlines.json", lines);
    std::ofstream svg(stem + ".svg");
    svg << qvm::render_svg(grid, lines);
}

int cmd_reconstruct(const GlobalOptions& global, const std::string& blocks_path,
                    const std::string& reference_path) {
    const qvm::RunConfig run = load_run(global);
    const qvm::Config extra = global.config_path.empty()
                                  ? qvm::Config()
                                  : qvm::Config::parse_file(global.config_path);
    const qvm::BlocksFile blocks = qvm::read_blocks_json(
        blocks_path.empty() ? out_path(run, "blocks.json") : blocks_path);

    qvm::DecodeOptions options;
    options.sampling_proportion = run.sampling_proportion;
    options.seed = run.seed;
    options.exact_integration = extra.get_bool("exact_integration", false);

    std::optional<qvm::BlocksFile> reference;
    if (!reference_path.empty()) {
        reference = qvm::read_blocks_json(reference_path);
        if (reference->blocks.size() != blocks.blocks.size()) {
            throw qvm::DimensionError("reconstruct: reference block count mismatch");
        }
    }
    // With a reference, the linear drift comes from the reference blocks and
    // only the per-block amplitudes come from the (possibly noisy) run.
    const qvm::Trajectory trajectory = qvm::decode_experiment(
        blocks.blocks, blocks.frame, blocks.dt, options, blocks.t_offset,
        reference ? &reference->blocks : nullptr);
    qvm::write_trajectory_csv(out_path(run, "reconstructed.csv"), trajectory);

    json metrics;
    if (reference) {
        const qvm::Trajectory ref_trajectory = qvm::decode_experiment(
            reference->blocks, reference->frame, reference->dt, options,
            reference->t_offset);
        std::vector<double> fidelities, deviations;
        for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
            fidelities.push_back(
                qvm::fidelity(qvm::fix_global_phase(reference->blocks[i]).state,
                              qvm::fix_global_phase(blocks.blocks[i]).state));
            deviations.push_back(
                qvm::deviation(ref_trajectory.frames[i], trajectory.frames[i]));
        }
        metrics["fidelity"] = fidelities;
        metrics["deviation"] = deviations;
        metrics["min_fidelity"] = *std::min_element(fidelities.begin(), fidelities.end());
        metrics["max_deviation"] = *std::max_element(deviations.begin(), deviations.end());
    }
    metrics["n_blocks"] = blocks.blocks.size();
    metrics["sampling_proportion"] = run.sampling_proportion;
    save_json(out_path(run, "metrics.json"), metrics);

    std::string times_raw = extra.get_string("field_times", "");
    if (times_raw.empty() && run.preset == "leapfrog") times_raw = "24 44 62 81";
    if (!times_raw.empty()) {
        std::istringstream in(times_raw);
        double t;
        while (in >> t) {
            // Nearest decoded frame.
            std::size_t best = 0;
            for (std::size_t i = 1; i < trajectory.size(); ++i) {
                if (std::abs(trajectory.times[i] - t) <
                    std::abs(trajectory.times[best] - t)) {
                    best = i;
                }
            }
            std::ostringstream stem;
            stem << "field_t" << trajectory.times[best];
            export_field(trajectory.frames[best], extra, out_path(run, stem.str()));
        }
    }
    std::cout << "wrote " << out_path(run, "reconstructed.csv") << " and metrics.json\n";
    return kExitOk;
}

int cmd_field(const GlobalOptions& global, const std::string& traj_path, double time) {
    const qvm::RunConfig run = load_run(global);
    const qvm::Config extra = global.config_path.empty()
                                  ? qvm::Config()
                                  : qvm::Config::parse_file(global.config_path);
    const qvm::Trajectory trajectory = qvm::read_trajectory_csv(
        traj_path.empty() ? out_path(run, "truth.csv") : traj_path);
    std::size_t best = 0;
    for (std::size_t i = 1; i < trajectory.size(); ++i) {
        if (std::abs(trajectory.times[i] - time) < std::abs(trajectory.times[best] - time)) {
            best = i;
        }
    }
    export_field(trajectory.frames[best], extra, out_path(run, "field"));
    std::cout << "wrote " << out_path(run, "field.csv") << " (frame t = "
              << trajectory.times[best] << ")\n";
    return kExitOk;
}

int cmd_sweep_sp(const GlobalOptions& global) {
    const qvm::RunConfig run = load_run(global);
    const qvm::Config extra = global.config_path.empty()
                                  ? qvm::Config()
                                  : qvm::Config::parse_file(global.config_path);
    // The approximation error is judged over a horizon long enough for the
    // vortices to travel ~24 displacement units, well past the training range.
    const double t_max = extra.get_double("sweep_t_max", 93.0);
    const double dt_fine = extra.get_double("sweep_dt_ode", 0.005);
    // c(t) is sampled from the full measured grid, not the coarse training one.
    const double frame_dt = extra.get_double("sweep_frame_dt", 0.01);
    const auto stride = static_cast<std::size_t>(std::llround(frame_dt / dt_fine));
    if (stride == 0 || std::abs(stride * dt_fine - frame_dt) > 1e-9) {
        throw qvm::ConfigError("sweep-sp: sweep_frame_dt must be a multiple of sweep_dt_ode");
    }
    const auto n_steps = static_cast<std::size_t>(std::ceil(t_max / dt_fine));

    const auto [psi0, frame0] = qvm::encode(run.initial, run.c0);
    const std::vector<qvm::WaveState> dense =
        qvm::evolve_wavestate(psi0, frame0, dt_fine, n_steps);
    std::vector<qvm::WaveState> frames;
    for (std::size_t i = 0; i < dense.size(); i += stride) frames.push_back(dense[i]);

    qvm::DecodeOptions exact;
    exact.exact_integration = true;
    const qvm::Trajectory reference = qvm::decode(frames, frame0, frame_dt, exact, 0.0);

    // Total arc length traveled (max over vortices) normalizes the error.
    double arc = 0.0;
    for (std::size_t j = 0; j < reference.frames.front().count(); ++j) {
        double len = 0.0;
        for (std::size_t i = 1; i < reference.size(); ++i) {
            len += std::abs(reference.frames[i].positions[j] -
                            reference.frames[i - 1].positions[j]);
        }
        arc = std::max(arc, len);
    }

    std::vector<double> sps = {0.1, 0.4, 0.7, 1.0};
    if (extra.has("sp_list")) {
        sps.clear();
        std::istringstream in(extra.require_string("sp_list"));
        double sp;
        while (in >> sp) sps.push_back(sp);
    }
    const long n_seeds = extra.get_int("sweep_seeds", 20);

    json rows = json::array();
    for (double sp : sps) {
        for (long s = 0; s < n_seeds; ++s) {
            qvm::DecodeOptions options;
            options.sampling_proportion = sp;
            options.seed = run.seed + static_cast<std::uint64_t>(s);
            const qvm::Trajectory approx =
                qvm::decode(frames, frame0, frame_dt, options, 0.0);
            double max_error = 0.0;
            for (std::size_t i = 0; i < approx.size(); ++i) {
                for (std::size_t j = 0; j < approx.frames[i].count(); ++j) {
                    max_error = std::max(max_error,
                                         std::abs(approx.frames[i].positions[j] -
                                                  reference.frames[i].positions[j]));
                }
            }
            rows.push_back({{"sp", sp},
                            {"seed", options.seed},
                            {"max_error", max_error},
                            {"relative_error", max_error / arc}});
        }
    }
    json out;
    out["arc_length"] = arc;
    out["n_frames"] = frames.size();
    out["rows"] = std::move(rows);
    save_json(out_path(run, "sweep_sp.json"), out);
    std::cout << "wrote " << out_path(run, "sweep_sp.json") << " (arc length " << arc
              << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum vortex method pipeline"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--config", global.config_path, "run configuration file");
    app.add_option("--seed", global.seed, "override the configured seed");
    app.add_option("--out", global.out_dir, "output directory");
    app.add_flag("--noisy", global.noisy, "simulate through the noise + tomography path");

    app.add_subcommand("gen-truth", "integrate (or import) the ground-truth trajectory");
    app.add_subcommand("encode", "encode the truth into wave states");
    app.add_subcommand("train-ham", "fit the effective Hamiltonian");
    app.add_subcommand("train-vqa", "train the variational circuit");

    std::string model_path;
    auto* simulate = app.add_subcommand("simulate", "run the spacetime circuit");
    simulate->add_option("--model", model_path, "model file (default <out>/model.json)");

    std::string blocks_path, reference_path;
    auto* reconstruct = app.add_subcommand("reconstruct", "decode blocks into a trajectory");
    reconstruct->add_option("--blocks", blocks_path, "blocks file (default <out>/blocks.json)");
    reconstruct->add_option("--reference", reference_path,
                            "reference blocks file for fidelity/deviation metrics");

    std::string traj_path;
    double field_time = 0.0;
    auto* field = app.add_subcommand("field", "export a velocity field for one frame");
    field->add_option("--traj", traj_path, "trajectory CSV (default <out>/truth.csv)");
    field->add_option("--time", field_time, "frame time to render")->required();

    app.add_subcommand("sweep-sp", "sampling-proportion error sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (app.got_subcommand("gen-truth")) return cmd_gen_truth(global);
        if (app.got_subcommand("encode")) return cmd_encode(global);
        if (app.got_subcommand("train-ham")) return cmd_train_ham(global);
        if (app.got_subcommand("train-vqa")) return cmd_train_vqa(global);
        if (app.got_subcommand("simulate")) return cmd_simulate(global, model_path);
        if (app.got_subcommand("reconstruct")) {
            return cmd_reconstruct(global, blocks_path, reference_path);
        }
        if (app.got_subcommand("field")) return cmd_field(global, traj_path, field_time);
        if (app.got_subcommand("sweep-sp")) return cmd_sweep_sp(global);
    } catch (const qvm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qvm::SingularityError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::NormDriftError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::DenominatorError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::NonConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::NonUnitaryError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::BlockWeightError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::DegenerateSpectrumError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::ZeroProbabilityError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qvm::Error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}
