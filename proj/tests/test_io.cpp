// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "qvm/io.hpp"

using namespace qvm;

namespace {
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qvm_io_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

Trajectory sample_trajectory() {
    Trajectory t;
    t.times = {0.0, 0.25};
    t.frames.push_back({{{0.1234567890123456, -1.0}, {2.0, 0.3}}, {1.0, -0.5}});
    t.frames.push_back({{{0.2, -0.9}, {1.9, 0.31}}, {1.0, -0.5}});
    return t;
}

Eigen::VectorXcd random_amplitudes(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = {dist(rng), dist(rng)};
    v.normalize();
    return v;
}
}  // namespace

TEST_CASE("format_double round-trips doubles exactly") {
    for (double v : {1.0 / 3.0, 0.1234567890123456789, -1e-17, 6.02214076e23, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("trajectory CSV round-trip preserves every bit") {
    TempDir dir;
    const Trajectory t = sample_trajectory();
    const std::string path = dir.file("traj.csv");
    write_trajectory_csv(path, t);

    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,j,x,y,gamma");

    const Trajectory back = read_trajectory_csv(path);
    REQUIRE(back.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(back.times[i] == t.times[i]);
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(back.frames[i].positions[j] == t.frames[i].positions[j]);
            CHECK(back.frames[i].strengths[j] == t.frames[i].strengths[j]);
        }
    }
}

TEST_CASE("trajectory CSV rejects malformed input") {
    TempDir dir;
    {
        std::ofstream out(dir.file("bad_header.csv"));
        out << "time,vortex,x,y,gamma\n0,0,1,2,3\n";
    }
    CHECK_THROWS_AS(read_trajectory_csv(dir.file("bad_header.csv")), Error);
    {
        std::ofstream out(dir.file("ragged.csv"));
        out << "t,j,x,y,gamma\n0,0,1,2,3\n0,1,1,2,3\n1,0,1,2,3\n";
    }
    CHECK_THROWS_AS(read_trajectory_csv(dir.file("ragged.csv")), Error);
    CHECK_THROWS_AS(read_trajectory_csv(dir.file("missing.csv")), Error);
}

TEST_CASE("encoded state JSON round-trip") {
    TempDir dir;
    WaveState state{random_amplitudes(4, 1)};
    EncodingFrame frame{0.2581928919984328, {-1.7903, 0.0}, {0.01, -0.02},
                       {1.0, 1.0, -1.0, -1.0}};
    const std::string path = dir.file("state.json");
    write_encoded_state(path, state, frame, 0.18, 42);
    double dt = 0.0;
    std::uint64_t seed = 0;
    auto [back_state, back_frame] = read_encoded_state(path, &dt, &seed);
    CHECK(dt == 0.18);
    CHECK(seed == 42);
    CHECK(back_frame.lambda == frame.lambda);
    CHECK(back_frame.c0 == frame.c0);
    CHECK(back_frame.c_integral == frame.c_integral);
    CHECK(back_frame.strengths == frame.strengths);
    CHECK(back_state.amplitudes == state.amplitudes);
}

TEST_CASE("blocks JSON round-trip") {
    TempDir dir;
    std::vector<WaveState> blocks;
    for (std::uint64_t i = 0; i < 5; ++i) blocks.push_back({random_amplitudes(4, 10 + i)});
    EncodingFrame frame{0.25, {-1.7903, 0.0}, {0.0, 0.0}, {1.0, 1.0, -1.0, -1.0}};
    const std::string path = dir.file("blocks.json");
    write_blocks_json(path, blocks, frame, 1.0, 18.0, 5);
    const BlocksFile back = read_blocks_json(path);
    CHECK(back.dt == 1.0);
    CHECK(back.t_offset == 18.0);
    CHECK(back.seed == 5);
    REQUIRE(back.blocks.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(back.blocks[i].amplitudes == blocks[i].amplitudes);
    }
}

TEST_CASE("hamiltonian JSON round-trip") {
    TempDir dir;
    EffectiveHamiltonian h;
    Eigen::MatrixXcd m(2, 2);
    m << Complex{0.2, 0.0}, Complex{0.7, -0.1}, Complex{0.7, 0.1}, Complex{-0.4, 0.0};
    h.matrix = m;
    h.dt_train = 0.18;
    h.dt_predict = 1.0;
    h.loss = 3.14e-4;
    h.iterations = 123;
    const std::string path = dir.file("h.json");
    write_hamiltonian_json(path, h);
    const EffectiveHamiltonian back = read_hamiltonian_json(path);
    CHECK(back.matrix == h.matrix);
    CHECK(back.dt_train == h.dt_train);
    CHECK(back.dt_predict == h.dt_predict);
    CHECK(back.loss == h.loss);
    CHECK(back.iterations == h.iterations);
}

TEST_CASE("statevector and density JSON round-trips") {
    TempDir dir;
    StateVector s{random_amplitudes(8, 2), 3};
    write_statevector_json(dir.file("sv.json"), s);
    const StateVector back = read_statevector_json(dir.file("sv.json"));
    CHECK(back.n_qubits == 3);
    CHECK(back.amplitudes == s.amplitudes);

    DensityMatrix rho{s.amplitudes * s.amplitudes.adjoint(), 3};
    write_density_json(dir.file("rho.json"), rho);
    const DensityMatrix back_rho = read_density_json(dir.file("rho.json"));
    CHECK(back_rho.n_qubits == 3);
    CHECK(back_rho.matrix == rho.matrix);
}

TEST_CASE("field CSV omits masked nodes") {
    TempDir dir;
    FieldGrid grid;
    grid.x_min = 0.0;
    grid.x_max = 1.0;
    grid.y_min = 0.0;
    grid.y_max = 1.0;
    grid.nx = 2;
    grid.ny = 2;
    grid.velocities = {{1.0, 2.0}, {0.0, 0.0}, {3.0, 4.0}, {5.0, 6.0}};
    grid.masked = {false, true, false, false};
    write_field_csv(dir.file("field.csv"), grid);
    std::ifstream in(dir.file("field.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,y,ux,uy");
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("config parsing: sections, comments, quotes, types") {
    const Config config = Config::parse_string(
        "# top comment\n"
        "seed = 7\n"
        "name = \"leap frog\"\n"
        "\n"
        "[preset]\n"
        "name = leapfrog  # trailing comment\n"
        "dt = 0.18\n"
        "noisy = true\n");
    CHECK(config.require_int("seed") == 7);
    CHECK(config.require_string("name") == "leap frog");
    CHECK(config.require_string("preset.name") == "leapfrog");
    CHECK(config.require_double("preset.dt") == 0.18);
    CHECK(config.get_bool("preset.noisy", false));
    CHECK(config.get_double("preset.missing", 2.5) == 2.5);
    CHECK_THROWS_AS(config.require_double("preset.name"), ConfigError);
    CHECK_THROWS_AS(config.require_string("absent"), ConfigError);
}

TEST_CASE("config dump round-trips through the parser") {
    const Config config = Config::parse_string(
        "a = 1\n[s]\nb = two\nc = 3.5\n[t]\nd = -4\n");
    const Config back = Config::parse_string(config.dump());
    CHECK(back.values() == config.values());
}

TEST_CASE("noise model parsing with indexed keys") {
    const Config config = Config::parse_string(
        "[noise]\n"
        "p1 = 0.0006\n"
        "p2 = 0.0032\n"
        "f0[0] = 0.98\n"
        "f0[1] = 0.97\n"
        "f1[0] = 0.95\n"
        "f1[1] = 0.94\n"
        "cz_phase_error = 0.01\n");
    Config flat;
    for (const auto& [k, v] : config.values()) {
        flat.set(k.substr(std::string("noise.").size()), v);
    }
    const NoiseModel model = parse_noise_model(flat);
    CHECK(model.p1 == 0.0006);
    CHECK(model.p2 == 0.0032);
    REQUIRE(model.f0.size() == 2);
    CHECK(model.f0[1] == 0.97);
    CHECK(model.f1[0] == 0.95);
    CHECK(model.cz_phase_error == 0.01);
    CHECK(!model.has_decoherence());

    Config gap;
    gap.set("f0[0]", "0.98");
    gap.set("f0[2]", "0.97");
    gap.set("f1[0]", "0.95");
    CHECK_THROWS_AS(parse_noise_model(gap), ConfigError);
}

TEST_CASE("training log JSON is written and well-formed") {
    TempDir dir;
    VqaResult result;
    result.theta = Eigen::VectorXd::LinSpaced(4, 0.0, 0.3);
    result.loss_history = {1.0, 0.5, 0.25};
    result.final_loss = 0.25;
    const Ansatz ansatz{1, 2};
    write_training_log_json(dir.file("log.json"), result, ansatz, 9);
    std::ifstream in(dir.file("log.json"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("loss_history") != std::string::npos);
    CHECK(text.find("ansatz") != std::string::npos);
    CHECK(text.find("seed") != std::string::npos);
}
