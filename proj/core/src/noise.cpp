// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/noise.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qvm {

namespace {
const Complex kI{0.0, 1.0};

using PauliString = std::vector<std::pair<PauliAxis, int>>;

// P|i> = alpha(i) |i ^ x_mask>.
struct PauliAction {
    std::uint64_t x_mask = 0;
    PauliString string;

    explicit PauliAction(const PauliString& s) : string(s) {
        for (const auto& [axis, q] : s) {
            if (axis != PauliAxis::Z) x_mask |= std::uint64_t{1} << q;
        }
    }

    Complex coeff(std::uint64_t i) const {
        Complex a{1.0, 0.0};
        for (const auto& [axis, q] : string) {
            const bool bit = i & (std::uint64_t{1} << q);
            switch (axis) {
                case PauliAxis::X: break;
                case PauliAxis::Y: a *= bit ? -kI : kI; break;
                case PauliAxis::Z:
                    if (bit) a = -a;
                    break;
            }
        }
        return a;
    }
};

Eigen::MatrixXcd full_unitary(const GateOp& op, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd u(dim, dim);
    StateVector basis;
    basis.n_qubits = n_qubits;
    for (Eigen::Index col = 0; col < dim; ++col) {
        basis.amplitudes = Eigen::VectorXcd::Zero(dim);
        basis.amplitudes[col] = 1.0;
        u.col(col) = apply(basis, op).amplitudes;
    }
    return u;
}

// Single-qubit Kraus channel, O(4^n) per operator.
Eigen::MatrixXcd apply_kraus_1q(const Eigen::MatrixXcd& rho, int qubit,
                                const std::vector<Eigen::Matrix2cd>& kraus) {
    const Eigen::Index dim = rho.rows();
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& k : kraus) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const int bi = (static_cast<std::uint64_t>(i) & mask) ? 1 : 0;
            for (Eigen::Index j = 0; j < dim; ++j) {
                const int bj = (static_cast<std::uint64_t>(j) & mask) ? 1 : 0;
                Complex acc{0.0, 0.0};
                for (int a = 0; a < 2; ++a) {
                    if (k(bi, a) == Complex{0.0, 0.0}) continue;
                    const Eigen::Index ia =
                        static_cast<Eigen::Index>((static_cast<std::uint64_t>(i) & ~mask) |
                                                  (a ? mask : 0));
                    for (int b = 0; b < 2; ++b) {
                        if (k(bj, b) == Complex{0.0, 0.0}) continue;
                        const Eigen::Index jb =
                            static_cast<Eigen::Index>((static_cast<std::uint64_t>(j) & ~mask) |
                                                      (b ? mask : 0));
                        acc += k(bi, a) * std::conj(k(bj, b)) * rho(ia, jb);
                    }
                }
                out(i, j) += acc;
            }
        }
    }
    return out;
}

std::vector<Eigen::Matrix2cd> damping_kraus(double gamma_amp, double lambda_phase) {
    // Amplitude damping composed with pure dephasing.
    Eigen::Matrix2cd a0, a1, p0, p1;
    a0 << 1, 0, 0, std::sqrt(1.0 - gamma_amp);
    a1 << 0, std::sqrt(gamma_amp), 0, 0;
    p0 << 1, 0, 0, std::sqrt(1.0 - lambda_phase);
    p1 << 0, 0, 0, std::sqrt(lambda_phase);
    return {p0 * a0, p0 * a1, p1 * a0, p1 * a1};
}

const Eigen::Matrix2cd& single_pauli(PauliAxis axis) {
    static const Eigen::Matrix2cd x = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    static const Eigen::Matrix2cd y = (Eigen::Matrix2cd() << 0, -kI, kI, 0).finished();
    static const Eigen::Matrix2cd z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    switch (axis) {
        case PauliAxis::X: return x;
        case PauliAxis::Y: return y;
        default: return z;
    }
}
}  // namespace

DensityMatrix DensityMatrix::pure(const StateVector& state) {
    DensityMatrix rho;
    rho.n_qubits = state.n_qubits;
    rho.matrix = state.amplitudes * state.amplitudes.adjoint();
    return rho;
}

DensityMatrix DensityMatrix::from_wavestate(const WaveState& state) {
    const Eigen::VectorXcd padded = pad_to_power_of_two(state.amplitudes);
    DensityMatrix rho;
    rho.n_qubits = 0;
    for (Eigen::Index d = padded.size(); d > 1; d >>= 1) ++rho.n_qubits;
    rho.matrix = padded * padded.adjoint();
    return rho;
}

void DensityMatrix::validate() const {
    if (matrix.rows() != matrix.cols() || matrix.rows() != (Eigen::Index{1} << n_qubits)) {
        throw DimensionError("DensityMatrix: dimension mismatch");
    }
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw Error("DensityMatrix: not Hermitian");
    }
    if (std::abs(matrix.trace().real() - 1.0) > 1e-9 || std::abs(matrix.trace().imag()) > 1e-9) {
        throw Error("DensityMatrix: trace != 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw Error("DensityMatrix: negative eigenvalue");
    }
}

void NoiseModel::validate(int n_qubits) const {
    if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0) {
        throw ConfigError("NoiseModel: depolarizing rates must be in [0, 1]");
    }
    if (has_readout_error()) {
        if (f0.size() != static_cast<std::size_t>(n_qubits) || f1.size() != f0.size()) {
            throw ConfigError("NoiseModel: readout fidelity count != qubit count");
        }
        for (std::size_t q = 0; q < f0.size(); ++q) {
            if (f0[q] <= 0.5 || f0[q] > 1.0 || f1[q] <= 0.5 || f1[q] > 1.0) {
                throw ConfigError("NoiseModel: readout fidelities must be in (0.5, 1]");
            }
        }
    }
    if (has_decoherence() &&
        (t1_us.size() != static_cast<std::size_t>(n_qubits) || t2_us.size() != t1_us.size())) {
        throw ConfigError("NoiseModel: T1/T2 count != qubit count");
    }
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const GateOp& op) {
    const Eigen::MatrixXcd u = full_unitary(op, rho.n_qubits);
    DensityMatrix out;
    out.n_qubits = rho.n_qubits;
    out.matrix = u * rho.matrix * u.adjoint();
    return out;
}

DensityMatrix pauli_conjugate(const DensityMatrix& rho, const PauliString& string) {
    const PauliAction p(string);
    const Eigen::Index dim = rho.matrix.rows();
    DensityMatrix out;
    out.n_qubits = rho.n_qubits;
    out.matrix.resize(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Complex ai = p.coeff(static_cast<std::uint64_t>(i));
        const Eigen::Index pi = static_cast<Eigen::Index>(static_cast<std::uint64_t>(i) ^ p.x_mask);
        for (Eigen::Index j = 0; j < dim; ++j) {
            const Complex aj = p.coeff(static_cast<std::uint64_t>(j));
            const Eigen::Index pj =
                static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ p.x_mask);
            out.matrix(pi, pj) = ai * std::conj(aj) * rho.matrix(i, j);
        }
    }
    return out;
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, int n_qubits,
                               const std::vector<int>& discard) {
    std::uint64_t d_mask = 0;
    for (int q : discard) d_mask |= std::uint64_t{1} << q;
    const int n_keep = n_qubits - static_cast<int>(discard.size());
    const Eigen::Index out_dim = Eigen::Index{1} << n_keep;

    // keep_bits[b] = position of the b-th kept qubit.
    std::vector<int> keep_bits;
    for (int q = 0; q < n_qubits; ++q) {
        if (!(d_mask & (std::uint64_t{1} << q))) keep_bits.push_back(q);
    }
    auto expand = [&](std::uint64_t compact) {
        std::uint64_t full = 0;
        for (std::size_t b = 0; b < keep_bits.size(); ++b) {
            if (compact & (std::uint64_t{1} << b)) full |= std::uint64_t{1} << keep_bits[b];
        }
        return full;
    };

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
    const std::uint64_t n_traced = std::uint64_t{1} << discard.size();
    std::vector<std::uint64_t> traced_patterns(n_traced);
    {
        std::vector<int> d_bits(discard.begin(), discard.end());
        for (std::uint64_t t = 0; t < n_traced; ++t) {
            std::uint64_t pat = 0;
            for (std::size_t b = 0; b < d_bits.size(); ++b) {
                if (t & (std::uint64_t{1} << b)) pat |= std::uint64_t{1} << d_bits[b];
            }
            traced_patterns[t] = pat;
        }
    }
    for (Eigen::Index i = 0; i < out_dim; ++i) {
        const std::uint64_t fi = expand(static_cast<std::uint64_t>(i));
        for (Eigen::Index j = 0; j < out_dim; ++j) {
            const std::uint64_t fj = expand(static_cast<std::uint64_t>(j));
            Complex acc{0.0, 0.0};
            for (std::uint64_t pat : traced_patterns) {
                acc += rho(static_cast<Eigen::Index>(fi | pat),
                           static_cast<Eigen::Index>(fj | pat));
            }
            out(i, j) = acc;
        }
    }
    return out;
}

DensityMatrix depolarize(const DensityMatrix& rho, const std::vector<int>& support, double p) {
    if (p == 0.0 || support.empty()) return rho;
    const Eigen::MatrixXcd reduced = partial_trace(rho.matrix, rho.n_qubits, support);

    std::uint64_t s_mask = 0;
    for (int q : support) s_mask |= std::uint64_t{1} << q;
    std::vector<int> keep_bits;
    for (int q = 0; q < rho.n_qubits; ++q) {
        if (!(s_mask & (std::uint64_t{1} << q))) keep_bits.push_back(q);
    }
    auto compact = [&](std::uint64_t full) {
        std::uint64_t c = 0;
        for (std::size_t b = 0; b < keep_bits.size(); ++b) {
            if (full & (std::uint64_t{1} << keep_bits[b])) c |= std::uint64_t{1} << b;
        }
        return c;
    };

    const double mix = p / static_cast<double>(std::uint64_t{1} << support.size());
    DensityMatrix out;
    out.n_qubits = rho.n_qubits;
    out.matrix = (1.0 - p) * rho.matrix;
    const Eigen::Index dim = rho.matrix.rows();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const std::uint64_t fi = static_cast<std::uint64_t>(i);
        for (Eigen::Index j = 0; j < dim; ++j) {
            const std::uint64_t fj = static_cast<std::uint64_t>(j);
            // Identity on the support: diagonal in the support bits.
            if ((fi & s_mask) != (fj & s_mask)) continue;
            out.matrix(i, j) += mix * reduced(static_cast<Eigen::Index>(compact(fi)),
                                              static_cast<Eigen::Index>(compact(fj)));
        }
    }
    return out;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const GateOp& op,
                            const NoiseModel& model) {
    if (rho.n_qubits > kMaxDensityQubits) {
        throw DimensionError("density-matrix simulation capped at 10 qubits");
    }
    DensityMatrix out = apply_unitary(rho, op);

    std::vector<int> support = op.targets;
    support.insert(support.end(), op.controls.begin(), op.controls.end());
    std::sort(support.begin(), support.end());

    if (op.kind == GateOp::Kind::Cz && model.cz_phase_error != 0.0) {
        Eigen::Matrix4cd err = Eigen::Matrix4cd::Identity();
        err(3, 3) = std::exp(kI * model.cz_phase_error);
        out = apply_unitary(out, GateOp::dense(err, op.targets));
    }

    const double p = support.size() == 1 ? model.p1 : model.p2;
    out = depolarize(out, support, p);

    if (model.has_decoherence()) {
        const double gate_s =
            (support.size() == 1 ? model.gate_ns_1q : model.gate_ns_2q) * 1e-9;
        for (int q : support) {
            const double t1 = model.t1_us[static_cast<std::size_t>(q)] * 1e-6;
            const double t2 = model.t2_us[static_cast<std::size_t>(q)] * 1e-6;
            const double gamma = 1.0 - std::exp(-gate_s / t1);
            // Pure dephasing on top of the T1 contribution to T2.
            const double rate_phi = std::max(0.0, 1.0 / t2 - 0.5 / t1);
            const double lambda = 1.0 - std::exp(-2.0 * gate_s * rate_phi);
            out.matrix = apply_kraus_1q(out.matrix, q, damping_kraus(gamma, lambda));
        }
    }
    return out;
}

DensityMatrix run_noisy_circuit(const std::vector<GateOp>& circuit, int n_qubits,
                                const NoiseModel& model) {
    model.validate(n_qubits);
    DensityMatrix rho = DensityMatrix::pure(StateVector::zero(n_qubits));
    for (const auto& op : circuit) rho = apply_channel(rho, op, model);
    return rho;
}

std::pair<WaveState, double> top_eigenvector(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix);
    if (es.info() != Eigen::Success) throw Error("top_eigenvector: eigensolver failed");
    const Eigen::Index last = es.eigenvalues().size() - 1;
    const double top = es.eigenvalues()[last];
    if (last > 0 && top - es.eigenvalues()[last - 1] < 1e-9) {
        throw DegenerateSpectrumError("top_eigenvector: degenerate dominant eigenvalue");
    }
    return {WaveState{es.eigenvectors().col(last)}, top};
}

DensityMatrix tomography(const DensityMatrix& rho, const TomographyOptions& options) {
    const int n = rho.n_qubits;
    const Eigen::Index dim = rho.matrix.rows();
    const std::uint64_t n_strings = std::uint64_t{1} << (2 * n);

    if (options.readout != nullptr) options.readout->validate(n);

    Eigen::MatrixXcd estimate = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t code = 0; code < n_strings; ++code) {
        // Base-4 digit per qubit: 0=I, 1=X, 2=Y, 3=Z.
        PauliString string;
        for (int q = 0; q < n; ++q) {
            const int digit = static_cast<int>((code >> (2 * q)) & 3);
            if (digit == 1) string.emplace_back(PauliAxis::X, q);
            if (digit == 2) string.emplace_back(PauliAxis::Y, q);
            if (digit == 3) string.emplace_back(PauliAxis::Z, q);
        }

        double expectation = 1.0;
        if (!string.empty()) {
            // Rotate into the measurement basis and read the diagonal.
            Eigen::MatrixXcd rotated = rho.matrix;
            for (const auto& [axis, q] : string) {
                Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
                if (axis == PauliAxis::X) {
                    u << 1, 1, 1, -1;
                    u /= std::numbers::sqrt2;
                } else if (axis == PauliAxis::Y) {
                    u << 1, -kI, 1, kI;
                    u /= std::numbers::sqrt2;
                }
                if (axis != PauliAxis::Z) {
                    const Eigen::MatrixXcd uf =
                        full_unitary(GateOp::dense(u, {q}), n);
                    rotated = uf * rotated * uf.adjoint();
                }
            }
            Eigen::VectorXd probs = rotated.diagonal().real().cwiseMax(0.0);
            probs /= probs.sum();

            if (options.readout != nullptr && options.readout->has_readout_error()) {
                Eigen::VectorXd confused = Eigen::VectorXd::Zero(dim);
                for (Eigen::Index o = 0; o < dim; ++o) {
                    for (Eigen::Index s = 0; s < dim; ++s) {
                        double w = 1.0;
                        for (const auto& [axis, q] : string) {
                            const bool ob = o & (Eigen::Index{1} << q);
                            const bool sb = s & (Eigen::Index{1} << q);
                            const double fq0 = options.readout->f0[static_cast<std::size_t>(q)];
                            const double fq1 = options.readout->f1[static_cast<std::size_t>(q)];
                            w *= sb ? (ob ? fq1 : 1.0 - fq1) : (ob ? 1.0 - fq0 : fq0);
                            if (w == 0.0) break;
                        }
                        // Qubits outside the string marginalize out; require
                        // identical bits there to keep the sum a distribution.
                        bool same_rest = true;
                        for (int q = 0; q < n && same_rest; ++q) {
                            bool in_string = false;
                            for (const auto& [axis2, q2] : string) {
                                if (q2 == q) in_string = true;
                            }
                            if (!in_string &&
                                ((o >> q) & 1) != ((s >> q) & 1)) {
                                same_rest = false;
                            }
                        }
                        if (same_rest) confused[o] += w * probs[s];
                    }
                }
                probs = confused;
            }

            if (options.shots_per_basis > 0) {
                std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * (code + 1));
                std::discrete_distribution<std::size_t> dist(probs.data(),
                                                             probs.data() + probs.size());
                Eigen::VectorXd counts = Eigen::VectorXd::Zero(dim);
                for (long s = 0; s < options.shots_per_basis; ++s) counts[static_cast<Eigen::Index>(dist(rng))] += 1.0;
                probs = counts / static_cast<double>(options.shots_per_basis);
            }

            expectation = 0.0;
            for (Eigen::Index o = 0; o < dim; ++o) {
                int parity = 0;
                for (const auto& [axis, q] : string) {
                    if (o & (Eigen::Index{1} << q)) parity ^= 1;
                }
                expectation += (parity ? -1.0 : 1.0) * probs[o];
            }
        }

        // Accumulate expectation * P / 2^n.
        const PauliAction action(string);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const Eigen::Index pi =
                static_cast<Eigen::Index>(static_cast<std::uint64_t>(i) ^ action.x_mask);
            estimate(pi, i) += expectation * action.coeff(static_cast<std::uint64_t>(i)) /
                               static_cast<double>(dim);
        }
    }

    // Nearest PSD trace-1 matrix: clip negative eigenvalues, renormalize.
    Eigen::MatrixXcd herm = 0.5 * (estimate + estimate.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0);
    const double total = vals.sum();
    if (total <= 0.0) {
        vals.setConstant(1.0 / static_cast<double>(dim));
    } else {
        vals /= total;
    }
    DensityMatrix out;
    out.n_qubits = n;
    out.matrix = es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
    return out;
}

std::pair<DensityMatrix, double> postselect_temporal(const DensityMatrix& rho, int n_p,
                                                     int n_t, std::size_t temporal_index) {
    if (temporal_index >= (std::size_t{1} << n_t)) {
        throw IndexError("postselect_temporal: index out of range");
    }
    const Eigen::Index block = Eigen::Index{1} << n_p;
    const Eigen::Index off = static_cast<Eigen::Index>(temporal_index) * block;
    Eigen::MatrixXcd sub = rho.matrix.block(off, off, block, block);
    const double prob = sub.trace().real();
    if (prob < 1e-12) throw ZeroProbabilityError("postselect_temporal: branch weight ~ 0");
    DensityMatrix out;
    out.n_qubits = n_p;
    out.matrix = sub / prob;
    return {out, prob};
}

std::pair<DensityMatrix, double> postselect_temporal(const StateVector& state, int n_p,
                                                     int n_t, std::size_t temporal_index) {
    if (temporal_index >= (std::size_t{1} << n_t)) {
        throw IndexError("postselect_temporal: index out of range");
    }
    const Eigen::Index block = Eigen::Index{1} << n_p;
    const Eigen::VectorXcd raw =
        state.amplitudes.segment(static_cast<Eigen::Index>(temporal_index) * block, block);
    const double prob = raw.squaredNorm();
    if (prob < 1e-12) throw ZeroProbabilityError("postselect_temporal: branch weight ~ 0");
    const Eigen::VectorXcd normalized = raw / std::sqrt(prob);
    DensityMatrix out;
    out.n_qubits = n_p;
    out.matrix = normalized * normalized.adjoint();
    return {out, prob};
}

std::vector<std::vector<GateOp>> pauli_twirl_variants(const std::vector<GateOp>& circuit,
                                                      int n_variants, std::uint64_t seed) {
    bool has_cz = false;
    for (const auto& op : circuit) {
        if (op.kind == GateOp::Kind::Cz && op.controls.empty()) has_cz = true;
    }
    if (!has_cz) throw NoTwirlableGateError("pauli_twirl_variants: no CZ gate in circuit");

    static const PauliAxis axes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
    Eigen::Matrix4cd cz = Eigen::Matrix4cd::Identity();
    cz(3, 3) = -1.0;

    auto pauli_1q = [&](int idx) -> Eigen::Matrix2cd {
        if (idx == 0) return Eigen::Matrix2cd::Identity();
        return single_pauli(axes[idx - 1]);
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 15);

    std::vector<std::vector<GateOp>> variants;
    variants.reserve(static_cast<std::size_t>(n_variants));
    for (int v = 0; v < n_variants; ++v) {
        std::vector<GateOp> variant;
        for (const auto& op : circuit) {
            if (op.kind != GateOp::Kind::Cz || !op.controls.empty()) {
                variant.push_back(op);
                continue;
            }
            const int draw = dist(rng);
            const int a = draw & 3, b = (draw >> 2) & 3;
            const int q0 = op.targets[0], q1 = op.targets[1];

            if (a != 0) variant.push_back(GateOp::pauli(axes[a - 1], q0));
            if (b != 0) variant.push_back(GateOp::pauli(axes[b - 1], q1));
            variant.push_back(op);

            // Compensation: Q = CZ (Pa (x) Pb) CZ is again a Pauli pair (up to
            // a global phase we can ignore); find it by matching.
            // Kronecker order: q0 is the low bit of the 2-qubit sub-index.
            const Eigen::Matrix4cd p =
                Eigen::kroneckerProduct(pauli_1q(b), pauli_1q(a));
            const Eigen::Matrix4cd q = cz * p * cz;
            bool found = false;
            for (int ca = 0; ca < 4 && !found; ++ca) {
                for (int cb = 0; cb < 4 && !found; ++cb) {
                    const Eigen::Matrix4cd cand =
                        Eigen::kroneckerProduct(pauli_1q(cb), pauli_1q(ca));
                    // q == phase * cand?
                    Complex phase{0.0, 0.0};
                    bool match = true;
                    for (int i = 0; i < 4 && match; ++i) {
                        for (int j = 0; j < 4 && match; ++j) {
                            if (std::abs(cand(i, j)) < 1e-12) {
                                if (std::abs(q(i, j)) > 1e-12) match = false;
                            } else {
                                const Complex r = q(i, j) / cand(i, j);
                                if (phase == Complex{0.0, 0.0}) {
                                    phase = r;
                                } else if (std::abs(r - phase) > 1e-10) {
                                    match = false;
                                }
                            }
                        }
                    }
                    if (match) {
                        if (ca != 0) variant.push_back(GateOp::pauli(axes[ca - 1], q0));
                        if (cb != 0) variant.push_back(GateOp::pauli(axes[cb - 1], q1));
                        found = true;
                    }
                }
            }
            if (!found) throw Error("pauli_twirl_variants: no Pauli compensation found");
        }
        variants.push_back(std::move(variant));
    }
    return variants;
}

}  // namespace qvm
