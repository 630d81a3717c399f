#include "genoq/baseline.hpp"

#include <cmath>
#include <numbers>

#include "genoq/errors.hpp"
#include "genoq/infomath.hpp"

namespace genoq::baseline {

namespace {

int qubits_for(std::size_t len) {
    int n = 1;
    while ((1ull << n) < len) ++n;
    return n;
}

// Multiplexed RY on qubit s: rotation angle selected by the assignment of
// qubits 0..s-1. angles has 2^s entries indexed by that prefix.
void multiplexed_ry(qsim::Statevector& state, int s,
                    const std::vector<double>& angles) {
    const int n = state.n_qubits();
    auto& amps = state.amps();
    const std::uint64_t block = 1ull << (n - s);    // span of one prefix
    const std::uint64_t half = block >> 1;
    for (std::uint64_t prefix = 0; prefix < angles.size(); ++prefix) {
        const double c = std::cos(angles[prefix] / 2.0);
        const double si = std::sin(angles[prefix] / 2.0);
        const std::uint64_t base = prefix * block;
        for (std::uint64_t r = 0; r < half; ++r) {
            const qsim::cdouble a0 = amps[base + r];
            const qsim::cdouble a1 = amps[base + half + r];
            amps[base + r] = c * a0 - si * a1;
            amps[base + half + r] = si * a0 + c * a1;
        }
    }
}

}  // namespace

qsim::Statevector amplitude_encode(const std::vector<double>& values,
                                   int max_qubits) {
    if (values.empty()) throw validation_error("cannot encode an empty vector");
    double norm_sq = 0.0;
    for (double v : values) {
        if (!std::isfinite(v)) throw validation_error("vector entries must be finite");
        norm_sq += v * v;
    }
    if (norm_sq == 0.0) throw validation_error("cannot encode the zero vector");

    const int n = qubits_for(values.size());
    if (n > max_qubits) {
        throw cap_error("qubit cap exceeded: vector needs " + std::to_string(n) +
                        " qubits");
    }
    const std::uint64_t dim = 1ull << n;
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    std::vector<double> target(dim, 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) target[i] = values[i] * inv_norm;

    // Subtree Euclidean norms, bottom-up; norms[s] has 2^s entries.
    std::vector<std::vector<double>> norms(n + 1);
    norms[n].resize(dim);
    for (std::uint64_t i = 0; i < dim; ++i) norms[n][i] = std::abs(target[i]);
    for (int s = n - 1; s >= 0; --s) {
        norms[s].resize(1ull << s);
        for (std::uint64_t j = 0; j < norms[s].size(); ++j) {
            norms[s][j] = std::hypot(norms[s + 1][2 * j], norms[s + 1][2 * j + 1]);
        }
    }

    qsim::Statevector state = qsim::basis_state(n, 0, max_qubits);
    for (int s = 0; s < n; ++s) {
        std::vector<double> angles(1ull << s);
        for (std::uint64_t j = 0; j < angles.size(); ++j) {
            // Last level carries the signs; inner levels rotate between
            // non-negative subtree norms.
            const double lo = s == n - 1 ? target[2 * j] : norms[s + 1][2 * j];
            const double hi = s == n - 1 ? target[2 * j + 1] : norms[s + 1][2 * j + 1];
            angles[j] = lo == 0.0 && hi == 0.0 ? 0.0 : 2.0 * std::atan2(hi, lo);
        }
        multiplexed_ry(state, s, angles);
    }
    return state;
}

qsim::Statevector amplitude_encode_sequence(const seqio::DnaSequence& seq,
                                            int max_qubits) {
    const info::ProbDist4 p = info::base_distribution(seq);
    std::vector<double> v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = std::sqrt(p[i]);
    return amplitude_encode(v, max_qubits);
}

std::vector<double> feature_map_angles(const seqio::DnaSequence& seq) {
    std::vector<double> angles;
    angles.reserve(seq.size());
    for (char b : seq) {
        const std::string bits = seqio::base_bits(b, "two-bit");
        const int value = (bits[0] - '0') * 2 + (bits[1] - '0');
        angles.push_back(value * std::numbers::pi / 2.0);
    }
    return angles;
}

qsim::Statevector pauli_feature_map(const PauliMapConfig& config, int max_qubits) {
    const int n = config.n_qubits;
    if (n < 1) throw validation_error("feature map needs at least one qubit");
    if (n > max_qubits) throw cap_error("qubit cap exceeded by feature map");
    if (config.k != 1 && config.k != 2) {
        throw validation_error("subset size k must be 1 or 2");
    }
    if (config.reps < 1) throw validation_error("reps must be >= 1");
    if (static_cast<int>(config.angles.size()) != n) {
        throw validation_error("need one angle per qubit");
    }
    for (double x : config.angles) {
        if (!std::isfinite(x)) throw validation_error("angles must be finite");
    }

    // Diagonal of U_phi over basis states: Z_i contributes (1 - 2 bit_i).
    const std::uint64_t dim = 1ull << n;
    std::vector<double> diag_phase(dim, 0.0);
    for (std::uint64_t b = 0; b < dim; ++b) {
        double phase = 0.0;
        for (int i = 0; i < n; ++i) {
            const double zi = (b >> (n - 1 - i)) & 1 ? -1.0 : 1.0;
            phase += config.angles[i] * zi;
            if (config.k == 2) {
                for (int j = i + 1; j < n; ++j) {
                    const double zj = (b >> (n - 1 - j)) & 1 ? -1.0 : 1.0;
                    phase += (std::numbers::pi - config.angles[i]) *
                             (std::numbers::pi - config.angles[j]) * zi * zj;
                }
            }
        }
        diag_phase[b] = phase;
    }

    qsim::Statevector state = qsim::basis_state(n, 0, max_qubits);
    const qsim::Gate h = qsim::Gate::h();
    for (int rep = 0; rep < config.reps; ++rep) {
        for (int q = 0; q < n; ++q) state = qsim::apply_gate(state, h, {q});
        for (std::uint64_t b = 0; b < dim; ++b) {
            state.amps()[b] *= std::polar(1.0, diag_phase[b]);
        }
    }
    return state;
}

qsim::Statevector angle_embed(const seqio::DnaSequence& seq, bool entangle,
                              int max_qubits) {
    const int n = static_cast<int>(seq.size());
    if (n > max_qubits) {
        throw cap_error("qubit cap exceeded: sequence needs " + std::to_string(n) +
                        " qubits");
    }
    qsim::Statevector state = qsim::basis_state(n, 0, max_qubits);
    for (int q = 0; q < n; ++q) {
        const double m = seqio::base_bits(seq[q], "high-bit") == "1" ? 1.0 : 0.0;
        state = qsim::apply_gate(
            state, qsim::Gate::rotation(qsim::Axis::Y, m * std::numbers::pi), {q});
    }
    if (entangle) {
        for (int q = 0; q + 1 < n; ++q) {
            state = qsim::apply_gate(state, qsim::Gate::cnot(), {q, q + 1});
        }
    }
    return state;
}

}  // namespace genoq::baseline
