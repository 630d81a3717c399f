#include "genoq/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "genoq/emit.hpp"
#include "genoq/errors.hpp"
#include "json.hpp"

namespace genoq::qsim {

namespace {

constexpr double kUnitarityTol = 1e-10;

void check_unitary(int arity, const std::vector<cdouble>& m) {
    const int d = arity == 1 ? 2 : 4;
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            cdouble acc = 0.0;
            for (int k = 0; k < d; ++k) {
                acc += m[r * d + k] * std::conj(m[c * d + k]);
            }
            const cdouble want = r == c ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
            if (std::abs(acc - want) > kUnitarityTol) {
                throw validation_error("gate matrix is not unitary");
            }
        }
    }
}

// In-place single-qubit kernel; bit position counted from the LSB.
void gate1_inplace(std::vector<cdouble>& a, int n, int target,
                   const std::vector<cdouble>& m) {
    const std::uint64_t stride = 1ull << (n - 1 - target);
    const std::uint64_t dim = a.size();
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & stride) continue;
        const cdouble a0 = a[base];
        const cdouble a1 = a[base | stride];
        a[base] = m[0] * a0 + m[1] * a1;
        a[base | stride] = m[2] * a0 + m[3] * a1;
    }
}

void gate2_inplace(std::vector<cdouble>& a, int n, int t0, int t1,
                   const std::vector<cdouble>& m) {
    const std::uint64_t s0 = 1ull << (n - 1 - t0);
    const std::uint64_t s1 = 1ull << (n - 1 - t1);
    const std::uint64_t dim = a.size();
    for (std::uint64_t base = 0; base < dim; ++base) {
        if ((base & s0) || (base & s1)) continue;
        const std::uint64_t idx[4] = {base, base | s1, base | s0, base | s0 | s1};
        cdouble in[4];
        for (int k = 0; k < 4; ++k) in[k] = a[idx[k]];
        for (int r = 0; r < 4; ++r) {
            cdouble acc = 0.0;
            for (int c = 0; c < 4; ++c) acc += m[r * 4 + c] * in[c];
            a[idx[r]] = acc;
        }
    }
}

}  // namespace

Gate::Gate(int arity, std::vector<cdouble> m) : arity_(arity), m_(std::move(m)) {
    check_unitary(arity_, m_);
}

Gate Gate::single(const std::array<cdouble, 4>& m) {
    return Gate(1, std::vector<cdouble>(m.begin(), m.end()));
}

Gate Gate::two(const std::array<cdouble, 16>& m) {
    return Gate(2, std::vector<cdouble>(m.begin(), m.end()));
}

Gate Gate::h() {
    const double s = 1.0 / std::numbers::sqrt2;
    return single({cdouble{s}, cdouble{s}, cdouble{s}, cdouble{-s}});
}

Gate Gate::x() { return single({0.0, 1.0, 1.0, 0.0}); }

Gate Gate::y() {
    return single({cdouble{0.0, 0.0}, cdouble{0.0, -1.0}, cdouble{0.0, 1.0},
                   cdouble{0.0, 0.0}});
}

Gate Gate::z() { return single({1.0, 0.0, 0.0, -1.0}); }

Gate Gate::s() { return single({1.0, 0.0, 0.0, cdouble{0.0, 1.0}}); }

Gate Gate::t() {
    return single({1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0)});
}

Gate Gate::phase(double theta) {
    if (!std::isfinite(theta)) throw validation_error("phase angle must be finite");
    return single({1.0, 0.0, 0.0, std::polar(1.0, theta)});
}

Gate Gate::rotation(Axis axis, double theta) {
    if (!std::isfinite(theta)) {
        throw validation_error("rotation angle must be finite");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (axis) {
        case Axis::X:
            return single({cdouble{c, 0.0}, cdouble{0.0, -s}, cdouble{0.0, -s},
                           cdouble{c, 0.0}});
        case Axis::Y:
            return single({cdouble{c, 0.0}, cdouble{-s, 0.0}, cdouble{s, 0.0},
                           cdouble{c, 0.0}});
        case Axis::Z:
            return single({std::polar(1.0, -theta / 2.0), 0.0, 0.0,
                           std::polar(1.0, theta / 2.0)});
    }
    throw validation_error("unknown rotation axis");
}

Gate Gate::cnot() {
    return two({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

Gate Gate::cz() {
    return two({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}

Gate Gate::cphase(double theta) {
    if (!std::isfinite(theta)) throw validation_error("phase angle must be finite");
    return two({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0,
                std::polar(1.0, theta)});
}

Gate Gate::swap_gate() {
    return two({1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

Statevector::Statevector(int n_qubits, std::vector<cdouble> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
    if (n_qubits_ < 1 || n_qubits_ > kHardMaxQubits) {
        throw validation_error("statevector qubit count out of range");
    }
    if (amps_.size() != (1ull << n_qubits_)) {
        throw validation_error("statevector length must be 2^n_qubits");
    }
}

double Statevector::norm_sq() const {
    double acc = 0.0;
    for (const cdouble& a : amps_) acc += std::norm(a);
    return acc;
}

Statevector basis_state(int n_qubits, std::uint64_t index, int max_qubits) {
    if (n_qubits < 1) throw validation_error("need at least one qubit");
    if (n_qubits > max_qubits) {
        throw cap_error("qubit cap exceeded: " + std::to_string(n_qubits) +
                        " > " + std::to_string(max_qubits));
    }
    if (index >= (1ull << n_qubits)) {
        throw validation_error("basis index " + std::to_string(index) +
                               " out of range for " + std::to_string(n_qubits) +
                               " qubits");
    }
    std::vector<cdouble> amps(1ull << n_qubits, cdouble{0.0, 0.0});
    amps[index] = 1.0;
    return Statevector(n_qubits, std::move(amps));
}

Statevector apply_gate(const Statevector& state, const Gate& gate,
                       const std::vector<int>& targets) {
    const int n = state.n_qubits();
    if (static_cast<int>(targets.size()) != gate.arity()) {
        throw validation_error("target count does not match gate arity");
    }
    for (int t : targets) {
        if (t < 0 || t >= n) throw validation_error("gate target out of range");
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw validation_error("gate targets must be distinct");
    }
    Statevector out = state;
    if (gate.arity() == 1) {
        gate1_inplace(out.amps(), n, targets[0], gate.matrix());
    } else {
        gate2_inplace(out.amps(), n, targets[0], targets[1], gate.matrix());
    }
    return out;
}

Statevector tensor(const Statevector& a, const Statevector& b, int max_qubits) {
    const int n = a.n_qubits() + b.n_qubits();
    if (n > max_qubits) {
        throw cap_error("qubit cap exceeded by tensor product: " +
                        std::to_string(n) + " > " + std::to_string(max_qubits));
    }
    std::vector<cdouble> amps(1ull << n);
    const std::uint64_t db = b.dim();
    for (std::uint64_t ia = 0; ia < a.dim(); ++ia) {
        for (std::uint64_t ib = 0; ib < db; ++ib) {
            amps[ia * db + ib] = a.amps()[ia] * b.amps()[ib];
        }
    }
    return Statevector(n, std::move(amps));
}

Statevector apply_qft(const Statevector& state) {
    Statevector out = state;
    const int n = out.n_qubits();
    const std::vector<cdouble> h = Gate::h().matrix();
    for (int t = 0; t < n; ++t) {
        gate1_inplace(out.amps(), n, t, h);
        for (int c = t + 1; c < n; ++c) {
            const double theta =
                2.0 * std::numbers::pi / static_cast<double>(1ull << (c - t + 1));
            gate2_inplace(out.amps(), n, c, t, Gate::cphase(theta).matrix());
        }
    }
    const std::vector<cdouble> sw = Gate::swap_gate().matrix();
    for (int q = 0; q < n / 2; ++q) {
        gate2_inplace(out.amps(), n, q, n - 1 - q, sw);
    }
    return out;
}

std::uint64_t Rng::uniform_u64(std::uint64_t bound) {
    if (bound == 0) throw validation_error("uniform_u64 bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

std::string index_bits(std::uint64_t index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index >> (n_qubits - 1 - q) & 1) s[q] = '1';
    }
    return s;
}

std::map<std::string, std::uint64_t> sample_counts(const Statevector& state,
                                                   std::uint64_t shots,
                                                   std::uint64_t seed) {
    if (shots < 1) throw validation_error("shots must be >= 1");
    std::vector<double> cum(state.dim());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        acc += std::norm(state.amps()[i]);
        cum[i] = acc;
    }
    Rng rng(seed);
    std::vector<std::uint64_t> hits(state.dim(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform_double() * acc;
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const std::uint64_t idx =
            it == cum.end() ? state.dim() - 1
                            : static_cast<std::uint64_t>(it - cum.begin());
        ++hits[idx];
    }
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (hits[i] > 0) counts[index_bits(i, state.n_qubits())] = hits[i];
    }
    return counts;
}

std::string state_to_json(const Statevector& state) {
    std::ostringstream os;
    os << "{\"n_qubits\": " << state.n_qubits()
       << ", \"convention\": \"big-endian\", \"amplitudes\": [";
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i > 0) os << ", ";
        os << '[' << emit::fmt_double(state.amps()[i].real()) << ", "
           << emit::fmt_double(state.amps()[i].imag()) << ']';
    }
    os << "]}\n";
    return os.str();
}

Statevector state_from_json(const std::string& text, int max_qubits) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("bad state file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n_qubits") || !j.contains("amplitudes")) {
        throw validation_error("state file must carry n_qubits and amplitudes");
    }
    if (j.value("convention", "big-endian") != "big-endian") {
        throw validation_error("unsupported state convention");
    }
    const int n = j["n_qubits"].get<int>();
    if (n < 1 || n > max_qubits) {
        throw validation_error("state file qubit count out of range");
    }
    const auto& arr = j["amplitudes"];
    if (!arr.is_array() || arr.size() != (1ull << n)) {
        throw validation_error("state file amplitude count must be 2^n_qubits");
    }
    std::vector<cdouble> amps;
    amps.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
            throw validation_error("amplitudes must be [re, im] pairs");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return Statevector(n, std::move(amps));
}

}  // namespace genoq::qsim
