#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace genoq::qsim {

using cdouble = std::complex<double>;

inline constexpr int kDefaultMaxQubits = 24;
inline constexpr int kHardMaxQubits = 28;

enum class Axis { X, Y, Z };

/// One- or two-qubit unitary, row-major. Construction rejects matrices
/// whose U*Udag deviates from the identity by more than 1e-10.
class Gate {
public:
    static Gate single(const std::array<cdouble, 4>& m);
    static Gate two(const std::array<cdouble, 16>& m);

    static Gate h();
    static Gate x();
    static Gate y();
    static Gate z();
    static Gate s();
    static Gate t();
    static Gate phase(double theta);   // diag(1, e^{i theta})
    static Gate rotation(Axis axis, double theta);
    static Gate cnot();                // control = first target qubit
    static Gate cz();
    static Gate cphase(double theta);  // diag(1, 1, 1, e^{i theta})
    static Gate swap_gate();

    int arity() const { return arity_; }
    const std::vector<cdouble>& matrix() const { return m_; }

private:
    Gate(int arity, std::vector<cdouble> m);

    int arity_;
    std::vector<cdouble> m_;
};

/// Dense statevector over 2^n basis states.
///
/// Qubit order is big-endian: qubit 0 is the most significant bit of the
/// basis index, so the bit string of index i reads q0 q1 ... q(n-1) left
/// to right. All operations in this namespace assume that convention.
class Statevector {
public:
    Statevector(int n_qubits, std::vector<cdouble> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
    const std::vector<cdouble>& amps() const { return amps_; }
    std::vector<cdouble>& amps() { return amps_; }
    double norm_sq() const;

private:
    int n_qubits_;
    std::vector<cdouble> amps_;
};

Statevector basis_state(int n_qubits, std::uint64_t index,
                        int max_qubits = kDefaultMaxQubits);

Statevector apply_gate(const Statevector& state, const Gate& gate,
                       const std::vector<int>& targets);

/// Kronecker product; a's qubits become the more significant ones.
Statevector tensor(const Statevector& a, const Statevector& b,
                   int max_qubits = kDefaultMaxQubits);

/// Circuit QFT (Hadamards, controlled-phase ladder, qubit reversal).
/// Equals multiplication by the unitary DFT matrix
/// F[p][q] = exp(2 pi i p q / 2^n) / sqrt(2^n).
Statevector apply_qft(const Statevector& state);

/// Multinomial measurement; keys are big-endian bit strings, values sum
/// to shots. Deterministic for a fixed seed (see Rng).
std::map<std::string, std::uint64_t> sample_counts(const Statevector& state,
                                                   std::uint64_t shots,
                                                   std::uint64_t seed);

std::string index_bits(std::uint64_t index, int n_qubits);

/// Seeded generator with a pinned algorithm so sampled outputs reproduce
/// across platforms: std::mt19937_64 (standard-specified sequence) drives
/// everything; doubles take the top 53 bits, bounded ints use rejection.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    double uniform_double() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * uniform_double();
    }

    std::uint64_t uniform_u64(std::uint64_t bound);  // [0, bound)

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_u64(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

/// {"n_qubits": n, "convention": "big-endian", "amplitudes": [[re, im], ...]}
/// with 17-significant-digit floats; byte-stable for identical states.
std::string state_to_json(const Statevector& state);
Statevector state_from_json(const std::string& text,
                            int max_qubits = kHardMaxQubits);

}  // namespace genoq::qsim
