#pragma once

#include <vector>

#include "genoq/qsim.hpp"
#include "genoq/seqio.hpp"

namespace genoq::baseline {

/// Loads a real vector as state amplitudes: zero-pad to the next power of
/// two, normalize, then synthesize with a cascade of uniformly controlled
/// Y rotations (signs folded into the final-level angles). Length-1 inputs
/// are promoted to one qubit.
qsim::Statevector amplitude_encode(const std::vector<double>& values,
                                   int max_qubits = qsim::kDefaultMaxQubits);

/// Amplitude encoding of a DNA sequence through its base distribution:
/// amplitudes are sqrt(p) over |A>, |C>, |G>, |T>, so squared magnitudes
/// reproduce the distribution.
qsim::Statevector amplitude_encode_sequence(const seqio::DnaSequence& seq,
                                            int max_qubits = qsim::kDefaultMaxQubits);

struct PauliMapConfig {
    int n_qubits = 0;
    int k = 2;     // max interaction subset size, 1 or 2
    int reps = 2;
    std::vector<double> angles;  // one per qubit
};

/// Second-order Pauli feature map: reps blocks of H^n followed by the
/// diagonal phase exp(i sum_S phi_S prod_{i in S} Z_i) with phi_i = x_i and
/// phi_ij = (pi - x_i)(pi - x_j).
qsim::Statevector pauli_feature_map(const PauliMapConfig& config,
                                    int max_qubits = qsim::kDefaultMaxQubits);

/// Feature-map angles for a DNA sequence: x_i = two-bit value of base i
/// times pi/2.
std::vector<double> feature_map_angles(const seqio::DnaSequence& seq);

/// One qubit per base, RY(m(b) pi) with the high-bit map (A,C -> 0;
/// G,T -> 1); optional trailing CNOT chain (control i, target i+1).
qsim::Statevector angle_embed(const seqio::DnaSequence& seq, bool entangle = false,
                              int max_qubits = qsim::kDefaultMaxQubits);

}  // namespace genoq::baseline
