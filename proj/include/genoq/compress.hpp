#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "genoq/qsim.hpp"
#include "genoq/seqio.hpp"

namespace genoq::compress {

struct HuffmanCodebook {
    std::map<char, std::string> code;         // base -> bit string
    std::map<char, std::uint64_t> counts;     // base -> occurrences
    std::uint64_t total_bits = 0;             // sum counts(b) * |code(b)|
    std::string variant;                      // "cascade" or "classic"
};

struct QuantHuffResult {
    HuffmanCodebook codebook;
    // Present only when total_bits fits the qubit cap.
    std::optional<qsim::Statevector> state;
};

/// Rank-paired cascade tree: leaves ordered by ascending count (ties
/// alphabetical), adjacent leaves paired left to right and the pairing
/// cascaded upward. Not the optimal greedy tree; see classic_huffman.
QuantHuffResult quanthuff(const seqio::DnaSequence& seq,
                          int max_qubits = qsim::kDefaultMaxQubits);

/// Textbook greedy Huffman merge (two smallest weights, ties broken by the
/// alphabetically least leaf). Serves as the optimality oracle against the
/// cascade tree.
HuffmanCodebook classic_huffman(const seqio::DnaSequence& seq);

struct BwtResult {
    std::string transformed;        // over {A, C, G, T, $}
    std::uint64_t primary_index = 0;  // row of the original string
};

/// Sentinel-terminated Burrows-Wheeler transform; '$' sorts before the
/// bases. Sorts rotation indices with a cyclic comparator rather than
/// materializing the rotation matrix.
BwtResult bwt(const seqio::DnaSequence& seq);

seqio::DnaSequence ibwt(const BwtResult& result);

std::string bwt_to_json(const BwtResult& result);
BwtResult bwt_from_json(const std::string& text);

struct QbwtResult {
    BwtResult transform;
    qsim::Statevector state;
    std::map<std::string, std::uint64_t> counts;
    // Accumulated scalar exp(2 pi i count(b)/n) per position, folded into
    // the state as an unobservable global phase.
    double global_phase = 0.0;
};

/// One RY per position of the (sentinel-stripped) transformed string with
/// angle 2 pi count(base)/n, then a seeded measurement.
QbwtResult qbwt_encode(const seqio::DnaSequence& seq, std::uint64_t shots,
                       std::uint64_t seed, int max_qubits = qsim::kDefaultMaxQubits);

std::string codebook_to_json(const HuffmanCodebook& book);
std::string counts_to_json(const std::map<std::string, std::uint64_t>& counts);

}  // namespace genoq::compress
