#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genoq/infomath.hpp"
#include "genoq/qsim.hpp"
#include "genoq/seqio.hpp"

namespace genoq::entenc {

struct Segment {
    std::string bases;
    info::ProbDist4 distribution;
    double entropy = 0.0;             // bits
    double normalized_entropy = 0.0;  // entropy / max segment entropy, 0 when flat
    std::size_t rank = 0;             // ascending by normalized entropy, stable
};

struct SegmentReport {
    std::size_t segment_size = 0;    // K = max(1, ceil(log2 N))
    std::size_t segment_count = 0;   // M = ceil(N / K)
    std::vector<Segment> segments;   // in original order
};

struct SEncodeResult {
    SegmentReport report;
    qsim::Statevector state;
};

/// Segment the sequence, rank segments by normalized entropy, and give the
/// rank-r segment the register H^(k)|r> with k = ceil(log2 max(M, 2));
/// ranks tensor together most significant first.
SEncodeResult sencode(const seqio::DnaSequence& seq,
                      int max_qubits = qsim::kDefaultMaxQubits);

struct EncodeBudget {
    double divergence = 0.0;
    double alpha = 1.0;
    int n_qubits = 1;  // max(1, round(alpha * ceil(divergence)))
};

struct Nz22Result {
    EncodeBudget budget;
    qsim::Statevector state;
    std::vector<double> mismatch_fractions;  // one per qubit
};

/// KL-budgeted reference encoding: the positionwise match/mismatch string
/// splits into n chunks (last absorbs the remainder) and qubit j carries
/// RY(2 asin sqrt(f_j)) |0> with f_j the chunk mismatch fraction.
Nz22Result nz22(const seqio::DnaSequence& seq, const seqio::DnaSequence& ref,
                double alpha, std::optional<double> smoothing = std::nullopt,
                int max_qubits = qsim::kDefaultMaxQubits);

struct Nz23Result {
    EncodeBudget budget;
    qsim::Statevector state;
    char pivot_base = 0;  // b*, set for the single-qubit form
};

/// Bhattacharyya-budgeted amplitude encoding. n = 1 yields the Bernoulli
/// state sqrt(P(b*))|1> + sqrt(1-P(b*))|0> with b* the first base of seq;
/// n >= 2 amplitude-encodes sqrt(P) over |A>,|C>,|G>,|T>, zero-padded up.
Nz23Result nz23(const seqio::DnaSequence& seq, const seqio::DnaSequence& ref,
                double alpha, int max_qubits = qsim::kDefaultMaxQubits);

enum class IgMetric { FisherRao, Hellinger, TotalVariation };

IgMetric ig_metric_from_name(const std::string& name);

/// Diagonal information-geometry encoding on the two-qubit base register:
/// |psi> = normalize(L^(-1/2) G L^(-1/2) H^2 |00>) with L = diag(sqrt p)
/// and G the diagonal of the chosen metric.
qsim::Statevector quantig(const seqio::DnaSequence& seq,
                          const seqio::DnaSequence& ref, IgMetric metric,
                          std::optional<double> smoothing = std::nullopt);

std::string segment_report_to_json(const SegmentReport& report);
std::string budget_to_json(const EncodeBudget& budget);

}  // namespace genoq::entenc
