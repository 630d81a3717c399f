#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "genoq/qsim.hpp"
#include "genoq/seqio.hpp"

namespace genoq::qoltz {

inline constexpr int kMaxSpins = 20;  // exhaustive enumeration bound

/// Layered open-chain pairwise energy model over n binary spins. The three
/// coupling arrays are kept separate to mirror the initialization scheme
/// even though only their sum enters the energy (a documented redundancy).
struct EnergyModel {
    int n = 0;       // spin count
    int layers = 0;  // l
    // couplings[c][L][i] for c in {0,1,2}, L in [0,layers), i in [0,n-1)
    std::array<std::vector<std::vector<double>>, 3> couplings;
    std::vector<double> biases;  // n entries

    static EnergyModel zeros(int n, int layers);
    double effective_coupling(int layer, int i) const;
};

using SpinSample = std::vector<std::uint8_t>;  // n values in {0,1}

/// E = sum_L sum_i W(L,i) s_i s_{i+1} - sum_i B_i s_i with W = w0+w1+w2.
double energy(const SpinSample& sample, const EnergyModel& model);

/// Z = sum over all 2^n spin configurations of exp(-E).
double partition(const EnergyModel& model);

/// J = mean_data E + ln Z.
double nll_cost(const std::vector<SpinSample>& data, const EnergyModel& model);

struct Gradient {
    // d J / d w_c(L, i); identical for the three coupling arrays.
    std::vector<std::vector<double>> coupling;  // [layers][n-1]
    std::vector<double> bias;                   // [n]
};

/// Exact gradient: data moments minus model moments, the latter by full
/// enumeration.
Gradient gradient(const std::vector<SpinSample>& data, const EnergyModel& model);

/// Two-bit encoding (A=00 C=01 G=10 T=11) of the whole sequence.
std::string bin_encode_seq(const seqio::DnaSequence& seq);

struct BitSegments {
    std::vector<std::string> segments;
    std::size_t leftover = 0;  // trailing bits reported as not sequenced
};

/// Split a bit string into K segments. When K divides the length the
/// segments have length/K bits each; otherwise the segment size floors to
/// (length-1)/K and the trailing remainder is reported unsequenced.
BitSegments segment_bits(const std::string& bits, std::size_t k);

struct TrainConfig {
    int layers = 2;
    int steps = 100;
    double learning_rate = 0.01;
    int batch_size = 16;
    double split_fraction = 0.8;
    int segments_per_sequence = 2;
    std::uint64_t seed = 0;
};

struct TraceRow {
    int step = 0;
    double train_j = 0.0;
    double val_j = 0.0;
};

struct TrainResult {
    EnergyModel model;
    std::vector<TraceRow> trace;
    std::size_t train_samples = 0;
    std::size_t val_samples = 0;
    bool early_stopped = false;
};

/// Mini-batch SGD on the negative log-likelihood, all expectations exact.
/// Deterministic for a fixed seed; stops early once the training loss is
/// flat to 1e-9 over ten steps.
TrainResult train(const std::vector<seqio::DnaSequence>& sequences,
                  const TrainConfig& config);

std::string model_to_json(const EnergyModel& model);
std::string trace_to_csv(const std::vector<TraceRow>& trace);

}  // namespace genoq::qoltz
