#pragma once

#include <array>
#include <string>
#include <vector>

#include "genoq/infomath.hpp"
#include "genoq/qoltz.hpp"
#include "genoq/qsim.hpp"
#include "genoq/spectral.hpp"

// Brute-force reference computations kept deliberately independent of the
// production code paths they check: the DFT is a dense matrix product, the
// DCT a quadruple loop, the BWT a materialized rotation sort, the spin-model
// quantities a fresh enumeration, and the transport distance an exact LP.
namespace genoq::oracle {

/// Multiply by the dense DFT matrix exp(2 pi i p q / 2^n) / sqrt(2^n).
std::vector<qsim::cdouble> dense_dft_apply(const std::vector<qsim::cdouble>& amps);

/// Quadruple-loop 2D DCT with the 1/sqrt(2)-at-zero scale factors.
std::vector<double> naive_dct2d(const spectral::GrayImage& image);

struct NaiveBwt {
    std::string transformed;
    std::size_t primary_index;
};

/// Materializes every rotation of seq + '$', sorts the strings, reads the
/// last column.
NaiveBwt rotation_sort_bwt(const std::string& seq);

/// Partition function by enumeration with its own energy accumulation.
double partition_by_enumeration(const qoltz::EnergyModel& model);

/// Mean energy of the data plus ln Z, again with its own accumulation.
double nll_by_enumeration(const std::vector<qoltz::SpinSample>& data,
                          const qoltz::EnergyModel& model);

/// Central finite differences of the production cost at step h, taken per
/// coupling entry (all three arrays) and per bias.
struct FiniteDiffGradient {
    std::array<std::vector<std::vector<double>>, 3> coupling;
    std::vector<double> bias;
};

FiniteDiffGradient finite_difference_gradient(
    const std::vector<qoltz::SpinSample>& data, const qoltz::EnergyModel& model,
    double h = 1e-5);

/// Exact optimal-transport value for the 0/1 ground cost over four
/// categories, solved through the Kantorovich dual whose optimum sits on a
/// vertex of [0,1]^4; all 16 integral vertices are enumerated.
double transport_lp_01(const info::ProbDist4& p, const info::ProbDist4& q);

/// (diag-phase * H^n)^reps acting on |0...0> as explicit dense matrices.
std::vector<qsim::cdouble> dense_pauli_map(const std::vector<double>& angles,
                                           int k, int reps);

}  // namespace genoq::oracle
