#pragma once

#include <string>
#include <vector>

#include "genoq/qsim.hpp"
#include "genoq/seqio.hpp"

namespace genoq::spectral {

/// Grayscale image, pixels f(x, y) in [0, 255] with x indexing the M
/// columns and y the N rows.
struct GrayImage {
    int width = 0;   // M
    int height = 0;  // N
    std::vector<double> pixels;  // row-major: pixels[y * width + x]

    double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

GrayImage make_image(int width, int height, std::vector<double> pixels);

/// PGM reader, P2 (ASCII) and P5 (binary), 8-bit maxval.
GrayImage load_pgm(const std::string& path);

struct DctCoeffs {
    int width = 0;   // alpha range
    int height = 0;  // beta range
    std::vector<double> values;  // values[alpha * height + beta]
    double f_max = 0.0;          // max |F| over all entries

    double at(int alpha, int beta) const {
        return values[static_cast<std::size_t>(alpha) * height + beta];
    }
};

/// F(a,b) = (C_a/2)(C_b/2) sum_xy f(x,y) cos[a pi (2x+1)/2M] cos[b pi (2y+1)/2N]
/// with C = 1/sqrt(2) at index 0, else 1. This scaling is applied verbatim
/// for every M, N (it matches the JPEG convention only at M = N = 8).
/// Computed separably; the naive quadruple loop lives in the oracle module.
DctCoeffs dct2d(const GrayImage& image);

/// |F/F_max| flattened row-major (alpha outer, beta inner), zero-padded to
/// 2^n with n = max(1, ceil(log2(MN))), amplitude-encoded, then a register
/// QFT.
qsim::Statevector cosine_encode_image(const GrayImage& image,
                                      int max_qubits = qsim::kDefaultMaxQubits);

/// DNA quick-path: basis state from the cosine bit map (A,G -> 0;
/// C,T -> 1), then a full register QFT.
qsim::Statevector cosine_encode_dna(const seqio::DnaSequence& seq,
                                    int max_qubits = qsim::kDefaultMaxQubits);

/// alpha,beta,F,F_hat rows.
std::string coeffs_to_csv(const DctCoeffs& coeffs);

}  // namespace genoq::spectral
