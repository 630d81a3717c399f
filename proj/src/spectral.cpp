#include "genoq/spectral.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "genoq/baseline.hpp"
#include "genoq/emit.hpp"
#include "genoq/errors.hpp"

namespace genoq::spectral {

namespace {

constexpr double kPixelMax = 255.0;

double scale_c(int idx) { return idx == 0 ? 1.0 / std::numbers::sqrt2 : 1.0; }

}  // namespace

GrayImage make_image(int width, int height, std::vector<double> pixels) {
    if (width < 1 || height < 1) {
        throw validation_error("image dimensions must be positive");
    }
    if (pixels.size() != static_cast<std::size_t>(width) * height) {
        throw validation_error("pixel count does not match image dimensions");
    }
    for (double p : pixels) {
        if (!(p >= 0.0 && p <= kPixelMax)) {
            throw validation_error("pixel values must lie in [0, 255]");
        }
    }
    return GrayImage{width, height, std::move(pixels)};
}

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open image: " + path);

    auto next_token = [&in, &path]() {
        std::string tok;
        while (true) {
            int c = in.get();
            if (c == EOF) throw validation_error(path + ": truncated PGM header");
            if (c == '#') {  // comment runs to end of line
                while (c != EOF && c != '\n') c = in.get();
                continue;
            }
            if (std::isspace(c)) {
                if (!tok.empty()) return tok;
                continue;
            }
            tok += static_cast<char>(c);
        }
    };

    const std::string magic = next_token();
    if (magic != "P2" && magic != "P5") {
        throw validation_error(path + ": expected PGM magic P2 or P5");
    }
    const int width = std::stoi(next_token());
    const int height = std::stoi(next_token());
    const int maxval = std::stoi(next_token());
    if (width < 1 || height < 1) {
        throw validation_error(path + ": bad PGM dimensions");
    }
    if (maxval < 1 || maxval > 255) {
        throw validation_error(path + ": only 8-bit PGM supported");
    }

    std::vector<double> pixels;
    pixels.reserve(static_cast<std::size_t>(width) * height);
    if (magic == "P2") {
        for (int i = 0; i < width * height; ++i) {
            const int v = std::stoi(next_token());
            if (v < 0 || v > maxval) throw validation_error(path + ": pixel out of range");
            pixels.push_back(v);
        }
    } else {
        // P5: a single whitespace byte separates the header from the raster.
        for (int i = 0; i < width * height; ++i) {
            const int c = in.get();
            if (c == EOF) throw validation_error(path + ": truncated PGM raster");
            if (c > maxval) throw validation_error(path + ": pixel out of range");
            pixels.push_back(c);
        }
    }
    return make_image(width, height, std::move(pixels));
}

DctCoeffs dct2d(const GrayImage& image) {
    const int m = image.width;
    const int n = image.height;

    // Separable pass along x first: G(alpha, y).
    std::vector<double> g(static_cast<std::size_t>(m) * n, 0.0);
    for (int alpha = 0; alpha < m; ++alpha) {
        for (int y = 0; y < n; ++y) {
            double acc = 0.0;
            for (int x = 0; x < m; ++x) {
                acc += image.at(x, y) *
                       std::cos(alpha * std::numbers::pi * (2 * x + 1) / (2.0 * m));
            }
            g[static_cast<std::size_t>(alpha) * n + y] = acc;
        }
    }

    DctCoeffs coeffs;
    coeffs.width = m;
    coeffs.height = n;
    coeffs.values.resize(static_cast<std::size_t>(m) * n);
    for (int alpha = 0; alpha < m; ++alpha) {
        for (int beta = 0; beta < n; ++beta) {
            double acc = 0.0;
            for (int y = 0; y < n; ++y) {
                acc += g[static_cast<std::size_t>(alpha) * n + y] *
                       std::cos(beta * std::numbers::pi * (2 * y + 1) / (2.0 * n));
            }
            const double f = scale_c(alpha) / 2.0 * scale_c(beta) / 2.0 * acc;
            coeffs.values[static_cast<std::size_t>(alpha) * n + beta] = f;
            coeffs.f_max = std::max(coeffs.f_max, std::abs(f));
        }
    }
    return coeffs;
}

qsim::Statevector cosine_encode_image(const GrayImage& image, int max_qubits) {
    const DctCoeffs coeffs = dct2d(image);
    if (coeffs.f_max == 0.0) {
        throw validation_error(
            "degenerate normalization: all DCT coefficients are zero");
    }
    std::vector<double> magnitudes;
    magnitudes.reserve(coeffs.values.size());
    for (double f : coeffs.values) magnitudes.push_back(std::abs(f / coeffs.f_max));
    // amplitude_encode pads to 2^n and renormalizes; QFT completes the scheme.
    return qsim::apply_qft(baseline::amplitude_encode(magnitudes, max_qubits));
}

qsim::Statevector cosine_encode_dna(const seqio::DnaSequence& seq, int max_qubits) {
    const int n = static_cast<int>(seq.size());
    if (n > max_qubits) {
        throw cap_error("qubit cap exceeded: sequence needs " + std::to_string(n) +
                        " qubits");
    }
    std::uint64_t index = 0;
    for (char b : seq) {
        index = index << 1 | (seqio::base_bits(b, "cosine") == "1" ? 1u : 0u);
    }
    return qsim::apply_qft(qsim::basis_state(n, index, max_qubits));
}

std::string coeffs_to_csv(const DctCoeffs& coeffs) {
    std::ostringstream os;
    os << "alpha,beta,F,F_hat\n";
    for (int alpha = 0; alpha < coeffs.width; ++alpha) {
        for (int beta = 0; beta < coeffs.height; ++beta) {
            const double f = coeffs.at(alpha, beta);
            const double fhat = coeffs.f_max == 0.0 ? 0.0 : f / coeffs.f_max;
            os << alpha << ',' << beta << ',' << emit::fmt_double(f) << ','
               << emit::fmt_double(fhat) << '\n';
        }
    }
    return os.str();
}

}  // namespace genoq::spectral
