#include "genoq/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "genoq/errors.hpp"

namespace genoq::oracle {

std::vector<qsim::cdouble> dense_dft_apply(const std::vector<qsim::cdouble>& amps) {
    const std::size_t dim = amps.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<qsim::cdouble> out(dim, qsim::cdouble{0.0, 0.0});
    for (std::size_t p = 0; p < dim; ++p) {
        for (std::size_t q = 0; q < dim; ++q) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>(p) * static_cast<double>(q) /
                                 static_cast<double>(dim);
            out[p] += std::polar(scale, angle) * amps[q];
        }
    }
    return out;
}

std::vector<double> naive_dct2d(const spectral::GrayImage& image) {
    const int m = image.width;
    const int n = image.height;
    std::vector<double> out(static_cast<std::size_t>(m) * n, 0.0);
    for (int alpha = 0; alpha < m; ++alpha) {
        for (int beta = 0; beta < n; ++beta) {
            const double ca = alpha == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
            const double cb = beta == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
            double acc = 0.0;
            for (int x = 0; x < m; ++x) {
                for (int y = 0; y < n; ++y) {
                    acc += image.at(x, y) *
                           std::cos(alpha * std::numbers::pi * (2 * x + 1) /
                                    (2.0 * m)) *
                           std::cos(beta * std::numbers::pi * (2 * y + 1) /
                                    (2.0 * n));
                }
            }
            out[static_cast<std::size_t>(alpha) * n + beta] = ca / 2.0 * cb / 2.0 * acc;
        }
    }
    return out;
}

NaiveBwt rotation_sort_bwt(const std::string& seq) {
    const std::string s = seq + '$';
    std::vector<std::string> rotations;
    rotations.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        rotations.push_back(s.substr(i) + s.substr(0, i));
    }
    std::sort(rotations.begin(), rotations.end());
    NaiveBwt out;
    out.primary_index = 0;
    for (std::size_t i = 0; i < rotations.size(); ++i) {
        out.transformed += rotations[i].back();
        if (rotations[i] == s) out.primary_index = i;
    }
    return out;
}

namespace {

// Own energy accumulation so this module does not lean on qoltz::energy.
double raw_energy(std::uint64_t idx, const qoltz::EnergyModel& model) {
    const int n = model.n;
    auto bit = [idx, n](int i) { return (idx >> (n - 1 - i)) & 1 ? 1.0 : 0.0; };
    double e = 0.0;
    for (int layer = 0; layer < model.layers; ++layer) {
        for (int i = 0; i + 1 < n; ++i) {
            const double w = model.couplings[0][layer][i] +
                             model.couplings[1][layer][i] +
                             model.couplings[2][layer][i];
            e += w * bit(i) * bit(i + 1);
        }
    }
    for (int i = 0; i < n; ++i) e -= model.biases[i] * bit(i);
    return e;
}

}  // namespace

double partition_by_enumeration(const qoltz::EnergyModel& model) {
    double z = 0.0;
    for (std::uint64_t idx = 0; idx < (1ull << model.n); ++idx) {
        z += std::exp(-raw_energy(idx, model));
    }
    return z;
}

double nll_by_enumeration(const std::vector<qoltz::SpinSample>& data,
                          const qoltz::EnergyModel& model) {
    double mean = 0.0;
    for (const qoltz::SpinSample& s : data) {
        std::uint64_t idx = 0;
        for (std::uint8_t b : s) idx = idx << 1 | b;
        mean += raw_energy(idx, model);
    }
    mean /= static_cast<double>(data.size());
    return mean + std::log(partition_by_enumeration(model));
}

FiniteDiffGradient finite_difference_gradient(
    const std::vector<qoltz::SpinSample>& data, const qoltz::EnergyModel& model,
    double h) {
    FiniteDiffGradient g;
    qoltz::EnergyModel probe = model;
    auto central = [&](double& param) {
        const double saved = param;
        param = saved + h;
        const double plus = qoltz::nll_cost(data, probe);
        param = saved - h;
        const double minus = qoltz::nll_cost(data, probe);
        param = saved;
        return (plus - minus) / (2.0 * h);
    };
    for (int c = 0; c < 3; ++c) {
        g.coupling[c].assign(model.layers, std::vector<double>(model.n - 1, 0.0));
        for (int layer = 0; layer < model.layers; ++layer) {
            for (int i = 0; i + 1 < model.n; ++i) {
                g.coupling[c][layer][i] = central(probe.couplings[c][layer][i]);
            }
        }
    }
    g.bias.assign(model.n, 0.0);
    for (int i = 0; i < model.n; ++i) g.bias[i] = central(probe.biases[i]);
    return g;
}

double transport_lp_01(const info::ProbDist4& p, const info::ProbDist4& q) {
    // max over f in {0,1}^4 of sum f_i (p_i - q_i); feasible for |f_i - f_j| <= 1.
    double best = 0.0;
    for (int mask = 0; mask < 16; ++mask) {
        double v = 0.0;
        for (int i = 0; i < 4; ++i) {
            if (mask >> i & 1) v += p[i] - q[i];
        }
        best = std::max(best, v);
    }
    return best;
}

namespace {

using Matrix = std::vector<std::vector<qsim::cdouble>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<qsim::cdouble>(n, qsim::cdouble{0.0, 0.0}));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t c = 0; c < n; ++c) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

}  // namespace

std::vector<qsim::cdouble> dense_pauli_map(const std::vector<double>& angles,
                                           int k, int reps) {
    const int n = static_cast<int>(angles.size());
    const std::size_t dim = 1ull << n;

    // H^n by explicit Kronecker power.
    Matrix hn(1, std::vector<qsim::cdouble>(1, qsim::cdouble{1.0, 0.0}));
    const double s = 1.0 / std::numbers::sqrt2;
    const double h2[2][2] = {{s, s}, {s, -s}};
    for (int q = 0; q < n; ++q) {
        Matrix next(hn.size() * 2,
                    std::vector<qsim::cdouble>(hn.size() * 2, qsim::cdouble{0.0, 0.0}));
        for (std::size_t r = 0; r < hn.size(); ++r) {
            for (std::size_t c = 0; c < hn.size(); ++c) {
                for (int br = 0; br < 2; ++br) {
                    for (int bc = 0; bc < 2; ++bc) {
                        next[r * 2 + br][c * 2 + bc] = hn[r][c] * h2[br][bc];
                    }
                }
            }
        }
        hn = std::move(next);
    }

    Matrix diag(dim, std::vector<qsim::cdouble>(dim, qsim::cdouble{0.0, 0.0}));
    for (std::size_t b = 0; b < dim; ++b) {
        double phase = 0.0;
        for (int i = 0; i < n; ++i) {
            const double zi = (b >> (n - 1 - i)) & 1 ? -1.0 : 1.0;
            phase += angles[i] * zi;
            if (k == 2) {
                for (int j = i + 1; j < n; ++j) {
                    const double zj = (b >> (n - 1 - j)) & 1 ? -1.0 : 1.0;
                    phase += (std::numbers::pi - angles[i]) *
                             (std::numbers::pi - angles[j]) * zi * zj;
                }
            }
        }
        diag[b][b] = std::polar(1.0, phase);
    }

    Matrix block = matmul(diag, hn);
    Matrix total = block;
    for (int r = 1; r < reps; ++r) total = matmul(block, total);

    std::vector<qsim::cdouble> out(dim);
    for (std::size_t r = 0; r < dim; ++r) out[r] = total[r][0];
    return out;
}

}  // namespace genoq::oracle
