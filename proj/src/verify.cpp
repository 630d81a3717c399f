#include "genoq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "genoq/compress.hpp"
#include "genoq/infomath.hpp"
#include "genoq/oracles.hpp"
#include "genoq/qoltz.hpp"
#include "genoq/qsim.hpp"
#include "genoq/spectral.hpp"

namespace genoq::verify {

namespace {

std::string fmt_err(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

qsim::Statevector random_state(int n, qsim::Rng& rng) {
    std::vector<qsim::cdouble> amps(1ull << n);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = {rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0)};
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return qsim::Statevector(n, std::move(amps));
}

// Deliberately wrong QFT used by the fault-injection path: the controlled
// phases run with negated angles, which the dense DFT oracle must catch.
qsim::Statevector qft_sign_flipped(const qsim::Statevector& state) {
    qsim::Statevector out = state;
    const int n = out.n_qubits();
    for (int t = 0; t < n; ++t) {
        out = qsim::apply_gate(out, qsim::Gate::h(), {t});
        for (int c = t + 1; c < n; ++c) {
            const double theta =
                -2.0 * std::numbers::pi / static_cast<double>(1ull << (c - t + 1));
            out = qsim::apply_gate(out, qsim::Gate::cphase(theta), {c, t});
        }
    }
    for (int q = 0; q < n / 2; ++q) {
        out = qsim::apply_gate(out, qsim::Gate::swap_gate(), {q, n - 1 - q});
    }
    return out;
}

CheckRow check_qft(std::uint64_t seed, Fault fault) {
    qsim::Rng rng(seed);
    double worst = 0.0;
    int cases = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int rep = 0; rep < 13; ++rep) {  // 104 cases overall
            const qsim::Statevector in = random_state(n, rng);
            const qsim::Statevector got = fault == Fault::QftSignFlip
                                              ? qft_sign_flipped(in)
                                              : qsim::apply_qft(in);
            const std::vector<qsim::cdouble> want = oracle::dense_dft_apply(in.amps());
            for (std::uint64_t i = 0; i < in.dim(); ++i) {
                worst = std::max(worst, std::abs(got.amps()[i] - want[i]));
            }
            ++cases;
        }
    }
    return {"qft", worst < 1e-10,
            std::to_string(cases) + " states, max err " + fmt_err(worst)};
}

CheckRow check_dct(std::uint64_t seed) {
    qsim::Rng rng(seed);
    double worst = 0.0;
    const std::pair<int, int> sizes[] = {{1, 1}, {2, 2}, {3, 5}, {4, 4},
                                         {8, 8}, {7, 3}, {16, 16}};
    for (const auto& [w, h] : sizes) {
        std::vector<double> pixels(static_cast<std::size_t>(w) * h);
        for (double& p : pixels) p = std::floor(rng.uniform_real(0.0, 256.0));
        const spectral::GrayImage img = spectral::make_image(w, h, pixels);
        const spectral::DctCoeffs got = spectral::dct2d(img);
        const std::vector<double> want = oracle::naive_dct2d(img);
        for (std::size_t i = 0; i < want.size(); ++i) {
            worst = std::max(worst, std::abs(got.values[i] - want[i]));
        }
    }
    return {"dct", worst < 1e-9, "7 images, max err " + fmt_err(worst)};
}

CheckRow check_bwt(std::uint64_t seed) {
    qsim::Rng rng(seed);
    const char bases[] = {'A', 'C', 'G', 'T'};
    int cases = 0;
    bool ok = true;
    for (int rep = 0; rep < 200 && ok; ++rep) {
        const std::size_t len = 1 + rng.uniform_u64(64);
        std::string text;
        for (std::size_t i = 0; i < len; ++i) text += bases[rng.uniform_u64(4)];
        const seqio::DnaSequence seq = seqio::DnaSequence::parse(text);
        const compress::BwtResult got = compress::bwt(seq);
        const oracle::NaiveBwt want = oracle::rotation_sort_bwt(text);
        ok = got.transformed == want.transformed &&
             got.primary_index == want.primary_index &&
             compress::ibwt(got).str() == text;
        ++cases;
    }
    return {"bwt", ok, std::to_string(cases) + " sequences, roundtrip + oracle"};
}

CheckRow check_partition(std::uint64_t seed) {
    qsim::Rng rng(seed);
    double worst = 0.0;
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 1 + static_cast<int>(rng.uniform_u64(10));
        const int layers = 1 + static_cast<int>(rng.uniform_u64(3));
        qoltz::EnergyModel model = qoltz::EnergyModel::zeros(n, layers);
        for (auto& w : model.couplings) {
            for (auto& row : w) {
                for (double& v : row) v = rng.uniform_real(-1.0, 1.0);
            }
        }
        for (double& b : model.biases) b = rng.uniform_real(-1.0, 1.0);
        const double got = qoltz::partition(model);
        const double want = oracle::partition_by_enumeration(model);
        worst = std::max(worst, std::abs(got - want) / want);
    }
    return {"partition", worst < 1e-12, "30 models, max rel err " + fmt_err(worst)};
}

CheckRow check_gradient(std::uint64_t seed) {
    qsim::Rng rng(seed);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng.uniform_u64(5));
        const int layers = 1 + static_cast<int>(rng.uniform_u64(2));
        qoltz::EnergyModel model = qoltz::EnergyModel::zeros(n, layers);
        for (auto& w : model.couplings) {
            for (auto& row : w) {
                for (double& v : row) v = rng.uniform_real(-0.5, 0.5);
            }
        }
        for (double& b : model.biases) b = rng.uniform_real(-0.5, 0.5);
        std::vector<qoltz::SpinSample> data;
        for (int s = 0; s < 8; ++s) {
            qoltz::SpinSample sample(n);
            for (auto& bit : sample) bit = rng.uniform_u64(2);
            data.push_back(sample);
        }
        const qoltz::Gradient got = qoltz::gradient(data, model);
        const oracle::FiniteDiffGradient want =
            oracle::finite_difference_gradient(data, model);
        auto rel = [](double g, double f) {
            return std::abs(g - f) / std::max(1.0, std::abs(f));
        };
        for (int c = 0; c < 3; ++c) {
            for (int layer = 0; layer < layers; ++layer) {
                for (int i = 0; i + 1 < n; ++i) {
                    worst = std::max(
                        rel(got.coupling[layer][i], want.coupling[c][layer][i]),
                        worst);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            worst = std::max(rel(got.bias[i], want.bias[i]), worst);
        }
    }
    return {"gradient", worst < 1e-6, "20 cases, max rel err " + fmt_err(worst)};
}

CheckRow check_transport(std::uint64_t seed) {
    qsim::Rng rng(seed);
    double worst = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
        std::array<double, 4> raw;
        double sum = 0.0;
        for (double& v : raw) {
            v = rng.uniform_real(1e-3, 1.0);
            sum += v;
        }
        for (double& v : raw) v /= sum;
        // renormalize exactly enough for the simplex check
        double s2 = raw[0] + raw[1] + raw[2] + raw[3];
        raw[3] += 1.0 - s2;
        const info::ProbDist4 p(raw);
        std::array<double, 4> raw_q;
        sum = 0.0;
        for (double& v : raw_q) {
            v = rng.uniform_real(1e-3, 1.0);
            sum += v;
        }
        for (double& v : raw_q) v /= sum;
        s2 = raw_q[0] + raw_q[1] + raw_q[2] + raw_q[3];
        raw_q[3] += 1.0 - s2;
        const info::ProbDist4 q(raw_q);
        worst = std::max(worst, std::abs(info::tv_wasserstein(p, q) -
                                         oracle::transport_lp_01(p, q)));
    }
    return {"transport", worst < 1e-9, "200 pairs, max err " + fmt_err(worst)};
}

}  // namespace

std::vector<CheckRow> run_suites(const Options& options) {
    auto wanted = [&options](const std::string& name) {
        return options.only.empty() ||
               std::find(options.only.begin(), options.only.end(), name) !=
                   options.only.end();
    };
    std::vector<CheckRow> rows;
    if (wanted("qft")) rows.push_back(check_qft(options.seed, options.fault));
    if (wanted("dct")) rows.push_back(check_dct(options.seed + 1));
    if (wanted("bwt")) rows.push_back(check_bwt(options.seed + 2));
    if (wanted("partition")) rows.push_back(check_partition(options.seed + 3));
    if (wanted("gradient")) rows.push_back(check_gradient(options.seed + 4));
    if (wanted("transport")) rows.push_back(check_transport(options.seed + 5));
    return rows;
}

std::string render_table(const std::vector<CheckRow>& rows) {
    std::ostringstream os;
    for (const CheckRow& row : rows) {
        os << (row.passed ? "PASS" : "FAIL") << "  " << row.name;
        for (std::size_t i = row.name.size(); i < 12; ++i) os << ' ';
        os << row.detail << '\n';
    }
    return os.str();
}

}  // namespace genoq::verify
