#include "genoq/infomath.hpp"

#include <cmath>

#include "genoq/errors.hpp"

namespace genoq::info {

namespace {
constexpr double kSimplexTol = 1e-12;
}

ProbDist4::ProbDist4(const std::array<double, 4>& p) : p_(p) {
    double sum = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw validation_error("probabilities must lie in [0, 1]");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSimplexTol) {
        throw validation_error("probabilities must sum to 1");
    }
}

double ProbDist4::at(char base) const {
    switch (base) {
        case 'A': return p_[0];
        case 'C': return p_[1];
        case 'G': return p_[2];
        case 'T': return p_[3];
        default: throw validation_error(std::string("invalid base '") + base + "'");
    }
}

ProbDist4 ProbDist4::smoothed(double eps) const {
    if (!(eps > 0.0)) throw validation_error("smoothing epsilon must be positive");
    std::array<double, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = (p_[i] + eps) / (1.0 + 4.0 * eps);
    return ProbDist4(out);
}

ProbDist4 base_distribution(const seqio::DnaSequence& seq) {
    std::array<double, 4> counts{0.0, 0.0, 0.0, 0.0};
    for (char b : seq) {
        switch (b) {
            case 'A': ++counts[0]; break;
            case 'C': ++counts[1]; break;
            case 'G': ++counts[2]; break;
            default: ++counts[3];
        }
    }
    const double n = static_cast<double>(seq.size());
    for (double& c : counts) c /= n;
    return ProbDist4(counts);
}

double shannon_entropy(const ProbDist4& p) {
    double h = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] > 0.0) h -= p[i] * std::log2(p[i]);
    }
    return h;
}

double kl_divergence(const ProbDist4& p, const ProbDist4& q,
                     std::optional<double> smoothing) {
    ProbDist4 ps = p;
    ProbDist4 qs = q;
    if (smoothing) {
        ps = p.smoothed(*smoothing);
        qs = q.smoothed(*smoothing);
    }
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (ps[i] == 0.0) continue;
        if (qs[i] == 0.0) {
            throw validation_error(
                "KL divergence is infinite: q vanishes on p's support "
                "(enable smoothing to regularize)");
        }
        d += ps[i] * std::log(ps[i] / qs[i]);
    }
    return d;
}

double js_divergence(const ProbDist4& p, const ProbDist4& q) {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double m = 0.5 * (p[i] + q[i]);
        if (p[i] > 0.0) d += 0.5 * p[i] * std::log2(p[i] / m);
        if (q[i] > 0.0) d += 0.5 * q[i] * std::log2(q[i] / m);
    }
    return d;
}

double bhattacharyya(const ProbDist4& p, const ProbDist4& q) {
    double bc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) bc += std::sqrt(p[i] * q[i]);
    if (bc == 0.0) {
        throw validation_error(
            "Bhattacharyya divergence is infinite: distributions share no support");
    }
    return -std::log(bc);
}

double hellinger(const ProbDist4& p, const ProbDist4& q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
        acc += d * d;
    }
    return std::sqrt(0.5 * acc);
}

double tv_wasserstein(const ProbDist4& p, const ProbDist4& q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) acc += std::abs(p[i] - q[i]);
    return 0.5 * acc;
}

std::array<double, 4> fisher_rao_diag(const ProbDist4& p, const ProbDist4& q) {
    std::array<double, 4> g;
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] <= 0.0 || q[i] <= 0.0) {
            throw validation_error(
                std::string("zero probability for base '") + kBases[i] +
                "'; smooth the distributions before taking Fisher-Rao coefficients");
        }
        g[i] = 1.0 / (p[i] * q[i]);
    }
    return g;
}

std::uint64_t hamming(const seqio::DnaSequence& s, const seqio::DnaSequence& t) {
    if (s.size() != t.size()) {
        throw validation_error("hamming distance needs equal-length sequences");
    }
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != t[i]) ++d;
    }
    return d;
}

}  // namespace genoq::info
