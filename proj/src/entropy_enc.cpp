#include "genoq/entropy_enc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "genoq/baseline.hpp"
#include "genoq/emit.hpp"
#include "genoq/errors.hpp"

namespace genoq::entenc {

namespace {

int budget_qubits(double divergence, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw validation_error("alpha must lie in [0, 1]");
    }
    const long n = std::lround(alpha * std::ceil(divergence));
    return static_cast<int>(std::max(1l, n));
}

}  // namespace

SEncodeResult sencode(const seqio::DnaSequence& seq, int max_qubits) {
    const std::size_t n = seq.size();
    const std::size_t k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))));
    const std::size_t m = (n + k - 1) / k;

    SegmentReport report;
    report.segment_size = k;
    report.segment_count = m;

    double h_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::string part = seq.str().substr(i * k, k);
        const seqio::DnaSequence sub = seqio::DnaSequence::parse(part);
        const info::ProbDist4 dist = info::base_distribution(sub);
        const double h = info::shannon_entropy(dist);
        h_max = std::max(h_max, h);
        report.segments.push_back({part, dist, h, 0.0, 0});
    }
    for (Segment& s : report.segments) {
        s.normalized_entropy = h_max == 0.0 ? 0.0 : s.entropy / h_max;
    }

    // Ranks ascend by normalized entropy; ties keep original position.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&report](std::size_t a, std::size_t b) {
                         return report.segments[a].normalized_entropy <
                                report.segments[b].normalized_entropy;
                     });
    for (std::size_t r = 0; r < m; ++r) report.segments[order[r]].rank = r;

    const int reg_qubits = static_cast<int>(
        std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(m, 2)))));
    if (m * reg_qubits > static_cast<std::size_t>(max_qubits)) {
        throw cap_error("qubit cap exceeded: " + std::to_string(m) +
                        " segment registers of " + std::to_string(reg_qubits) +
                        " qubits");
    }

    // Rank r becomes the register H^(k)|r>, ranks tensored most significant
    // first.
    const qsim::Gate h_gate = qsim::Gate::h();
    std::optional<qsim::Statevector> state;
    for (std::size_t r = 0; r < m; ++r) {
        qsim::Statevector reg = qsim::basis_state(reg_qubits, r, max_qubits);
        for (int q = 0; q < reg_qubits; ++q) {
            reg = qsim::apply_gate(reg, h_gate, {q});
        }
        state = state ? qsim::tensor(*state, reg, max_qubits) : reg;
    }
    return {std::move(report), std::move(*state)};
}

Nz22Result nz22(const seqio::DnaSequence& seq, const seqio::DnaSequence& ref,
                double alpha, std::optional<double> smoothing, int max_qubits) {
    if (seq.size() != ref.size()) {
        throw validation_error("sequence and reference must have equal length");
    }
    const info::ProbDist4 p = info::base_distribution(seq);
    const info::ProbDist4 q = info::base_distribution(ref);
    const double d = info::kl_divergence(p, q, smoothing);

    Nz22Result result{{d, alpha, budget_qubits(d, alpha)},
                      qsim::basis_state(1, 0, max_qubits),
                      {}};
    const int n = result.budget.n_qubits;
    if (n > max_qubits) throw cap_error("qubit cap exceeded by KL budget");

    // Positionwise mismatch indicator, split into n chunks; the last chunk
    // absorbs the remainder. Chunks past the sequence end count as all-match.
    const std::size_t len = seq.size();
    const std::size_t chunk = len / n;
    std::vector<double> fractions(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const std::size_t begin = j * chunk;
        const std::size_t end = j + 1 == n ? len : begin + chunk;
        if (end <= begin) continue;
        std::size_t mismatches = 0;
        for (std::size_t i = begin; i < end; ++i) {
            if (seq[i] != ref[i]) ++mismatches;
        }
        fractions[j] = static_cast<double>(mismatches) / (end - begin);
    }

    qsim::Statevector state = qsim::basis_state(n, 0, max_qubits);
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * std::asin(std::sqrt(fractions[j]));
        state = qsim::apply_gate(state, qsim::Gate::rotation(qsim::Axis::Y, theta),
                                 {j});
    }
    result.state = std::move(state);
    result.mismatch_fractions = std::move(fractions);
    return result;
}

Nz23Result nz23(const seqio::DnaSequence& seq, const seqio::DnaSequence& ref,
                double alpha, int max_qubits) {
    if (seq.size() != ref.size()) {
        throw validation_error("sequence and reference must have equal length");
    }
    const info::ProbDist4 p = info::base_distribution(seq);
    const info::ProbDist4 q = info::base_distribution(ref);
    const double d = info::bhattacharyya(p, q);

    Nz23Result result{{d, alpha, budget_qubits(d, alpha)},
                      qsim::basis_state(1, 0, max_qubits),
                      0};
    const int n = result.budget.n_qubits;
    if (n > max_qubits) throw cap_error("qubit cap exceeded by Bhattacharyya budget");

    if (n == 1) {
        result.pivot_base = seq[0];
        const double pb = p.at(result.pivot_base);
        std::vector<qsim::cdouble> amps = {std::sqrt(1.0 - pb), std::sqrt(pb)};
        result.state = qsim::Statevector(1, std::move(amps));
        return result;
    }
    std::vector<double> values(1ull << n, 0.0);
    for (std::size_t i = 0; i < 4; ++i) values[i] = std::sqrt(p[i]);
    result.state = baseline::amplitude_encode(values, max_qubits);
    return result;
}

IgMetric ig_metric_from_name(const std::string& name) {
    if (name == "fisher-rao") return IgMetric::FisherRao;
    if (name == "hellinger") return IgMetric::Hellinger;
    if (name == "tv") return IgMetric::TotalVariation;
    throw validation_error("unknown metric '" + name +
                           "' (want fisher-rao, hellinger, or tv)");
}

qsim::Statevector quantig(const seqio::DnaSequence& seq,
                          const seqio::DnaSequence& ref, IgMetric metric,
                          std::optional<double> smoothing) {
    if (seq.size() != ref.size()) {
        throw validation_error("sequence and reference must have equal length");
    }
    info::ProbDist4 p = info::base_distribution(seq);
    info::ProbDist4 q = info::base_distribution(ref);
    if (smoothing) {
        p = p.smoothed(*smoothing);
        q = q.smoothed(*smoothing);
    }

    std::array<double, 4> g{};
    switch (metric) {
        case IgMetric::FisherRao:
            g = info::fisher_rao_diag(p, q);
            break;
        case IgMetric::Hellinger:
            for (std::size_t i = 0; i < 4; ++i) {
                const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
                g[i] = d * d;
            }
            break;
        case IgMetric::TotalVariation:
            for (std::size_t i = 0; i < 4; ++i) g[i] = std::abs(p[i] - q[i]);
            break;
    }

    // L^(-1/2) G L^(-1/2) applied to the uniform two-qubit state.
    std::array<double, 4> raw{};
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] <= 0.0) {
            throw validation_error(
                "zero probability encountered; enable smoothing for quantig");
        }
        raw[i] = 0.5 * g[i] / std::sqrt(p[i]);
        norm_sq += raw[i] * raw[i];
    }
    if (norm_sq == 0.0) {
        throw validation_error(
            "degenerate encoding: metric diagonal vanished (identical distributions)");
    }
    std::vector<qsim::cdouble> amps(4);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < 4; ++i) amps[i] = raw[i] * inv;
    return qsim::Statevector(2, std::move(amps));
}

std::string segment_report_to_json(const SegmentReport& report) {
    std::ostringstream os;
    os << "{\"segment_size\": " << report.segment_size
       << ", \"segment_count\": " << report.segment_count << ", \"segments\": [";
    bool first = true;
    for (const Segment& s : report.segments) {
        if (!first) os << ", ";
        first = false;
        os << "{\"bases\": \"" << s.bases << "\", \"distribution\": [";
        for (std::size_t i = 0; i < 4; ++i) {
            if (i > 0) os << ", ";
            os << emit::fmt_double(s.distribution[i]);
        }
        os << "], \"entropy\": " << emit::fmt_double(s.entropy)
           << ", \"normalized_entropy\": " << emit::fmt_double(s.normalized_entropy)
           << ", \"rank\": " << s.rank << '}';
    }
    os << "]}\n";
    return os.str();
}

std::string budget_to_json(const EncodeBudget& budget) {
    std::ostringstream os;
    os << "{\"divergence\": " << emit::fmt_double(budget.divergence)
       << ", \"alpha\": " << emit::fmt_double(budget.alpha)
       << ", \"n_qubits\": " << budget.n_qubits << "}\n";
    return os.str();
}

}  // namespace genoq::entenc
