#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "genoq/seqio.hpp"

namespace genoq::info {

inline constexpr double kDefaultSmoothing = 1e-9;

/// Probability distribution over the bases in A, C, G, T order.
class ProbDist4 {
public:
    explicit ProbDist4(const std::array<double, 4>& p);

    double operator[](std::size_t i) const { return p_[i]; }
    double at(char base) const;
    const std::array<double, 4>& values() const { return p_; }

    /// (p + eps) / (1 + 4 eps) on every component.
    ProbDist4 smoothed(double eps) const;

    bool operator==(const ProbDist4&) const = default;

private:
    std::array<double, 4> p_;
};

inline constexpr std::array<char, 4> kBases = {'A', 'C', 'G', 'T'};

ProbDist4 base_distribution(const seqio::DnaSequence& seq);

/// -sum p log2 p, with 0 log 0 = 0.
double shannon_entropy(const ProbDist4& p);

/// sum p ln(p/q), natural log. Throws when q vanishes on p's support and
/// no smoothing was requested.
double kl_divergence(const ProbDist4& p, const ProbDist4& q,
                     std::optional<double> smoothing = std::nullopt);

/// Jensen-Shannon divergence in log base 2; lies in [0, 1].
double js_divergence(const ProbDist4& p, const ProbDist4& q);

/// -ln sum sqrt(p q). Throws when the distributions share no support.
double bhattacharyya(const ProbDist4& p, const ProbDist4& q);

/// sqrt(1/2 sum (sqrt p - sqrt q)^2); lies in [0, 1].
double hellinger(const ProbDist4& p, const ProbDist4& q);

/// W1 under the 0/1 ground metric over the four bases, which equals the
/// total variation distance 1/2 sum |p - q|.
double tv_wasserstein(const ProbDist4& p, const ProbDist4& q);

/// Diagonal coefficients 1 / (p(b) q(b)) in A, C, G, T order. Throws on any
/// zero probability; callers wanting a total function should smooth first.
std::array<double, 4> fisher_rao_diag(const ProbDist4& p, const ProbDist4& q);

std::uint64_t hamming(const seqio::DnaSequence& s, const seqio::DnaSequence& t);

}  // namespace genoq::info
