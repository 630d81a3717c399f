#include "genoq/compress.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "genoq/errors.hpp"
#include "genoq/oracles.hpp"

using namespace genoq;

namespace {

const char* kM13 = "CAGGAAACAGCTATGACC";

seqio::DnaSequence random_seq(qsim::Rng& rng, std::size_t max_len) {
    const char bases[] = {'A', 'C', 'G', 'T'};
    const std::size_t len = 1 + rng.uniform_u64(max_len);
    std::string text;
    for (std::size_t i = 0; i < len; ++i) text += bases[rng.uniform_u64(4)];
    return seqio::DnaSequence::parse(text);
}

bool prefix_free(const std::map<char, std::string>& codes) {
    for (const auto& [b1, c1] : codes) {
        for (const auto& [b2, c2] : codes) {
            if (b1 != b2 && c2.rfind(c1, 0) == 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("quanthuff reproduces the worked M13 codebook") {
    const auto seq = seqio::DnaSequence::parse(kM13);
    const auto result = compress::quanthuff(seq);
    const auto& book = result.codebook;
    CHECK(book.counts.at('C') == 5);
    CHECK(book.counts.at('A') == 7);
    CHECK(book.counts.at('G') == 4);
    CHECK(book.counts.at('T') == 2);
    for (const auto& [base, code] : book.code) CHECK(code.size() == 2);
    CHECK(book.code.at('T') == "00");
    CHECK(book.code.at('G') == "01");
    CHECK(book.code.at('C') == "10");
    CHECK(book.code.at('A') == "11");
    CHECK(book.total_bits == 36);
    CHECK(!result.state.has_value());  // 36 qubits exceed the default cap
}

TEST_CASE("quanthuff handles degenerate alphabets") {
    const auto single = compress::quanthuff(seqio::DnaSequence::parse("AAAA"));
    CHECK(single.codebook.code.at('A') == "0");
    CHECK(single.codebook.total_bits == 4);
    REQUIRE(single.state.has_value());
    CHECK(single.state->n_qubits() == 4);
    CHECK(std::abs(single.state->amps()[0] - 1.0) < 1e-12);

    const auto pair = compress::quanthuff(seqio::DnaSequence::parse("AATT"));
    CHECK(pair.codebook.code.at('A').size() == 1);
    CHECK(pair.codebook.code.at('T').size() == 1);
    CHECK(pair.codebook.total_bits == 4);
}

TEST_CASE("quanthuff state tensors the per-base codes") {
    // ACGT -> 11 10 01 00 under the cascade ranking (all counts tie at 1,
    // so ranks are alphabetical: A=00.. wait, ranks tie-break alphabetically)
    const auto result = compress::quanthuff(seqio::DnaSequence::parse("ACGT"));
    REQUIRE(result.state.has_value());
    // A<C<G<T with equal counts: A=00, C=01, G=10, T=11, so the register
    // reads 00 01 10 11.
    const std::uint64_t want = 0b00011011;
    CHECK(std::abs(result.state->amps()[want] - 1.0) < 1e-12);
}

TEST_CASE("classic huffman beats the cascade tree on M13") {
    const auto seq = seqio::DnaSequence::parse(kM13);
    const auto classic = compress::classic_huffman(seq);
    CHECK(classic.total_bits == 35);
    CHECK(classic.code.at('A').size() == 1);
    CHECK(classic.total_bits <= compress::quanthuff(seq).codebook.total_bits);

    CHECK(compress::classic_huffman(seqio::DnaSequence::parse("AAAA")).total_bits == 4);

    const auto uniform = compress::classic_huffman(seqio::DnaSequence::parse("ATCG"));
    for (const auto& [base, code] : uniform.code) CHECK(code.size() == 2);
}

TEST_CASE("codebooks are prefix-free and account every bit") {
    qsim::Rng rng(777);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto seq = random_seq(rng, 48);
        const auto cascade = compress::quanthuff(seq, 0).codebook;
        const auto classic = compress::classic_huffman(seq);
        CHECK(prefix_free(cascade.code));
        CHECK(prefix_free(classic.code));
        CHECK(classic.total_bits <= cascade.total_bits);

        std::uint64_t want = 0;
        for (const auto& [base, count] : cascade.counts) {
            want += count * cascade.code.at(base).size();
        }
        CHECK(cascade.total_bits == want);
    }
}

TEST_CASE("bwt of a homogeneous string is forced") {
    const auto result = compress::bwt(seqio::DnaSequence::parse("AAAA"));
    CHECK(result.transformed == "AAAA$");
    CHECK(result.primary_index == 4);
    CHECK(compress::ibwt(result).str() == "AAAA");
}

TEST_CASE("bwt matches the rotation-sort oracle on the worked input") {
    const std::string text = "ACTGACGTAGC";
    const auto got = compress::bwt(seqio::DnaSequence::parse(text));
    const auto want = oracle::rotation_sort_bwt(text);
    CHECK(got.transformed == want.transformed);
    CHECK(got.primary_index == want.primary_index);
    CHECK(compress::ibwt(got).str() == text);
}

TEST_CASE("bwt roundtrips and agrees with the oracle on random inputs") {
    qsim::Rng rng(2025);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto seq = random_seq(rng, 64);
        const auto got = compress::bwt(seq);
        const auto want = oracle::rotation_sort_bwt(seq.str());
        CHECK(got.transformed == want.transformed);
        CHECK(got.primary_index == want.primary_index);
        CHECK(compress::ibwt(got).str() == seq.str());
    }
}

TEST_CASE("ibwt validates the sentinel") {
    CHECK_THROWS_AS(compress::ibwt({"ACGT", 0}), validation_error);
    CHECK_THROWS_AS(compress::ibwt({"A$G$", 1}), validation_error);
    CHECK_THROWS_AS(compress::ibwt({"AC$T", 0}), validation_error);  // wrong index
}

TEST_CASE("bwt json roundtrip") {
    const auto result = compress::bwt(seqio::DnaSequence::parse("GATTACA"));
    const auto back = compress::bwt_from_json(compress::bwt_to_json(result));
    CHECK(back.transformed == result.transformed);
    CHECK(back.primary_index == result.primary_index);
    CHECK_THROWS_AS(compress::bwt_from_json("{}"), validation_error);
}

TEST_CASE("qbwt full-rotation case concentrates on the zero state") {
    const auto result = compress::qbwt_encode(seqio::DnaSequence::parse("AAAA"),
                                              64, 3);
    REQUIRE(result.counts.size() == 1);
    CHECK(result.counts.at("0000") == 64);
    CHECK(std::abs(std::abs(result.state.amps()[0]) - 1.0) < 1e-12);
}

TEST_CASE("qbwt sampling tracks the analytic all-zero probability") {
    qsim::Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto seq = random_seq(rng, 10);
        const std::uint64_t shots = 1024;
        const auto result = compress::qbwt_encode(seq, shots, 1000 + rep);

        std::map<char, std::uint64_t> counts;
        for (char b : seq) ++counts[b];
        double p_zero = 1.0;
        for (char c : result.transform.transformed) {
            if (c == '$') continue;
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(counts[c]) /
                static_cast<double>(seq.size());
            const double amp = std::cos(theta / 2.0);
            p_zero *= amp * amp;
        }
        const std::string zero_key(seq.size(), '0');
        const auto it = result.counts.find(zero_key);
        const double freq =
            it == result.counts.end()
                ? 0.0
                : static_cast<double>(it->second) / static_cast<double>(shots);
        const double sigma =
            std::sqrt(std::max(p_zero * (1.0 - p_zero), 1e-12) /
                      static_cast<double>(shots));
        CHECK(std::abs(freq - p_zero) <= 3.0 * sigma + 1e-9);
    }
}

TEST_CASE("qbwt is deterministic and phase-invariant") {
    const auto seq = seqio::DnaSequence::parse("ACTGACGTAGC");
    const auto a = compress::qbwt_encode(seq, 512, 42);
    const auto b = compress::qbwt_encode(seq, 512, 42);
    CHECK(a.counts == b.counts);

    // strip the recorded global phase; counts must not move
    auto unphased = a.state;
    const qsim::cdouble conj = std::polar(1.0, -a.global_phase);
    for (auto& amp : unphased.amps()) amp *= conj;
    CHECK(qsim::sample_counts(unphased, 512, 42) == a.counts);
}

TEST_CASE("qbwt respects the qubit cap") {
    CHECK_THROWS_AS(
        compress::qbwt_encode(seqio::DnaSequence::parse(std::string(30, 'A')), 16, 0),
        cap_error);
}

TEST_CASE("quanthuff stays fast at desk scale") {
    const auto seq = seqio::DnaSequence::parse(kM13);
    const auto begin = std::chrono::steady_clock::now();
    const auto result = compress::quanthuff(seq, 0);
    const auto end = std::chrono::steady_clock::now();
    CHECK(result.codebook.total_bits == 36);
    CHECK(std::chrono::duration<double, std::milli>(end - begin).count() < 1.0);
}
