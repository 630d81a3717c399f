#include "genoq/qsim.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "genoq/errors.hpp"
#include "genoq/oracles.hpp"

using namespace genoq;
using qsim::cdouble;

namespace {

qsim::Statevector random_state(int n, qsim::Rng& rng) {
    std::vector<cdouble> amps(1ull << n);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = {rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0)};
        norm_sq += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm_sq);
    return qsim::Statevector(n, std::move(amps));
}

double max_amp_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("basis_state places a single unit amplitude") {
    const auto one = qsim::basis_state(1, 0);
    CHECK(one.amps()[0] == cdouble{1.0, 0.0});
    CHECK(one.amps()[1] == cdouble{0.0, 0.0});

    const auto three = qsim::basis_state(2, 3);
    for (int i = 0; i < 3; ++i) CHECK(three.amps()[i] == cdouble{0.0, 0.0});
    CHECK(three.amps()[3] == cdouble{1.0, 0.0});

    CHECK_THROWS_AS(qsim::basis_state(3, 8), validation_error);
    CHECK_THROWS_AS(qsim::basis_state(25, 0), cap_error);
    CHECK_THROWS_AS(qsim::basis_state(0, 0), validation_error);
}

TEST_CASE("rotation gates follow cos - i sin pauli form") {
    const auto rz0 = qsim::Gate::rotation(qsim::Axis::Z, 0.0);
    CHECK(rz0.matrix()[0] == cdouble{1.0, 0.0});
    CHECK(rz0.matrix()[3] == cdouble{1.0, 0.0});
    CHECK(rz0.matrix()[1] == cdouble{0.0, 0.0});

    // RX(pi) = -i X
    const auto rx = qsim::Gate::rotation(qsim::Axis::X, std::numbers::pi);
    CHECK(std::abs(rx.matrix()[0]) < 1e-15);
    CHECK(std::abs(rx.matrix()[1] - cdouble{0.0, -1.0}) < 1e-15);
    CHECK(std::abs(rx.matrix()[2] - cdouble{0.0, -1.0}) < 1e-15);

    // RY(pi)|0> = |1>
    const auto flipped = qsim::apply_gate(
        qsim::basis_state(1, 0), qsim::Gate::rotation(qsim::Axis::Y, std::numbers::pi),
        {0});
    CHECK(std::abs(flipped.amps()[0]) < 1e-15);
    CHECK(std::abs(flipped.amps()[1] - cdouble{1.0, 0.0}) < 1e-15);

    CHECK_THROWS_AS(qsim::Gate::rotation(qsim::Axis::X, NAN), validation_error);
}

TEST_CASE("gate construction rejects non-unitary matrices") {
    CHECK_THROWS_AS(qsim::Gate::single({1.0, 0.0, 0.0, 2.0}), validation_error);
    const qsim::Gate gates[] = {qsim::Gate::h(),  qsim::Gate::x(),
                                qsim::Gate::y(),  qsim::Gate::z(),
                                qsim::Gate::s(),  qsim::Gate::t(),
                                qsim::Gate::cnot(), qsim::Gate::cz(),
                                qsim::Gate::swap_gate(),
                                qsim::Gate::rotation(qsim::Axis::Y, 1.234),
                                qsim::Gate::cphase(0.777)};
    // construction itself enforced unitarity to 1e-10
    for (const auto& gate : gates) CHECK(gate.arity() >= 1);
}

TEST_CASE("apply_gate embeds on the right qubits") {
    const auto plus = qsim::apply_gate(qsim::basis_state(1, 0), qsim::Gate::h(), {0});
    CHECK(std::abs(plus.amps()[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(plus.amps()[1] - 1.0 / std::numbers::sqrt2) < 1e-15);

    const auto flipped =
        qsim::apply_gate(qsim::basis_state(2, 0), qsim::Gate::x(), {1});
    CHECK(std::abs(flipped.amps()[1] - 1.0) < 1e-15);  // |01>

    const auto cnot =
        qsim::apply_gate(qsim::basis_state(2, 2), qsim::Gate::cnot(), {0, 1});
    CHECK(std::abs(cnot.amps()[3] - 1.0) < 1e-15);  // |10> -> |11>

    const auto state = qsim::basis_state(2, 0);
    CHECK_THROWS_AS(qsim::apply_gate(state, qsim::Gate::h(), {2}), validation_error);
    CHECK_THROWS_AS(qsim::apply_gate(state, qsim::Gate::cnot(), {0, 0}),
                    validation_error);
    CHECK_THROWS_AS(qsim::apply_gate(state, qsim::Gate::cnot(), {0}),
                    validation_error);
}

TEST_CASE("tensor puts the first factor on the significant side") {
    const auto zero = qsim::basis_state(1, 0);
    const auto one = qsim::basis_state(1, 1);
    const auto z_o = qsim::tensor(zero, one);
    CHECK(std::abs(z_o.amps()[1] - 1.0) < 1e-15);  // |01>

    const auto plus = qsim::apply_gate(zero, qsim::Gate::h(), {0});
    const auto p_z = qsim::tensor(plus, zero);
    CHECK(std::abs(p_z.amps()[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(p_z.amps()[2] - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(p_z.amps()[1]) < 1e-15);

    const auto minus = qsim::apply_gate(one, qsim::Gate::h(), {0});
    const auto p_m = qsim::tensor(plus, minus);
    for (int i = 0; i < 4; ++i) {
        const double want = i % 2 == 0 ? 0.5 : -0.5;
        CHECK(std::abs(p_m.amps()[i] - want) < 1e-15);
    }

    CHECK_THROWS_AS(qsim::tensor(qsim::basis_state(12, 0), qsim::basis_state(13, 0)),
                    cap_error);
}

TEST_CASE("qft of the all-zero state is the uniform superposition") {
    const auto out = qsim::apply_qft(qsim::basis_state(3, 0));
    const double want = 1.0 / std::sqrt(8.0);
    for (const auto& a : out.amps()) {
        CHECK(std::abs(a.real() - want) < 1e-12);
        CHECK(std::abs(a.imag()) < 1e-12);
    }
}

TEST_CASE("single-qubit qft equals the hadamard") {
    for (std::uint64_t idx : {0ull, 1ull}) {
        const auto got = qsim::apply_qft(qsim::basis_state(1, idx));
        const auto want = qsim::apply_gate(qsim::basis_state(1, idx),
                                           qsim::Gate::h(), {0});
        CHECK(max_amp_diff(got.amps(), want.amps()) < 1e-15);
    }
}

TEST_CASE("qft matches the dense dft oracle") {
    // the worked |011> case plus random states across sizes
    const auto basis = qsim::basis_state(3, 3);
    CHECK(max_amp_diff(qsim::apply_qft(basis).amps(),
                       oracle::dense_dft_apply(basis.amps())) < 1e-12);

    qsim::Rng rng(99);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto in = random_state(n, rng);
            CHECK(max_amp_diff(qsim::apply_qft(in).amps(),
                               oracle::dense_dft_apply(in.amps())) < 1e-10);
        }
    }
}

TEST_CASE("gates and qft preserve the norm") {
    qsim::Rng rng(4242);
    auto state = random_state(5, rng);
    const qsim::Gate gates[] = {qsim::Gate::h(), qsim::Gate::t(),
                                qsim::Gate::rotation(qsim::Axis::X, 0.37)};
    for (const auto& gate : gates) {
        state = qsim::apply_gate(state, gate, {static_cast<int>(rng.uniform_u64(5))});
        CHECK(std::abs(state.norm_sq() - 1.0) < 1e-9);
    }
    state = qsim::apply_gate(state, qsim::Gate::cnot(), {1, 3});
    state = qsim::apply_qft(state);
    CHECK(std::abs(state.norm_sq() - 1.0) < 1e-9);
}

TEST_CASE("sampling a basis state returns a single key") {
    const auto counts = qsim::sample_counts(qsim::basis_state(2, 3), 1024, 1);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("11") == 1024);
    CHECK_THROWS_AS(qsim::sample_counts(qsim::basis_state(1, 0), 0, 1),
                    validation_error);
}

TEST_CASE("hadamard sampling is balanced and seed-stable") {
    const auto plus = qsim::apply_gate(qsim::basis_state(1, 0), qsim::Gate::h(), {0});
    const auto counts = qsim::sample_counts(plus, 1024, 7);
    REQUIRE(counts.size() == 2);
    CHECK(counts.at("0") + counts.at("1") == 1024);
    CHECK(std::llabs(static_cast<long long>(counts.at("0")) - 512) <= 48);  // 3 sigma
    // golden values frozen from the pinned mt19937_64 stream
    CHECK(counts.at("0") == 527);
    CHECK(counts.at("1") == 497);

    CHECK(qsim::sample_counts(plus, 1024, 7) == counts);  // determinism
}

TEST_CASE("global phase never shows up in counts") {
    qsim::Rng rng(5150);
    const auto state = random_state(4, rng);
    auto rotated = state;
    const cdouble phase = std::polar(1.0, 1.2345);
    for (auto& a : rotated.amps()) a *= phase;
    CHECK(qsim::sample_counts(state, 2048, 11) ==
          qsim::sample_counts(rotated, 2048, 11));
}

TEST_CASE("state json roundtrips exactly") {
    qsim::Rng rng(8);
    const auto state = random_state(3, rng);
    const std::string dump = qsim::state_to_json(state);
    const auto back = qsim::state_from_json(dump);
    CHECK(back.n_qubits() == 3);
    CHECK(max_amp_diff(back.amps(), state.amps()) == 0.0);  // 17 digits round-trip

    CHECK_THROWS_AS(qsim::state_from_json("{"), validation_error);
    CHECK_THROWS_AS(qsim::state_from_json("{\"n_qubits\": 2, \"amplitudes\": [[1,0]]}"),
                    validation_error);
}
