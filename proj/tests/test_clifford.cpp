#include <doctest.h>

#include "swc/clifford.hpp"
#include "swc/moments.hpp"

using namespace swc;

TEST_CASE("generator matrices") {
    CMat H(2, 2);
    H << 1, 1, 1, -1;
    H /= std::sqrt(2.0);
    CHECK((fourier_gate(2) - H).norm() < 1e-12);
    CMat P = CMat::Zero(2, 2);
    P(0, 0) = 1;
    P(1, 1) = Cx(0, 1);
    CHECK((phase_gate(2) - P).norm() < 1e-12);

    CMat C = cadd_gate(3);
    for (int r = 0; r < 9; ++r) {
        int ones = 0;
        for (int c = 0; c < 9; ++c) {
            CHECK((std::abs(C(r, c)) < 1e-15 || std::abs(C(r, c) - 1.0) < 1e-15));
            ones += std::abs(C(r, c)) > 0.5;
        }
        CHECK(ones == 1);
    }
}

TEST_CASE("conjugation of Weyl operators") {
    auto id = conjugate_weyl_check(CMat::Identity(2, 2), 1, 2);
    REQUIRE(id.ok);
    CHECK(id.gamma == IMat{{1, 0}, {0, 1}});
    for (auto ph : id.phase) CHECK(std::abs(ph - 1.0) < 1e-12);

    auto h = conjugate_weyl_check(fourier_gate(2), 1, 2);
    REQUIRE(h.ok);
    CHECK(h.gamma == IMat{{0, 1}, {1, 0}});

    for (int d : {2, 3})
        for (int n = 1; n <= 2; ++n)
            for (int q = 0; q < n; ++q)
                for (auto k : {GateKind::F, GateKind::P}) {
                    auto r = conjugate_weyl_check(gate_matrix(Gate{k, {q}}, n, d), n, d);
                    CHECK(r.ok);
                    CHECK(r.symplectic);
                    CHECK(r.linear);
                    for (auto ph : r.phase) CHECK(std::abs(std::abs(ph) - 1.0) < 1e-10);
                    if (d % 2 == 1) CHECK(phase_is_character(r, n, d));
                }
    for (int d : {2, 3}) {
        auto r = conjugate_weyl_check(gate_matrix(Gate{GateKind::CADD, {0, 1}}, 2, d), 2, d);
        CHECK(r.ok);
        CHECK(r.symplectic);
        if (d == 3) CHECK(phase_is_character(r, 2, d));
    }

    Rng rng(21);
    auto rc = random_clifford(2, 3, 20, rng);
    auto r = conjugate_weyl_check(rc.unitary, 2, 3);
    CHECK(r.ok);
    CHECK(is_symplectic(r.gamma, 3));
    CHECK(phase_is_character(r, 2, 3));
}

TEST_CASE("random Clifford words") {
    Rng rng(1);
    auto e = random_clifford(1, 2, 0, rng);
    CHECK(e.word.letters.empty());
    CHECK((e.unitary - CMat::Identity(2, 2)).norm() < 1e-15);

    Rng a(10), b(10);
    auto w1 = random_clifford(1, 2, 10, a), w2 = random_clifford(1, 2, 10, b);
    CHECK((w1.unitary - w2.unitary).norm() == 0.0);
    CHECK((word_matrix(w1.word) - w1.unitary).norm() < 1e-12);

    // orbit of |00> reproduces the stabilizer second moment
    Rng rng2(3);
    CVec zero = CVec::Zero(4);
    zero(0) = 1;
    CMat mc = monte_carlo_orbit_moment(zero, 2, 2, 2, 2000, 80, rng2);
    CHECK((mc - moment_formula(2, 2, 2).op).norm() < 5e-2);
}

TEST_CASE("single-qudit symplectic group") {
    CHECK(enumerate_sp(1, 2).size() == 6);
    auto sp3 = enumerate_sp(1, 3);
    CHECK(sp3.size() == 24);
    for (const auto& g : sp3) {
        CHECK(mod(static_cast<long long>(g[0][0]) * g[1][1] - static_cast<long long>(g[0][1]) * g[1][0], 3) == 1);
        CHECK(is_symplectic(g, 3));
    }
    CHECK(sp_orbit_count(1, 2, 2) == 2);
    CHECK(sp_orbit_count(1, 3, 2) == 2);
    // Z_2^2 x Z_2^2 under diagonal SL(2,2): zero, (0,v), (v,0), (v,v), and two
    // classes of pairs of distinct nonzero vectors
    CHECK(sp_orbit_count(1, 2, 3) == 5);
}

TEST_CASE("gate names") {
    for (auto k : {GateKind::F, GateKind::P, GateKind::CADD, GateKind::W}) CHECK(gate_from_name(gate_name(k)) == k);
    CHECK_THROWS(gate_from_name("toffoli"));
}
