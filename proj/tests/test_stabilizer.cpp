#include <doctest.h>

#include <set>

#include "swc/moments.hpp"
#include "swc/phase_space.hpp"
#include "swc/stabilizer.hpp"

using namespace swc;

TEST_CASE("Lagrangian counts") {
    CHECK(enumerate_lagrangians(1, 2).size() == 3);
    CHECK(enumerate_lagrangians(2, 2).size() == 15);
    CHECK(enumerate_lagrangians(2, 3).size() == 40);
    for (const auto& M : enumerate_lagrangians(2, 3)) {
        CHECK(M.dim() == 2);
        CHECK(complement(M, FormKind::symplectic) == M);
    }
}

TEST_CASE("stabilizer state counts") {
    const std::vector<std::pair<int, int>> cases = {{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 5}};
    for (auto [n, d] : cases) {
        const auto& ens = enumerate_stabilizer_states(n, d);
        CHECK(BigInt(ens.states.size()) == stabilizer_count(n, d));
    }
    CHECK(stabilizer_count(1, 2) == 6);
    CHECK(stabilizer_count(2, 2) == 60);
    CHECK_THROWS(check_stabilizer_envelope(4, 5));
}

TEST_CASE("reference states") {
    auto ref = reference_state(span_of({{1, 0}}, 2, 2));  // Z-span
    CHECK(std::abs(ref.vector(0)) == doctest::Approx(1.0));
    ref = reference_state(span_of({{0, 1}}, 2, 2));  // X-span
    CHECK(std::abs(ref.vector(0) - ref.vector(1)) < 1e-12);
    CHECK(std::abs(ref.vector(0)) == doctest::Approx(1 / std::sqrt(2.0)));

    PhaseSpace ps{2, 3};
    for (const auto& M : enumerate_lagrangians(2, 3)) {
        auto s = reference_state(M);
        auto c = characteristic_function(s.vector, 2, 3);
        for (long long i = 0; i < ps.size(); ++i) {
            if (M.contains(ps.point(i)))
                CHECK(std::abs(c[i]) == doctest::Approx(1.0 / 3));
            else
                CHECK(std::abs(c[i]) < 1e-12);
        }
    }
}

TEST_CASE("overlaps and orthonormal translates") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
        CMat S = enumerate_stabilizer_states(n, d).matrix();
        CMat G = S.adjoint() * S;
        long long per = ipow(d, n);
        for (long long i = 0; i < G.rows(); ++i)
            for (long long j = 0; j < G.cols(); ++j) {
                double v = std::norm(G(i, j));
                if (i == j) {
                    CHECK(v == doctest::Approx(1.0));
                } else {
                    CHECK(v <= 1.0 / d + 1e-12);
                    if (i / per == j / per) CHECK(v < 1e-20);
                }
            }
    }
    // single qubit: {0, 1/2}
    CMat S = enumerate_stabilizer_states(1, 2).matrix();
    CMat G = S.adjoint() * S;
    for (long long i = 0; i < 6; ++i)
        for (long long j = 0; j < 6; ++j)
            if (i != j) {
                double v = std::norm(G(i, j));
                CHECK((v < 1e-12 || std::abs(v - 0.5) < 1e-12));
            }
}

TEST_CASE("odd-d Wigner functions of stabilizer states are affine indicators") {
    PhaseSpace ps{1, 3};
    for (const auto& s : enumerate_stabilizer_states(1, 3).states) {
        auto w = wigner(s.vector, 1, 3);
        int support = 0;
        for (double v : w) {
            CHECK((std::abs(v) < 1e-12 || std::abs(v - 1.0 / 3) < 1e-12));
            support += v > 1e-6;
        }
        CHECK(support == 3);
    }
}

TEST_CASE("code projectors") {
    // |S| = d^{n-1}: a single Z-type generator on two qudits
    for (int d : {2, 3}) {
        Subspace S = span_of({{1, 1, 0, 0}}, d, 4);
        CMat P = stabilizer_code_projector(S, 2);
        CHECK((P * P - P).norm() < 1e-10);
        CHECK(std::abs(P.trace() - Cx(d)) < 1e-10);
    }
}

TEST_CASE("measurement channel") {
    Rng rng(1);
    const auto& ens = enumerate_stabilizer_states(1, 2);
    for (const auto& s : ens.states) {
        CMat rho = s.vector * s.vector.adjoint();
        CHECK((measurement_channel(s.M, rho) - rho).norm() < 1e-12);
    }
    CVec plus = CVec::Constant(2, 1 / std::sqrt(2.0));
    CMat out = measurement_channel(span_of({{1, 0}}, 2, 2), plus * plus.adjoint());
    CHECK((out - CMat::Identity(2, 2) / 2.0).norm() < 1e-12);

    PhaseSpace ps{2, 3};
    for (int trial = 0; trial < 5; ++trial) {
        CVec psi = haar_state(9, rng);
        auto p = char_distribution(psi, 2, 3);
        for (const auto& M : enumerate_lagrangians(2, 3)) {
            CMat L = measurement_channel(M, psi * psi.adjoint());
            double purity = (L * L).trace().real(), mass = 0;
            for (long long i = 0; i < ps.size(); ++i)
                if (M.contains(ps.point(i))) mass += p[i];
            CHECK(std::abs(purity - mass) < 1e-10);
        }
    }
}

TEST_CASE("maximal stabilizer overlap") {
    const auto& ens = enumerate_stabilizer_states(2, 3);
    CHECK(max_stabilizer_overlap(ens.states[17].vector, 2, 3).value == doctest::Approx(1.0));
    CVec t(2);
    t << 1, std::polar(1.0, kPi / 4);
    t /= std::sqrt(2.0);
    CHECK(max_stabilizer_overlap(t, 1, 2).value == doctest::Approx((1 + 1 / std::sqrt(2.0)) / 2));
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(max_stabilizer_overlap(haar_state(4, rng), 2, 2).value >= 0.25 - 1e-12);
}

TEST_CASE("sampling") {
    Rng a(77), b(77);
    CHECK(sample_stabilizer_index(2, 3, a) == sample_stabilizer_index(2, 3, b));

    Rng rng(6);
    std::vector<int> freq(6, 0);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++freq[sample_stabilizer_index(1, 2, rng)];
    double chi2 = 0, e = draws / 6.0;
    for (int f : freq) chi2 += (f - e) * (f - e) / e;
    CHECK(chi2 < 25);  // 5 degrees of freedom, far tail

    CMat emp = CMat::Zero(16, 16);
    for (int i = 0; i < draws; ++i) {
        CVec v = kron_vec_power(sample_stabilizer(2, 2, rng).vector, 2);
        emp += v * v.adjoint();
    }
    emp /= draws;
    CHECK((emp - moment_formula(2, 2, 2).op).norm() < 5e-2);
}
