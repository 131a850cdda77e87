#include <doctest.h>

#include "swc/commutant.hpp"
#include "swc/moments.hpp"
#include "swc/stabilizer.hpp"

using namespace swc;

TEST_CASE("normalizations") {
    CHECK(moment_normalization(1, 2, 2) == 2 * 3);
    CHECK(moment_normalization(2, 3, 3) == 9 * 10 * 12);
    CHECK(haar_normalization(4, 3) == 4 * 5 * 6);
}

TEST_CASE("moment formula equals the ensemble average") {
    const std::vector<std::tuple<int, int, int>> cases = {{1, 2, 2}, {1, 2, 3}, {2, 2, 3}, {1, 3, 3}, {2, 3, 2}, {1, 5, 2}};
    for (auto [n, d, t] : cases) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(t);
        CMat a = moment_bruteforce(n, d, t).op, b = moment_formula(n, d, t).op;
        CHECK((a - b).norm() < 1e-10);
        CHECK(std::abs(b.trace() - 1.0) < 1e-10);
    }
}

TEST_CASE("Haar moments") {
    CMat h = haar_moment(3, 2).op;
    CMat sym = (CMat::Identity(9, 9) + permutation_operator(3, {1, 0})) / 12.0;
    CHECK((h - sym).norm() < 1e-12);
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("design gaps") {
    CHECK(design_gap(1, 2, 3) < 1e-10);
    CHECK(design_gap(2, 2, 3) < 1e-10);
    CHECK(design_gap(2, 3, 2) < 1e-10);
    CHECK(design_gap(2, 2, 4) == doctest::Approx(0.0517549169507).epsilon(1e-9));
    CHECK(design_gap(2, 3, 3) == doctest::Approx(0.0366987921709).epsilon(1e-9));
    // Gram route agrees with the dense route
    CHECK(design_gap(2, 2, 4, 0) == doctest::Approx(design_gap(2, 2, 4, 1 << 20)).epsilon(1e-9));
}

TEST_CASE("Haar coefficients reproduce the Haar moment") {
    int t = 3, d = 2, n = 1;
    RVec c = haar_coefficients(t, d, n);
    const auto& sig = enumerate_sigma(t, d);
    CMat op = CMat::Zero(8, 8);
    for (size_t i = 0; i < sig.size(); ++i) op += c(static_cast<long long>(i)) * R_of_T(sig[i], n);
    CHECK((op - haar_moment(2, 3).op).norm() < 1e-12);
    auto mask = permutation_mask(t, d);
    for (size_t i = 0; i < sig.size(); ++i)
        if (!mask[i]) CHECK(std::abs(c(static_cast<long long>(i))) < 1e-12);
}

TEST_CASE("orbit moments") {
    Rng rng(3);
    CVec psi = haar_state(4, rng);
    auto om = orbit_moment(psi, 2, 2, 3);
    CMat exact = orbit_moment_operator(om).op;
    CHECK(std::abs(exact.trace() - 1.0) < 1e-10);
    // stabilizer input gives the stabilizer moment
    CVec s = enumerate_stabilizer_states(2, 2).states[5].vector;
    CMat so = orbit_moment_operator(orbit_moment(s, 2, 2, 3)).op;
    CHECK((so - moment_formula(2, 2, 3).op).norm() < 1e-9);
    CHECK_THROWS(orbit_moment(psi, 2, 2, 4));
    // sampled orbit
    CMat mc = monte_carlo_orbit_moment(psi, 2, 2, 3, 3000, 80, rng);
    CHECK((mc - exact).norm() < 5e-2);
}

TEST_CASE("equivalence classes") {
    auto cls = equivalence_classes(4, 3);
    REQUIRE(cls.size() >= 2);
    CHECK(cls[0].size() == 24);
    size_t total = 0;
    for (const auto& c : cls) total += c.size();
    CHECK(total == 80);
    for (const auto& T : enumerate_sigma(3, 3)) CHECK(transpose_subspace(transpose_subspace(T)) == T);
}

TEST_CASE("orbit designs") {
    Rng rng(2017);
    auto seeds = design_seed_ensemble(3, 3, 64, rng);
    auto des = find_design_weights(seeds, 3, 3, 2);
    CHECK(des.fiducials.size() <= 2);
    CHECK(des.frobenius_gap < 1e-8);
    double w = 0;
    for (double x : des.weights) {
        CHECK(x >= 0);
        w += x;
    }
    CHECK(w == doctest::Approx(1.0));
}

TEST_CASE("qutrit fiducial") {
    auto f = qutrit_fiducial_search(2);
    CHECK(f.theta == doctest::Approx(0.399769).epsilon(1e-5));
    CHECK(f.target == doctest::Approx(0.522233).epsilon(1e-5));
    CHECK(std::abs(f.value - f.target) < 1e-9);
    auto [plus, minus] = qutrit_third_moment_dims(2);
    CHECK(plus == doctest::Approx(5.0));
    CHECK(minus == doctest::Approx(4.0));
}

TEST_CASE("nnls") {
    RMat A(3, 2);
    A << 1, 0, 0, 1, 1, 1;
    RVec b(3);
    b << 1, -1, 0;
    RVec x = nnls(A, b);
    CHECK(x(0) == doctest::Approx(0.5));
    CHECK(x(1) == doctest::Approx(0.0));
    b << 1, 2, 3;
    x = nnls(A, b);
    CHECK(x(0) == doctest::Approx(1.0));
    CHECK(x(1) == doctest::Approx(2.0));
}
