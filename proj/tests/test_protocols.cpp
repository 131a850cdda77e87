#include <doctest.h>

#include <numeric>

#include "swc/clifford.hpp"
#include "swc/phase_space.hpp"
#include "swc/protocols.hpp"
#include "swc/stabilizer.hpp"

using namespace swc;

namespace {

CVec t_state() {
    CVec t(2);
    t << 1, std::polar(1.0, kPi / 4);
    t /= std::sqrt(2.0);
    return t;
}

}  // namespace

TEST_CASE("qubit test completeness") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& s : enumerate_stabilizer_states(n, 2).states) {
            CHECK(qubit_accept_probability(s.vector, n) == doctest::Approx(1.0).epsilon(1e-12));
        }
    for (const auto& s : enumerate_stabilizer_states(1, 2).states)
        CHECK(qubit_accept_probability_commutant(s.vector, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("T state acceptance") {
    CVec T = t_state();
    CHECK(qubit_accept_probability(T, 1) == doctest::Approx(13.0 / 16).epsilon(1e-12));
    CHECK(qubit_accept_probability_commutant(T, 1) == doctest::Approx(13.0 / 16).epsilon(1e-12));
    auto rep = simulate_qubit_test(T, 1, 20000, 99);
    CHECK(rep.shots == 20000);
    double sigma = std::sqrt(13.0 / 16 * 3.0 / 16 / 20000);
    CHECK(std::abs(rep.p_accept - 13.0 / 16) < 4 * sigma);
}

TEST_CASE("qubit soundness") {
    Rng rng(31);
    for (int n = 1; n <= 2; ++n)
        for (int k = 0; k < 200; ++k) {
            CVec v = haar_state(ipow(2, n), rng);
            double e2 = 1 - max_stabilizer_overlap(v, n, 2).value;
            CHECK(qubit_accept_probability(v, n) <= 1 - e2 / 4 + 1e-12);
        }
}

TEST_CASE("Bell difference sampling") {
    Rng rng(5);
    for (int n = 1; n <= 2; ++n) {
        CVec psi = haar_state(ipow(2, n), rng);
        auto dist = bell_difference_distribution(psi, n);
        CHECK(dist.route_gap < 1e-12);
        CHECK(std::accumulate(dist.prob.begin(), dist.prob.end(), 0.0) == doctest::Approx(1.0));
        auto single = bell_sampling_distribution(psi, n);
        CHECK(std::accumulate(single.begin(), single.end(), 0.0) == doctest::Approx(1.0));
    }
    for (int a = 0; a < 4; ++a) {
        Vec x = {a / 2, a % 2};
        CMat P = bell_difference_projector(1, x), Q = bell_difference_projector_weyl(1, x);
        CHECK((P - Q).norm() < 1e-12);
        CHECK((P * P - P).norm() < 1e-12);
    }
}

TEST_CASE("qudit test") {
    CHECK(is_hermitian_unitary(qudit_V(1, 3, 2)));
    for (int n = 1; n <= 2; ++n) {
        for (const auto& s : enumerate_stabilizer_states(n, 3).states)
            CHECK(qudit_accept_probability(s.vector, n, 3, 2) == doctest::Approx(1.0).epsilon(1e-12));
    }
    Rng rng(8);
    CVec psi = haar_state(3, rng);
    CHECK(qudit_accept_probability(psi, 1, 3, 2) ==
          doctest::Approx(qudit_accept_probability_dense(psi, 1, 3, 2)).epsilon(1e-10));
    CHECK(qudit_constant(3, 2) > 0);
    for (int k = 0; k < 200; ++k) {
        CVec v = haar_state(3, rng);
        double e2 = 1 - max_stabilizer_overlap(v, 1, 3).value;
        CHECK(qudit_accept_probability(v, 1, 3, 2) <= 1 - qudit_constant(3, 2) * e2 + 1e-12);
    }
}

TEST_CASE("three-copy test") {
    for (int d : {5, 7}) {
        CHECK(is_hermitian_unitary(three_copy_V(1, d)));
        for (const auto& s : enumerate_stabilizer_states(1, d).states)
            CHECK(three_copy_accept_probability(s.vector, 1, d) == doctest::Approx(1.0).epsilon(1e-12));
        Rng rng(d);
        CVec psi = haar_state(d, rng);
        CHECK(three_copy_accept_probability(psi, 1, d) ==
              doctest::Approx(three_copy_accept_probability_dense(psi, 1, d)).epsilon(1e-10));
        double e2 = 1 - max_stabilizer_overlap(psi, 1, d).value;
        CHECK(three_copy_accept_probability(psi, 1, d) <= 1 - e2 / (16.0 * d * d) + 1e-12);
    }
}

TEST_CASE("uncertainty relations") {
    Rng rng(2);
    auto w = uncertainty_weyl_search(1, 2, 200, rng);
    CHECK(w.violations == 0);
    CHECK(w.best <= w.threshold + 1e-12);
    auto p = uncertainty_points_search(1, 3, 200, rng);
    CHECK(p.violations == 0);
    // min(<X>^2, <Z>^2) peaks at 1/2 on the Bloch sphere
    CHECK(qubit_xz_uncertainty_max(400) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("negativity and Hudson") {
    for (const auto& s : enumerate_stabilizer_states(1, 3).states) {
        CHECK(sum_negativity(s.vector, 1, 3) < 1e-12);
        CHECK(mana(s.vector, 1, 3) == doctest::Approx(0.0).scale(1));
    }
    // the qutrit strange state has negative Wigner entries
    CVec strange(3);
    strange << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
    CHECK(sum_negativity(strange, 1, 3) > 0.1);
    CHECK(sum_negativity_abs(strange, 1, 3) == doctest::Approx(sum_negativity(strange, 1, 3)));

    Rng rng(4);
    for (int k = 0; k < 50; ++k) {
        CVec v = haar_state(9, rng);
        auto h = robust_hudson_check(v, 2, 3);
        CHECK(h.robust_ok);
        CHECK(h.holder_ok);
        CHECK(h.deficit <= h.rhs + 1e-12);
    }
}

TEST_CASE("Clifford testing") {
    Rng rng(6);
    auto rc = random_clifford(2, 2, 30, rng);
    auto rep = clifford_test(rc.unitary);
    CHECK(rep.p_accept == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.passed());

    CMat T = CMat::Identity(2, 2);
    T(1, 1) = std::polar(1.0, kPi / 4);
    auto rt = clifford_test(T);
    CHECK(rt.p_accept < 1 - 1e-3);
    CHECK(rt.passed());
    CHECK(choi_state(T).norm() == doctest::Approx(1.0));

    CHECK(technical_inequality_margin(200, 12) >= -1e-12);
}
