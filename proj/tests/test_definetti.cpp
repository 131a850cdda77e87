#include <doctest.h>

#include "swc/commutant.hpp"
#include "swc/definetti.hpp"
#include "swc/stabilizer.hpp"

using namespace swc;

TEST_CASE("Gram lemma at large t") {
    auto g = gram(1, 2, 20);
    CHECK(g.size() == 6);
    CHECK(g.eps == doctest::Approx(std::pow(2.0, -5.5)));
    CHECK(g.max_offdiag == doctest::Approx(std::pow(2.0, -10)));
    CHECK(g.lemma_applies());
    CHECK(g.claims_hold());
    CHECK(g.rank == 6);
    CHECK(g.opnorm_dev <= g.eps);
    CHECK(g.eig_min >= 1 - 2 * g.eps);
    CHECK(g.eig_max <= 1 + 2 * g.eps);

    auto small = gram(1, 2, 4);
    CHECK_FALSE(small.lemma_applies());
}

TEST_CASE("Gram lemma dense route") {
    auto g = gram(1, 2, 12, true);
    REQUIRE(g.lemma_applies());
    CHECK(g.claims_hold());
    CHECK(g.orthonormality_dev >= 0);
    CHECK(g.orthonormality_dev < 1e-10);
    CHECK(g.q_eig_min >= 1 - 2 * g.eps);
}

TEST_CASE("bounds") {
    CHECK(exp_definetti_bound(1, 2, 24, 2, true) == doctest::Approx(2 * std::pow(2.0, 4.5) * std::pow(2.0, -11)));
    CHECK(exp_definetti_bound(1, 2, 24, 2, false) == doctest::Approx(2 * std::pow(2.0, 8) * std::pow(2.0, -11)));
    CHECK(anti_definetti_bound(1, 12, 6, false) == doctest::Approx(6 * std::sqrt(2.0) * 2 * std::sqrt(0.5)));
    CHECK(anti_definetti_bound(1, 12, 6, true) == doctest::Approx(6 * 2 * std::sqrt(0.5)));
    // n -> 2n in the pure bound gives the mixed one
    CHECK(anti_definetti_bound(2, 24, 6, true) == doctest::Approx(anti_definetti_bound(1, 24, 6, false)));
}

TEST_CASE("exponential de Finetti, pure") {
    Rng rng(7);
    CVec alpha = random_invariant_coefficients(1, 2, 24, rng);
    auto rep = exp_definetti_coefficients(alpha, 1, 2, 24, 2);
    CHECK(rep.bound == doctest::Approx(0.0221).epsilon(1e-2));
    CHECK(rep.within_bound());
    CHECK_FALSE(rep.vacuous());
    CHECK(rep.distance < 1e-3);
    double psum = 0;
    for (double x : rep.p) psum += x;
    CHECK(psum == doctest::Approx(1.0));

    // coefficient route equals dense reduction at moderate t
    auto mid = make_invariant_state(6, 1, 2, Symmetry::full_O, 3);
    CHECK(symmetry_defect(mid) < 1e-9);
    auto r = exp_definetti_check(mid, 2);
    REQUIRE(r.distance_dense >= 0);
    CHECK(std::abs(r.distance - r.distance_dense) < 1e-9);
}

TEST_CASE("distance decays with t") {
    Rng rng(1);
    double prev = 1;
    for (int t = 12; t <= 40; t += 4) {
        CVec alpha = random_invariant_coefficients(1, 2, t, rng);
        auto rep = exp_definetti_coefficients(alpha, 1, 2, t, 2);
        CHECK(rep.within_bound());
        CHECK(rep.cross_term <= prev);
        prev = rep.cross_term;
    }
}

TEST_CASE("stabilizer powers are exact mixtures") {
    auto in = stabilizer_power_input(6, 1, 2, 3);
    auto rep = exp_definetti_check(in, 2);
    CHECK(rep.distance < 1e-10);
    auto dec = stab_power_decompose(in.psi, 1, 2, 6);
    CHECK(dec.residual < 1e-10);
    CHECK(std::abs(dec.alpha(3)) == doctest::Approx(1.0));
    CHECK((stab_power_reconstruct(dec.alpha, 1, 2, 6) - in.psi).norm() < 1e-10);
}

TEST_CASE("decomposition of invariant states") {
    Rng rng(11);
    CVec alpha = random_invariant_coefficients(1, 2, 12, rng);
    CVec psi = stab_power_reconstruct(alpha, 1, 2, 12);
    CHECK(psi.norm() == doctest::Approx(1.0));
    auto dec = stab_power_decompose(psi, 1, 2, 12);
    CHECK(dec.residual < 1e-9);
    CHECK(dec.in_interval());
    CHECK((dec.alpha - alpha).norm() < 1e-9);

    auto in = make_invariant_state(6, 1, 2, Symmetry::full_O, 11);
    CHECK(minimal_span_residual(in) < 1e-9);

    auto perm = make_invariant_state(6, 1, 2, Symmetry::permutations, 11);
    CHECK(minimal_span_residual(perm) > 1e-3);
}

TEST_CASE("mixed exponential de Finetti") {
    auto in = make_invariant_state(6, 1, 2, Symmetry::full_O, 5, false, 2);
    CHECK(symmetry_defect(in) < 1e-9);
    CHECK(std::abs(in.state.trace() - 1.0) < 1e-10);
    auto rep = exp_definetti_check(in, 1);
    CHECK_FALSE(rep.pure);
    CHECK(rep.within_bound());
    CHECK(rep.distance >= 0);
}

TEST_CASE("anti de Finetti") {
    auto in = make_invariant_state(12, 1, 2, Symmetry::perm_anti, 6);
    CHECK(symmetry_defect(in) < 1e-9);
    auto rep = anti_definetti_check(in, 6);
    CHECK(rep.variant == "anti");
    CHECK(rep.vacuous());
    CHECK(rep.within_bound());
    CHECK(rep.bound_pure > 0);

    auto stab = stabilizer_power_input(12, 1, 2, 0, Symmetry::perm_anti);
    CHECK(anti_definetti_check(stab, 6).distance < 1e-6);

    CHECK_THROWS_AS(anti_definetti_check(in, 4), PreconditionError);
}

TEST_CASE("mixed stabilizer states") {
    auto ms = mixed_stabilizer_states(1, 2);
    CHECK(ms.size() == 7);
    for (const auto& m : ms) {
        CHECK(std::abs(m.trace() - 1.0) < 1e-12);
        CHECK((m - m.adjoint()).norm() < 1e-12);
    }
    CHECK(mixed_stabilizer_states(2, 2).size() == 91);
}

TEST_CASE("partial trace and trace distance") {
    Rng rng(3);
    CVec a = haar_state(2, rng), b = haar_state(2, rng);
    CVec ab = kron_vec_power(a, 3);
    CMat red = partial_trace_copies(ab, 2, 3, 1);
    CHECK((red - a * a.adjoint()).norm() < 1e-12);
    CMat red2 = partial_trace_copies(CMat(ab * ab.adjoint()), 2, 3, 2);
    CVec aa = kron_vec_power(a, 2);
    CHECK((red2 - aa * aa.adjoint()).norm() < 1e-12);
    double ov = std::norm(a.dot(b));
    CHECK(trace_distance(a * a.adjoint(), b * b.adjoint()) == doctest::Approx(std::sqrt(1 - ov)));
}

TEST_CASE("purification") {
    CMat zero = CMat::Zero(2, 2);
    zero(0, 0) = 1;
    CVec p = purify(zero);
    CVec e00 = CVec::Zero(4);
    e00(0) = 1;
    CHECK((p - e00).norm() < 1e-12);

    CVec q = purify(CMat(CMat::Identity(2, 2) / 2.0));
    CVec bell = CVec::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    CHECK((q - bell).norm() < 1e-12);

    Rng rng(7);
    CMat B = CMat::Random(3, 2);
    CHECK((unvectorize(vectorize(B), 3, 2) - B).norm() == 0.0);

    auto trials = purification_symmetry_trials(4, 100, rng);
    CHECK(trials.trials == 100);
    CHECK(trials.agreements == 100);
    CHECK(trials.commuting > 0);
    CHECK(trials.commuting < 100);
}

TEST_CASE("symmetry helpers") {
    CMat S = symmetric_basis(2, 3);
    CHECK(S.cols() == 4);
    CHECK((S.adjoint() * S - CMat::Identity(4, 4)).norm() < 1e-12);
    IMat A = anti_identity_block(8);
    CHECK(is_member_O(A, 8, 2));
    auto act = copy_action(identity_matrix(3), 1, 2);
    for (long long i = 0; i < 8; ++i) CHECK(act[i] == i);
    for (auto s : {Symmetry::full_O, Symmetry::perm_anti, Symmetry::permutations})
        CHECK(symmetry_from_name(symmetry_name(s)) == s);
}
