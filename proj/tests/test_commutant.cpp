#include <doctest.h>

#include <algorithm>
#include <set>

#include "swc/clifford.hpp"
#include "swc/commutant.hpp"
#include "swc/moments.hpp"
#include "swc/phase_space.hpp"

using namespace swc;

namespace {

std::vector<long long> coset_sizes(int t, int d) {
    std::vector<long long> sizes;
    for (const auto& c : double_cosets(t, d).cosets) sizes.push_back(static_cast<long long>(c.members.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("cardinality of Sigma") {
    const std::vector<std::tuple<int, int, long long>> cases = {
        {3, 3, 8}, {4, 2, 30}, {4, 3, 80}, {5, 2, 270}, {5, 3, 2240}, {4, 5, 312}, {6, 2, 4590}};
    for (auto [t, d, count] : cases) {
        CAPTURE(t);
        CAPTURE(d);
        CHECK(sigma_count(t, d) == count);
        CHECK(static_cast<long long>(enumerate_sigma(t, d).size()) == count);
    }
    for (const auto& T : enumerate_sigma(4, 3)) CHECK(is_stochastic_lagrangian(T));
}

TEST_CASE("independent search agrees with the defect enumeration") {
    for (auto [t, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
        auto a = enumerate_sigma_dfs(t, d);
        std::sort(a.begin(), a.end());
        CHECK(a == enumerate_sigma(t, d));
    }
}

TEST_CASE("stochastic orthogonal group") {
    const std::vector<std::tuple<int, int, long long>> cases = {{2, 2, 2},  {3, 2, 6},   {3, 3, 6},
                                                                {4, 2, 24}, {4, 3, 48},  {5, 2, 120},
                                                                {5, 3, 1440}, {4, 5, 240}, {6, 2, 1440}};
    for (auto [t, d, order] : cases) {
        CAPTURE(t);
        CAPTURE(d);
        CHECK(static_cast<long long>(enumerate_O(t, d).size()) == order);
    }
    // O_2(3) is just the permutations
    std::set<IMat> perms = {identity_matrix(2), permutation_matrix({1, 0})};
    for (const auto& O : enumerate_O(2, 3)) CHECK(perms.count(O) == 1);

    // O_6(2): 720 permutations and 720 anti-permutations
    std::set<IMat> group(enumerate_O(6, 2).begin(), enumerate_O(6, 2).end());
    std::vector<int> p = {0, 1, 2, 3, 4, 5};
    long long both = 0;
    do {
        IMat pi = permutation_matrix(p), anti = anti_permutation(p, 6, 2, AntiKind::complement);
        CHECK(group.count(pi) == 1);
        CHECK(group.count(anti) == 1);
        both += pi == anti;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(both == 0);
}

TEST_CASE("r(T) basics") {
    Subspace diag = diagonal_subspace(3, 3);
    IntMat r = r_of_T(diag);
    CHECK(r == IntMat::Identity(27, 27));
    CMat R = R_of_T(diagonal_subspace(2, 2), 2);
    CHECK((R - CMat::Identity(16, 16)).norm() < 1e-15);

    // permutations give permutation operators
    Subspace T = T_of_O(permutation_matrix({1, 2, 0}), 2);
    CHECK((R_of_T(T, 1) - permutation_operator(2, {1, 2, 0})).norm() < 1e-12);
}

TEST_CASE("defect decomposition round trip") {
    for (auto [t, d] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {5, 2}}) {
        for (const auto& T : enumerate_sigma(t, d)) {
            auto data = defect_decompose(T);
            CHECK(reconstruct(data) == T);
            CHECK(data.left.dim() == data.right.dim());
        }
    }
}

TEST_CASE("commutation with Clifford generators") {
    for (auto [t, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}})
        for (const auto& T : enumerate_sigma(t, d)) CHECK(commutes_with_clifford(T).max() < 1e-10);

    // and with a random Clifford word on two qudits
    Rng rng(4);
    auto U = random_clifford(2, 2, 30, rng).unitary;
    CMat Ut = kron_power(U, 3);
    for (const auto& T : enumerate_sigma(3, 2)) {
        CMat R = R_of_T(T, 2);
        CHECK((Ut * R - R * Ut).norm() < 1e-9);
    }
}

TEST_CASE("linear independence") {
    CHECK(linear_independence_check(4, 2, 3) == 30);
    CHECK(linear_independence_check(3, 3, 2) == 8);
    CHECK(linear_independence_check(4, 3, 3) == 80);
    // n < t - 1 loses rank
    CHECK(linear_independence_check(4, 2, 1) < 30);
}

TEST_CASE("double cosets") {
    CHECK(coset_sizes(4, 2) == std::vector<long long>{6, 24});
    CHECK(coset_sizes(4, 3) == std::vector<long long>{32, 48});
    auto table = double_cosets(5, 2);
    CHECK(table.invariants_consistent);
    long long total = 0;
    for (const auto& c : table.cosets) total += static_cast<long long>(c.members.size());
    CHECK(total == 270);
}

TEST_CASE("composition") {
    for (auto [t, d] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}}) {
        const auto& sig = enumerate_sigma(t, d);
        for (const auto& a : sig)
            for (const auto& b : sig) {
                auto x = compose(a, b), y = compose_relational(a, b);
                CHECK(x.T == y.T);
                CHECK(x.k == y.k);
            }
    }
    // permutations compose as a group
    Subspace a = T_of_O(permutation_matrix({1, 0, 2}), 2), b = T_of_O(permutation_matrix({0, 2, 1}), 2);
    auto ab = compose(a, b);
    CHECK(ab.k == 0);
    IntMat prod = r_of_T(a) * r_of_T(b);
    CHECK(r_of_T(ab.T) == prod);
}

TEST_CASE("CSS subspaces") {
    for (const auto& N : defect_subspaces(4, 2)) {
        Subspace T = css_T(N);
        CHECK(is_stochastic_lagrangian(T));
        CMat P = css_projector(N, 4, 2);
        CHECK((P * P - P).norm() < 1e-10);
    }
}

TEST_CASE("minimal projector") {
    CMat P = minimal_projector(4, 1, 2);
    CHECK((P * P - P).norm() < 1e-9);
    CHECK((P - P.adjoint()).norm() < 1e-12);
}

TEST_CASE("icosahedron") {
    IMat A = icosahedron_adjacency();
    REQUIRE(A.size() == 12);
    for (int i = 0; i < 12; ++i) {
        int deg = 0;
        for (int j = 0; j < 12; ++j) {
            CHECK(A[i][j] == A[j][i]);
            deg += A[i][j];
        }
        CHECK(deg == 5);
        CHECK(A[i][i] == 0);
    }
    CHECK(is_member_O(A, 12, 2));
    IMat C(12, Vec(12));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) C[i][j] = i == j ? 0 : 1 - A[i][j];
    CHECK_FALSE(is_member_O(C, 12, 2));
}
