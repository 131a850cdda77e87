#include <doctest.h>

#include <map>
#include <set>

#include "swc/gf_linalg.hpp"

using namespace swc;

TEST_CASE("rref canonical form") {
    Subspace id = rref({{1, 0}, {0, 1}}, 2, 2);
    CHECK(id.dim() == 2);
    CHECK(id.basis == IMat{{1, 0}, {0, 1}});

    Subspace line = rref({{1, 1}, {2, 2}}, 3, 2);
    CHECK(line.dim() == 1);
    CHECK(line.basis == IMat{{1, 1}});

    IMat t4 = {{1, 0, 0, 1, 1, 0, 0, 1}, {0, 1, 0, 1, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 0, 0, 0}};
    IMat cosets = t4;
    cosets.push_back(add(t4[0], t4[1], 2));
    cosets.push_back(add(t4[2], t4[3], 2));
    Subspace T4 = rref(cosets, 2, 8);
    CHECK(T4.dim() == 4);
    CHECK(is_totally_isotropic(T4, QuadKind::Q));
}

TEST_CASE("rref is unique per subspace of Z_2^4") {
    auto subs = all_subspaces(2, 4);
    // 1 + 15 + 35 + 15 + 1
    CHECK(subs.size() == 67);
    for (const auto& s : subs) {
        auto els = s.elements();
        // respan from a shuffled set of members
        std::vector<Vec> gens(els.rbegin(), els.rend());
        CHECK(span_of(gens, 2, 4) == s);
    }
}

TEST_CASE("intersection and sum") {
    Subspace a = span_of({{1, 0}}, 2, 2), b = span_of({{0, 1}}, 2, 2);
    CHECK(intersect(a, b).dim() == 0);
    CHECK(intersect(a, a) == a);

    Subspace u = span_of({{1, 1, 1}}, 3, 3), v = span_of({{1, 2, 0}}, 3, 3);
    Subspace w = sum(u, v);
    CHECK(w.dim() == 2);
    int members = 0;
    for (const auto& x : all_vectors(3, 3)) {
        bool expected = false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (add(scale({1, 1, 1}, i, 3), scale({1, 2, 0}, j, 3), 3) == x) expected = true;
        CHECK(w.contains(x) == expected);
        members += expected;
    }
    CHECK(members == 9);
}

TEST_CASE("dimension formula over Z_3^3") {
    auto subs = all_subspaces(3, 3);
    for (const auto& a : subs)
        for (const auto& b : subs) CHECK(a.dim() + b.dim() == intersect(a, b).dim() + sum(a, b).dim());
}

TEST_CASE("complements") {
    Subspace z = zero_subspace(2, 4);
    CHECK(complement(z, FormKind::dot) == full_space(2, 4));
    Subspace x = span_of({{1, 0}}, 2, 2);
    CHECK(complement(x, FormKind::symplectic) == x);
    for (const auto& s : all_subspaces(2, 4))
        for (auto f : {FormKind::dot, FormKind::symplectic, FormKind::hyperbolic}) {
            CHECK(complement(complement(s, f), f) == s);
            CHECK(complement(s, f).dim() == 4 - s.dim());
        }
}

TEST_CASE("quadratic forms") {
    CHECK(quadratic_q({1, 1, 1, 1}, 2) == 0);
    CHECK(quadratic_q({1, 1, 1, 1, 1}, 2) == 1);
    CHECK(quadratic_q({1, 2}, 3) == 2);
    CHECK(quadratic_Q({1, 1, 0}, {1, 0, 0}, 2) == 1);
    CHECK(quadratic_Q({1, 0, 1}, {1, 0, 1}, 2) == 0);

    std::mt19937 rng(3);
    for (int d : {2, 3, 5}) {
        int D = d == 2 ? 4 : d;
        std::uniform_int_distribution<int> u(0, d - 1);
        for (int trial = 0; trial < 300; ++trial) {
            Vec x(5), y(5);
            for (auto& v : x) v = u(rng);
            for (auto& v : y) v = u(rng);
            // q(x + y) = q(x) + q(y) + 2 x.y mod D
            long long dot = 0;
            for (int i = 0; i < 5; ++i) dot += static_cast<long long>(x[i]) * y[i];
            CHECK(quadratic_q(add(x, y, d), d) == mod(quadratic_q(x, d) + quadratic_q(y, d) + 2 * dot, D));
        }
    }
}

TEST_CASE("isotropy") {
    CHECK(is_totally_isotropic(zero_subspace(2, 4), QuadKind::Q));
    for (int d : {2, 3}) {
        int t = 3;
        std::vector<Vec> gens;
        for (int i = 0; i < t; ++i) {
            Vec v(2 * t, 0);
            v[i] = v[t + i] = 1;
            gens.push_back(v);
        }
        CHECK(is_totally_isotropic(span_of(gens, d, 2 * t), QuadKind::Q));
    }
    // (1,1,1,1) has q = 0 mod 4, (1,0,0,0) does not
    CHECK(is_totally_isotropic(span_of({{1, 1, 1, 1}}, 2, 4), QuadKind::q));
    CHECK_FALSE(is_totally_isotropic(span_of({{1, 0, 0, 0}}, 2, 4), QuadKind::q));
    CHECK(is_symplectic_isotropic(span_of({{1, 0}}, 3, 2)));
    CHECK_FALSE(is_symplectic_isotropic(full_space(3, 2)));
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(5, 0, 3) == 1);
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial_formula_check(4, 3, 1));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k < n; ++k) CHECK(gaussian_pascal_check(n, k, 3));
    for (int d : {2, 3})
        for (int n = 1; n <= (d == 2 ? 4 : 3); ++n) {
            std::map<int, int> counts;
            for (const auto& s : all_subspaces(d, n)) ++counts[s.dim()];
            for (int k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, d) == counts[k]);
        }
    // d = 5 at large n stays exact
    CHECK(gaussian_binomial(12, 6, 5) > BigInt(1) << 64);
}

TEST_CASE("coset representatives") {
    Subspace full = full_space(2, 2);
    auto reps = coset_reps(full, full);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == Vec{0, 0});

    reps = coset_reps(full, span_of({{1, 1}}, 2, 2));
    CHECK(reps == std::vector<Vec>{{0, 0}, {0, 1}});

    auto subs = all_subspaces(3, 3);
    for (const auto& sup : subs)
        for (const auto& sub : subs) {
            if (intersect(sup, sub) != sub) continue;
            auto r = coset_reps(sup, sub);
            long long expected = 1;
            for (int i = 0; i < sup.dim() - sub.dim(); ++i) expected *= 3;
            CHECK(static_cast<long long>(r.size()) == expected);
            std::set<Vec> classes;
            for (const auto& v : r) {
                CHECK(sup.contains(v));
                classes.insert(sub.reduce(v));
            }
            CHECK(static_cast<long long>(classes.size()) == expected);
        }
}
