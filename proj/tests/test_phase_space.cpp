#include <doctest.h>

#include <cmath>
#include <numeric>

#include "swc/phase_space.hpp"

using namespace swc;

namespace {

CMat random_matrix(long long dim, Rng& rng) {
    std::normal_distribution<double> g;
    CMat m(dim, dim);
    for (long long i = 0; i < dim; ++i)
        for (long long j = 0; j < dim; ++j) m(i, j) = Cx(g(rng), g(rng));
    return m;
}

double fro(const CMat& a) { return a.norm(); }

}  // namespace

TEST_CASE("Weyl operators") {
    CHECK(fro(weyl(1, 2, {0, 0}) - CMat::Identity(2, 2)) < 1e-12);
    CMat Y(2, 2);
    Y << 0, Cx(0, -1), Cx(0, 1), 0;
    CHECK(fro(weyl(1, 2, {1, 1}) - Y) < 1e-12);

    Rng rng(11);
    for (int d : {2, 3}) {
        int D = d == 2 ? 4 : d;
        std::uniform_int_distribution<int> u(0, D - 1);
        for (int trial = 0; trial < 20; ++trial) {
            Vec x = {u(rng), u(rng)}, z = {u(rng), u(rng)};
            Vec shifted = {x[0] + d * z[0], x[1] + d * z[1]};
            double sign = ((d + 1) * symplectic_int(x, z)) % 2 == 0 ? 1.0 : -1.0;
            CHECK(fro(weyl(1, d, shifted) - sign * weyl(1, d, x)) < 1e-10);
        }
    }
}

TEST_CASE("projective group law and orthonormality") {
    for (int d : {2, 3, 5}) {
        int D = d == 2 ? 4 : d;
        Cx t = tau(d);
        for (int a = 0; a < d * d; ++a)
            for (int b = 0; b < d * d; ++b) {
                Vec x = {a / d, a % d}, y = {b / d, b % d};
                Vec xy = {mod(x[0] + y[0], D), mod(x[1] + y[1], D)};
                CMat lhs = weyl(1, d, x) * weyl(1, d, y);
                CMat rhs = std::pow(t, static_cast<double>(mod(symplectic_int(x, y), D))) * weyl(1, d, xy);
                CHECK(fro(lhs - rhs) < 1e-12);
                Cx ip = (weyl(1, d, x).adjoint() * weyl(1, d, y)).trace();
                CHECK(std::abs(ip - (a == b ? Cx(d) : Cx(0))) < 1e-12);
            }
    }
}

TEST_CASE("characteristic function") {
    auto c = characteristic_function(CMat(CMat::Identity(2, 2)), 1, 2);
    CHECK(std::abs(c[0] - std::sqrt(2.0)) < 1e-12);
    for (size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i]) < 1e-12);

    CVec zero = CVec::Zero(2);
    zero(0) = 1;
    PhaseSpace ps{1, 2};
    auto p = char_distribution(zero, 1, 2);
    CHECK(p[ps.index({0, 0})] == doctest::Approx(0.5));
    CHECK(p[ps.index({1, 0})] == doctest::Approx(0.5));
    CHECK(p[ps.index({0, 1})] == doctest::Approx(0.0));
    CHECK(p[ps.index({1, 1})] == doctest::Approx(0.0));

    // Parseval for two 4x4 operators
    Rng rng(5);
    CMat A = random_matrix(4, rng), B = random_matrix(4, rng);
    auto ca = characteristic_function(A, 2, 2), cb = characteristic_function(B, 2, 2);
    Cx lhs = 0;
    for (size_t i = 0; i < ca.size(); ++i) lhs += std::conj(ca[i]) * cb[i];
    CHECK(std::abs(lhs - (A.adjoint() * B).trace()) < 1e-12);
}

TEST_CASE("T-state characteristic distribution") {
    CVec t(2);
    t << 1, std::polar(1.0, kPi / 4);
    t /= std::sqrt(2.0);
    auto p = char_distribution(t, 1, 2);
    PhaseSpace ps{1, 2};
    CHECK(p[ps.index({0, 0})] == doctest::Approx(0.5));
    CHECK(p[ps.index({0, 1})] == doctest::Approx(0.25));  // X
    CHECK(p[ps.index({1, 1})] == doctest::Approx(0.25));  // Y
    CHECK(p[ps.index({1, 0})] == doctest::Approx(0.0));   // Z
}

TEST_CASE("symplectic Fourier transform") {
    for (int d : {2, 3}) {
        int n = 1;
        PhaseSpace ps{n, d};
        std::vector<Cx> delta(ps.size(), 0.0);
        delta[0] = 1;
        for (auto v : symplectic_fourier(delta, n, d)) CHECK(std::abs(v - 1.0 / d) < 1e-12);
        std::vector<Cx> one(ps.size(), 1.0);
        auto f1 = symplectic_fourier(one, n, d);
        CHECK(std::abs(f1[0] - Cx(d)) < 1e-12);
        for (size_t i = 1; i < f1.size(); ++i) CHECK(std::abs(f1[i]) < 1e-12);
    }
    Rng rng(8);
    std::normal_distribution<double> g;
    std::vector<Cx> f(PhaseSpace{2, 3}.size());
    for (auto& v : f) v = Cx(g(rng), g(rng));
    auto F = symplectic_fourier(f, 2, 3);
    double a = 0, b = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        a += std::norm(f[i]);
        b += std::norm(F[i]);
    }
    CHECK(std::abs(a - b) < 1e-10 * a);

    // pure qubit states: p is its own Fourier transform
    for (int trial = 0; trial < 5; ++trial) {
        CVec psi = haar_state(4, rng);
        auto p = char_distribution(psi, 2, 2);
        auto ph = symplectic_fourier(p, 2, 2);
        for (size_t i = 0; i < p.size(); ++i) CHECK(std::abs(ph[i] - p[i]) < 1e-12);
    }
}

TEST_CASE("point operators") {
    CMat A0 = point_operator(1, 3, {0, 0});
    CMat parity = CMat::Zero(3, 3);
    for (int q = 0; q < 3; ++q) parity(mod(-q, 3), q) = 1;
    CHECK(fro(A0 - parity) < 1e-12);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(point_operator(1, 3, {i / 3, i % 3}).trace() - 1.0) < 1e-12);

    Rng rng(2);
    for (int d : {3, 5}) {
        std::uniform_int_distribution<int> u(0, d - 1);
        for (int trial = 0; trial < 10; ++trial) {
            Vec x = {u(rng), u(rng)}, y = {u(rng), u(rng)}, z = {u(rng), u(rng)};
            Vec zx = {z[0] - x[0], z[1] - x[1]}, yx = {y[0] - x[0], y[1] - x[1]};
            Vec r = {mod(x[0] - y[0] + z[0], d), mod(x[1] - y[1] + z[1], d)};
            CMat lhs = point_operator(1, d, x) * point_operator(1, d, y) * point_operator(1, d, z);
            CMat rhs = omega_pow(d, 2 * symplectic_int(zx, yx)) * point_operator(1, d, r);
            CHECK(fro(lhs - rhs) < 1e-10);
        }
    }
}

TEST_CASE("Wigner function") {
    auto w = wigner(CMat(CMat::Identity(9, 9) / 9.0), 2, 3);
    for (double v : w) CHECK(v == doctest::Approx(1.0 / 81));

    Rng rng(4);
    CVec psi = haar_state(9, rng);
    auto wp = wigner(psi, 2, 3);
    double s = std::accumulate(wp.begin(), wp.end(), 0.0), s2 = 0;
    for (double v : wp) s2 += 9 * v * v;
    CHECK(std::abs(s - 1) < 1e-10);
    CHECK(std::abs(s2 - 1) < 1e-10);

    CMat rho = psi * psi.adjoint();
    auto wd = wigner_direct(rho, 2, 3);
    for (size_t i = 0; i < wp.size(); ++i) CHECK(std::abs(wd[i] - wp[i]) < 1e-12);

    // B = sum_x w_B(x) A_x^dagger
    CMat B = random_matrix(3, rng);
    auto wb = wigner_complex(B, 1, 3);
    CMat rec = CMat::Zero(3, 3);
    for (int i = 0; i < 9; ++i) rec += wb[i] * point_operator(1, 3, {i / 3, i % 3}).adjoint();
    CHECK(fro(rec - B) < 1e-10);
}

TEST_CASE("tensor utilities") {
    CHECK(fro(kron_power(CMat(CMat::Identity(2, 2)), 3) - CMat::Identity(8, 8)) < 1e-15);
    Rng rng(9);
    CMat A = random_matrix(2, rng), B = random_matrix(2, rng);
    CMat AB = kron(A, B);
    CHECK(fro(tensor_permute(AB, 2, {0, 1}) - AB) < 1e-15);
    CHECK(fro(tensor_permute(AB, 2, {1, 0}) - kron(B, A)) < 1e-12);
}
