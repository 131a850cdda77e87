#include "swc/phase_space.hpp"

#include <cmath>

namespace swc {

long long PhaseSpace::index(const Vec& x) const {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i], d);
    return from_digits(r, d);
}

Cx tau(int d) { return std::exp(Cx(0.0, kPi * (static_cast<double>(d) * d + 1.0) / d)); }

static Cx tau_pow(int d, long long k) {
    // tau has order dividing 2d
    long long r = mod(k, 2 * d);
    return std::exp(Cx(0.0, kPi * (static_cast<double>(d) * d + 1.0) / d * static_cast<double>(r)));
}

long long symplectic_int(const Vec& x, const Vec& y) {
    int n = static_cast<int>(x.size()) / 2;
    long long s = 0;
    for (int i = 0; i < n; ++i)
        s += static_cast<long long>(x[i]) * y[n + i] - static_cast<long long>(x[n + i]) * y[i];
    return s;
}

namespace {

// W_x |k> = phase(k) |k + q>
struct Monomial {
    std::vector<long long> target;
    std::vector<Cx> phase;
};

Monomial weyl_monomial(int n, int d, const Vec& x) {
    if (static_cast<int>(x.size()) != 2 * n) throw PreconditionError("weyl: point has wrong length");
    long long dim = ipow(d, n);
    long long pq = 0;
    for (int i = 0; i < n; ++i) pq += static_cast<long long>(x[i]) * x[n + i];
    Cx global = tau_pow(d, -pq);
    Monomial m{std::vector<long long>(dim), std::vector<Cx>(dim)};
    for (long long k = 0; k < dim; ++k) {
        auto kd = digits(k, d, n);
        long long e = 0;
        Vec out(n);
        for (int i = 0; i < n; ++i) {
            long long shifted = kd[i] + x[n + i];
            out[i] = mod(shifted, d);
            e += static_cast<long long>(x[i]) * shifted;
        }
        m.target[k] = from_digits(out, d);
        m.phase[k] = global * omega_pow(d, e);
    }
    return m;
}

}  // namespace

CMat weyl(int n, int d, const Vec& x) {
    auto m = weyl_monomial(n, d, x);
    long long dim = ipow(d, n);
    CMat W = CMat::Zero(dim, dim);
    for (long long k = 0; k < dim; ++k) W(m.target[k], k) = m.phase[k];
    return W;
}

CVec apply_weyl(int n, int d, const Vec& x, const CVec& v) {
    auto m = weyl_monomial(n, d, x);
    CVec r = CVec::Zero(v.size());
    for (long long k = 0; k < v.size(); ++k) r(m.target[k]) += m.phase[k] * v(k);
    return r;
}

Cx weyl_trace(int n, int d, const Vec& x, const CMat& B) {
    auto m = weyl_monomial(n, d, x);
    Cx s = 0;
    // tr[W^dagger B] = sum_k conj(W[t(k), k]) B[t(k), k]
    for (long long k = 0; k < B.rows(); ++k) s += std::conj(m.phase[k]) * B(m.target[k], k);
    return s;
}

std::vector<Cx> characteristic_function(const CMat& B, int n, int d) {
    PhaseSpace ps{n, d};
    if (B.rows() != ps.hilbert_dim()) throw PreconditionError("characteristic_function: dimension mismatch");
    double norm = std::pow(static_cast<double>(d), -n / 2.0);
    std::vector<Cx> c(ps.size());
    for (long long i = 0; i < ps.size(); ++i) c[i] = norm * weyl_trace(n, d, ps.point(i), B);
    return c;
}

std::vector<Cx> characteristic_function(const CVec& psi, int n, int d) {
    PhaseSpace ps{n, d};
    if (psi.size() != ps.hilbert_dim()) throw PreconditionError("characteristic_function: dimension mismatch");
    double norm = std::pow(static_cast<double>(d), -n / 2.0);
    std::vector<Cx> c(ps.size());
    for (long long i = 0; i < ps.size(); ++i) {
        CVec w = apply_weyl(n, d, ps.point(i), psi);
        // tr[W^dagger psi] = <psi|W^dagger|psi> = conj(<psi|W|psi>)
        c[i] = norm * std::conj(psi.dot(w));
    }
    return c;
}

std::vector<double> char_distribution(const CVec& psi, int n, int d) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) throw PreconditionError("char_distribution: state is not normalized");
    auto c = characteristic_function(psi, n, d);
    std::vector<double> p(c.size());
    for (size_t i = 0; i < c.size(); ++i) p[i] = std::norm(c[i]);
    return p;
}

std::vector<Cx> symplectic_fourier(const std::vector<Cx>& f, int n, int d) {
    PhaseSpace ps{n, d};
    const long long N = ps.size();
    if (static_cast<long long>(f.size()) != N) throw PreconditionError("symplectic_fourier: size mismatch");
    std::vector<Vec> pts(N);
    for (long long i = 0; i < N; ++i) pts[i] = ps.point(i);
    std::vector<Cx> roots(d);
    for (int k = 0; k < d; ++k) roots[k] = omega_pow(d, k);
    double norm = std::pow(static_cast<double>(d), -n);
    std::vector<Cx> out(N);
    for (long long i = 0; i < N; ++i) {
        Cx s = 0;
        for (long long j = 0; j < N; ++j) {
            if (f[j] == Cx(0.0, 0.0)) continue;
            s += roots[mod(-symplectic_int(pts[i], pts[j]), d)] * f[j];
        }
        out[i] = norm * s;
    }
    return out;
}

std::vector<Cx> symplectic_fourier(const std::vector<double>& f, int n, int d) {
    return symplectic_fourier(std::vector<Cx>(f.begin(), f.end()), n, d);
}

CMat point_operator(int n, int d, const Vec& x) {
    PhaseSpace ps{n, d};
    long long dim = ps.hilbert_dim();
    CMat A = CMat::Zero(dim, dim);
    for (long long j = 0; j < ps.size(); ++j) {
        Vec y = ps.point(j);
        A += omega_pow(d, -symplectic_int(x, y)) * weyl(n, d, y).adjoint();
    }
    return A / static_cast<double>(dim);
}

std::vector<Cx> wigner_complex(const CMat& B, int n, int d) {
    auto c = characteristic_function(B, n, d);
    auto ch = symplectic_fourier(c, n, d);
    double norm = std::pow(static_cast<double>(d), -n / 2.0);
    for (auto& v : ch) v *= norm;
    return ch;
}

std::vector<double> wigner(const CMat& B, int n, int d) {
    auto w = wigner_complex(B, n, d);
    std::vector<double> r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = w[i].real();
    return r;
}

std::vector<double> wigner(const CVec& psi, int n, int d) {
    auto c = characteristic_function(psi, n, d);
    auto ch = symplectic_fourier(c, n, d);
    double norm = std::pow(static_cast<double>(d), -n / 2.0);
    std::vector<double> r(ch.size());
    for (size_t i = 0; i < ch.size(); ++i) r[i] = norm * ch[i].real();
    return r;
}

std::vector<double> wigner_direct(const CMat& B, int n, int d) {
    PhaseSpace ps{n, d};
    std::vector<double> r(ps.size());
    double norm = std::pow(static_cast<double>(d), -n);
    for (long long i = 0; i < ps.size(); ++i) r[i] = norm * (point_operator(n, d, ps.point(i)) * B).trace().real();
    return r;
}

CMat kron_power(const CMat& B, int k) {
    double dim = std::pow(static_cast<double>(B.rows()), k);
    if (dim > 9e18) throw ResourceError("kron_power", static_cast<long long>(9e18), dimension_cap());
    check_cap(static_cast<long long>(dim), "kron_power");
    CMat r = CMat::Identity(1, 1);
    for (int i = 0; i < k; ++i) r = kron(r, B);
    return r;
}

static std::vector<long long> permuted_indices(long long dim, int local, const std::vector<int>& ordering) {
    int k = static_cast<int>(ordering.size());
    if (ipow(local, k) != dim) throw PreconditionError("tensor_permute: dimension is not local^k");
    std::vector<bool> seen(k, false);
    for (int o : ordering) {
        if (o < 0 || o >= k || seen[o]) throw PreconditionError("tensor_permute: ordering is not a permutation");
        seen[o] = true;
    }
    // map input index -> output index
    std::vector<long long> map(dim);
    for (long long i = 0; i < dim; ++i) {
        auto in = digits(i, local, k);
        Vec out(k);
        for (int j = 0; j < k; ++j) out[j] = in[ordering[j]];
        map[i] = from_digits(out, local);
    }
    return map;
}

CMat tensor_permute(const CMat& B, int local, const std::vector<int>& ordering) {
    check_cap(B.rows(), "tensor_permute");
    auto map = permuted_indices(B.rows(), local, ordering);
    CMat r(B.rows(), B.cols());
    for (long long i = 0; i < B.rows(); ++i)
        for (long long j = 0; j < B.cols(); ++j) r(map[i], map[j]) = B(i, j);
    return r;
}

CVec tensor_permute(const CVec& v, int local, const std::vector<int>& ordering) {
    auto map = permuted_indices(v.size(), local, ordering);
    CVec r(v.size());
    for (long long i = 0; i < v.size(); ++i) r(map[i]) = v(i);
    return r;
}

}  // namespace swc
