#include "swc/common.hpp"

#include <cstdlib>

namespace swc {

ResourceError::ResourceError(const std::string& what, long long requested_, long long cap_)
    : std::runtime_error(what + ": requested dimension " + std::to_string(requested_) +
                         " exceeds cap " + std::to_string(cap_)),
      requested(requested_),
      cap(cap_) {}

namespace {
long long g_cap = -1;
}

long long dimension_cap() {
    if (g_cap < 0) {
        g_cap = 8192;
        if (const char* env = std::getenv("SWC_DIM_CAP")) {
            long long v = std::atoll(env);
            if (v > 0) g_cap = v;
        }
    }
    return g_cap;
}

void set_dimension_cap(long long cap) { g_cap = cap; }

void check_cap(long long dim, const std::string& what) {
    if (dim > dimension_cap()) throw ResourceError(what, dim, dimension_cap());
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool is_prime(int d) {
    if (d < 2) return false;
    for (int k = 2; k * k <= d; ++k)
        if (d % k == 0) return false;
    return true;
}

int inv_mod(int a, int p) {
    a = mod(a, p);
    if (a == 0) throw PreconditionError("inv_mod: zero has no inverse");
    long long r = 1, b = a;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

CVec haar_state(long long dim, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(dim);
    for (long long i = 0; i < dim; ++i) {
        double re = g(rng);
        double im = g(rng);
        v(i) = Cx(re, im);
    }
    return v / v.norm();
}

CVec kron_vec(const CVec& a, const CVec& b) {
    CVec r(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) r.segment(i * b.size(), b.size()) = a(i) * b;
    return r;
}

CVec kron_vec_power(const CVec& v, int k) {
    CVec r = CVec::Ones(1);
    for (int i = 0; i < k; ++i) r = kron_vec(r, v);
    return r;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

std::vector<int> digits(long long idx, int d, int len) {
    std::vector<int> v(len);
    for (int i = len - 1; i >= 0; --i) {
        v[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return v;
}

long long from_digits(const std::vector<int>& v, int d) {
    long long r = 0;
    for (int x : v) r = r * d + x;
    return r;
}

}  // namespace swc
