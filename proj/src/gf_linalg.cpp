#include "swc/gf_linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace swc {

Modulus::Modulus(int d_) : d(d_), D(d_ % 2 == 0 ? 2 * d_ : d_) {
    if (!is_prime(d_)) throw PreconditionError("modulus must be prime, got " + std::to_string(d_));
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (dim() != o.dim()) return dim() < o.dim();
    return basis < o.basis;
}

std::vector<int> Subspace::pivots() const {
    std::vector<int> p;
    for (const auto& r : basis) {
        int j = 0;
        while (r[j] == 0) ++j;
        p.push_back(j);
    }
    return p;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r(ambient);
    for (int j = 0; j < ambient; ++j) r[j] = mod(v[j], d);
    auto piv = pivots();
    for (size_t i = 0; i < basis.size(); ++i) {
        int c = r[piv[i]];
        if (c == 0) continue;
        for (int j = 0; j < ambient; ++j) r[j] = mod(r[j] - c * basis[i][j], d);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

std::vector<Vec> Subspace::elements() const {
    std::vector<Vec> out;
    long long count = ipow(d, dim());
    out.reserve(count);
    for (long long c = 0; c < count; ++c) {
        auto coef = digits(c, d, dim());
        Vec v(ambient, 0);
        for (int i = 0; i < dim(); ++i)
            if (coef[i])
                for (int j = 0; j < ambient; ++j) v[j] = (v[j] + coef[i] * basis[i][j]) % d;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subspace rref(const IMat& rows, int d, int ambient) {
    IMat m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != ambient)
            throw PreconditionError("rref: row length " + std::to_string(r.size()) +
                                    " != ambient " + std::to_string(ambient));
        Vec x(ambient);
        for (int j = 0; j < ambient; ++j) x[j] = mod(r[j], d);
        m.push_back(std::move(x));
    }
    int rank = 0;
    const int nrows = static_cast<int>(m.size());
    for (int col = 0; col < ambient && rank < nrows; ++col) {
        int piv = -1;
        for (int i = rank; i < nrows; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        int inv = inv_mod(m[rank][col], d);
        for (int j = col; j < ambient; ++j) m[rank][j] = m[rank][j] * inv % d;
        for (int i = 0; i < nrows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            int c = m[i][col];
            for (int j = col; j < ambient; ++j) m[i][j] = mod(m[i][j] - c * m[rank][j], d);
        }
        ++rank;
    }
    m.resize(rank);
    return Subspace{d, ambient, std::move(m)};
}

Subspace zero_subspace(int d, int ambient) { return Subspace{d, ambient, {}}; }

Subspace full_space(int d, int ambient) {
    IMat id(ambient, Vec(ambient, 0));
    for (int i = 0; i < ambient; ++i) id[i][i] = 1;
    return Subspace{d, ambient, id};
}

Subspace span_of(const std::vector<Vec>& vs, int d, int ambient) { return rref(vs, d, ambient); }

static void same_space(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient != b.ambient || a.d != b.d)
        throw PreconditionError(std::string(op) + ": dimension or modulus mismatch (" +
                                std::to_string(a.ambient) + " vs " + std::to_string(b.ambient) + ")");
}

Subspace sum(const Subspace& a, const Subspace& b) {
    same_space(a, b, "sum");
    IMat rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return rref(rows, a.d, a.ambient);
}

Subspace nullspace(const IMat& A, int d, int cols) {
    Subspace r = rref(A, d, cols);
    auto piv = r.pivots();
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[p] = true;
    IMat out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod(-r.basis[i][f], d);
        out.push_back(v);
    }
    return rref(out, d, cols);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    same_space(a, b, "intersect");
    Subspace ca = complement(a, FormKind::dot);
    Subspace cb = complement(b, FormKind::dot);
    return complement(sum(ca, cb), FormKind::dot);
}

int bilinear(const Vec& x, const Vec& y, int d, FormKind form) {
    const int m = static_cast<int>(x.size());
    long long s = 0;
    switch (form) {
        case FormKind::dot:
            for (int i = 0; i < m; ++i) s += static_cast<long long>(x[i]) * y[i];
            break;
        case FormKind::symplectic: {
            int n = m / 2;
            for (int i = 0; i < n; ++i)
                s += static_cast<long long>(x[i]) * y[n + i] - static_cast<long long>(x[n + i]) * y[i];
            break;
        }
        case FormKind::hyperbolic: {
            int t = m / 2;
            for (int i = 0; i < t; ++i)
                s += static_cast<long long>(x[i]) * y[i] - static_cast<long long>(x[t + i]) * y[t + i];
            break;
        }
    }
    return mod(s, d);
}

// Row i of the Gram matrix applied to a basis vector: b^T G.
static Vec apply_gram(const Vec& b, FormKind form) {
    const int m = static_cast<int>(b.size());
    Vec r(m);
    switch (form) {
        case FormKind::dot:
            r = b;
            break;
        case FormKind::symplectic: {
            int n = m / 2;
            // [x, y] = p.q' - q.p' ; as a functional of y = (p', q'): (-q, p)
            for (int i = 0; i < n; ++i) {
                r[i] = -b[n + i];
                r[n + i] = b[i];
            }
            break;
        }
        case FormKind::hyperbolic: {
            int t = m / 2;
            for (int i = 0; i < t; ++i) {
                r[i] = b[i];
                r[t + i] = -b[t + i];
            }
            break;
        }
    }
    return r;
}

Subspace complement(const Subspace& s, FormKind form) {
    if (form != FormKind::dot && s.ambient % 2 != 0)
        throw PreconditionError("complement: form requires even ambient dimension");
    IMat A;
    for (const auto& b : s.basis) A.push_back(apply_gram(b, form));
    if (A.empty()) return full_space(s.d, s.ambient);
    return nullspace(A, s.d, s.ambient);
}

int quadratic_q(const Vec& x, int d) {
    int D = d % 2 == 0 ? 2 * d : d;
    long long s = 0;
    for (int v : x) {
        long long l = mod(v, d);
        s += l * l;
    }
    return mod(s, D);
}

int quadratic_Q(const Vec& x, const Vec& y, int d) {
    int D = d % 2 == 0 ? 2 * d : d;
    return mod(quadratic_q(x, d) - quadratic_q(y, d), D);
}

int quadratic_Q(const Vec& xy, int d) {
    int t = static_cast<int>(xy.size()) / 2;
    Vec x(xy.begin(), xy.begin() + t), y(xy.begin() + t, xy.end());
    return quadratic_Q(x, y, d);
}

bool is_totally_isotropic(const Subspace& s, QuadKind kind) {
    FormKind f = kind == QuadKind::q ? FormKind::dot : FormKind::hyperbolic;
    for (size_t i = 0; i < s.basis.size(); ++i) {
        int qv = kind == QuadKind::q ? quadratic_q(s.basis[i], s.d) : quadratic_Q(s.basis[i], s.d);
        if (qv != 0) return false;
        for (size_t j = i + 1; j < s.basis.size(); ++j)
            if (bilinear(s.basis[i], s.basis[j], s.d, f) != 0) return false;
    }
    return true;
}

bool is_symplectic_isotropic(const Subspace& s) {
    for (size_t i = 0; i < s.basis.size(); ++i)
        for (size_t j = i + 1; j < s.basis.size(); ++j)
            if (bilinear(s.basis[i], s.basis[j], s.d, FormKind::symplectic) != 0) return false;
    return true;
}

BigInt gaussian_binomial(int n, int k, int d) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1, dd = d;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(dd, n - i) - 1;
        den *= boost::multiprecision::pow(dd, i + 1) - 1;
    }
    return num / den;
}

bool gaussian_pascal_check(int n, int k, int d) {
    if (n < 1 || k < 1 || k > n) return true;
    BigInt dd = d;
    BigInt a = gaussian_binomial(n, k, d);
    BigInt b = gaussian_binomial(n - 1, k - 1, d) + boost::multiprecision::pow(dd, k) * gaussian_binomial(n - 1, k, d);
    BigInt c = boost::multiprecision::pow(dd, n - k) * gaussian_binomial(n - 1, k - 1, d) + gaussian_binomial(n - 1, k, d);
    return a == b && a == c;
}

bool gaussian_binomial_formula_check(int n, int d, long long t) {
    BigInt dd = d, tt = t;
    BigInt lhs = 0;
    for (int k = 0; k <= n; ++k)
        lhs += boost::multiprecision::pow(dd, k * (k - 1) / 2) * gaussian_binomial(n, k, d) *
               boost::multiprecision::pow(tt, k);
    BigInt rhs = 1;
    for (int j = 0; j < n; ++j) rhs *= boost::multiprecision::pow(dd, j) * tt + 1;
    return lhs == rhs;
}

std::vector<Vec> coset_reps(const Subspace& sup, const Subspace& sub) {
    same_space(sup, sub, "coset_reps");
    for (const auto& b : sub.basis)
        if (!sup.contains(b)) throw PreconditionError("coset_reps: sub is not contained in sup");
    std::set<Vec> reps;
    for (const auto& v : sup.elements()) reps.insert(sub.reduce(v));
    return {reps.begin(), reps.end()};
}

std::vector<Vec> all_vectors(int d, int m) {
    std::vector<Vec> out;
    long long count = ipow(d, m);
    out.reserve(count);
    for (long long c = 0; c < count; ++c) out.push_back(digits(c, d, m));
    return out;
}

std::vector<Subspace> grow_subspaces(const Subspace& start, const std::vector<Vec>& pool,
                                     const std::function<bool(const Vec&, const Vec&)>& compatible,
                                     int target_dim) {
    std::set<Subspace> level{start};
    std::vector<Subspace> all{start};
    int dim = start.dim();
    while (!level.empty() && (target_dim < 0 || dim < target_dim)) {
        std::set<Subspace> next;
        for (const auto& s : level) {
            for (const auto& v : pool) {
                if (s.contains(v)) continue;
                bool ok = true;
                for (const auto& b : s.basis)
                    if (!compatible(b, v)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                IMat rows = s.basis;
                rows.push_back(v);
                next.insert(rref(rows, s.d, s.ambient));
            }
        }
        ++dim;
        level = std::move(next);
        all.insert(all.end(), level.begin(), level.end());
    }
    if (target_dim >= 0) return {level.begin(), level.end()};
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Subspace> all_subspaces(int d, int m) {
    auto pool = all_vectors(d, m);
    pool.erase(pool.begin());
    return grow_subspaces(zero_subspace(d, m), pool, [](const Vec&, const Vec&) { return true; }, -1);
}

Vec add(const Vec& a, const Vec& b, int d) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i], d);
    return r;
}

Vec scale(const Vec& a, int c, int d) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod(static_cast<long long>(a[i]) * c, d);
    return r;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Vec ones(int t) { return Vec(t, 1); }

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const Subspace& s) {
    std::ostringstream os;
    os << "span{";
    for (size_t i = 0; i < s.basis.size(); ++i) os << (i ? " " : "") << to_string(s.basis[i]);
    os << "}";
    return os.str();
}

}  // namespace swc
