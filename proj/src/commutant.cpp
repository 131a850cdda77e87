#include "swc/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "swc/clifford.hpp"

namespace swc {

BigInt sigma_count(int t, int d) {
    BigInt r = 1, dd = d;
    for (int k = 0; k <= t - 2; ++k) r *= boost::multiprecision::pow(dd, k) + 1;
    return r;
}

void check_sigma_envelope(int t, int d) {
    if (!is_prime(d)) throw PreconditionError("d must be prime, got " + std::to_string(d));
    if (t < 1) throw PreconditionError("t must be positive");
    int tmax = d == 2 ? 6 : d == 3 ? 5 : d == 5 ? 4 : 0;
    if (t > tmax)
        throw PreconditionError("(t=" + std::to_string(t) + ", d=" + std::to_string(d) +
                                ") outside the enumeration envelope (d=2: t<=6, d=3: t<=5, d=5: t<=4)");
}

static Vec left_half(const Vec& v) { return Vec(v.begin(), v.begin() + v.size() / 2); }
static Vec right_half(const Vec& v) { return Vec(v.begin() + v.size() / 2, v.end()); }

bool is_stochastic_lagrangian(const Subspace& T) {
    int t = T.ambient / 2;
    if (T.ambient != 2 * t || T.dim() != t) return false;
    if (!T.contains(ones(2 * t))) return false;
    return is_totally_isotropic(T, QuadKind::Q);
}

Subspace diagonal_subspace(int t, int d) {
    IMat rows;
    for (int i = 0; i < t; ++i) {
        Vec v(2 * t, 0);
        v[i] = 1;
        v[t + i] = 1;
        rows.push_back(v);
    }
    return rref(rows, d, 2 * t);
}

int diag_dim(const Subspace& T) { return intersect(T, diagonal_subspace(T.ambient / 2, T.d)).dim(); }

std::vector<Subspace> defect_subspaces(int t, int d) {
    const int D = d % 2 == 0 ? 2 * d : d;
    std::vector<Vec> pool;
    for (const auto& v : all_vectors(d, t)) {
        if (std::all_of(v.begin(), v.end(), [](int a) { return a == 0; })) continue;
        long long s = std::accumulate(v.begin(), v.end(), 0LL);
        if (mod(s, d) != 0 || quadratic_q(v, d) % D != 0) continue;
        pool.push_back(v);
    }
    return grow_subspaces(
        zero_subspace(d, t), pool,
        [d](const Vec& a, const Vec& b) { return bilinear(a, b, d, FormKind::dot) == 0; }, -1);
}

std::vector<Vec> quotient_basis(const Subspace& M) {
    const int t = M.ambient;
    Subspace perp = complement(M, FormKind::dot);
    std::vector<Vec> out;
    Subspace acc = M;
    auto try_add = [&](const Vec& v) {
        if (acc.contains(v)) return;
        IMat rows = acc.basis;
        rows.push_back(v);
        acc = rref(rows, M.d, t);
        out.push_back(M.reduce(v));
    };
    if (perp.contains(ones(t))) try_add(ones(t));
    for (const auto& b : perp.basis) try_add(b);
    return out;
}

DefectData defect_decompose(const Subspace& T) {
    const int t = T.ambient / 2, d = T.d;
    IMat lrows, rrows;
    for (int i = 0; i < t; ++i) {
        Vec e(2 * t, 0);
        e[i] = 1;
        lrows.push_back(e);
        Vec f(2 * t, 0);
        f[t + i] = 1;
        rrows.push_back(f);
    }
    Subspace L = intersect(T, rref(lrows, d, 2 * t));
    Subspace R = intersect(T, rref(rrows, d, 2 * t));
    IMat lb, rb;
    for (const auto& v : L.basis) lb.push_back(left_half(v));
    for (const auto& v : R.basis) rb.push_back(right_half(v));
    DefectData out;
    out.left = rref(lb, d, t);
    out.right = rref(rb, d, t);
    out.y_basis = quotient_basis(out.right);
    std::map<Vec, Vec> x_of_y;
    for (const auto& e : T.elements()) x_of_y.emplace(right_half(e), left_half(e));
    for (const auto& y : out.y_basis) {
        auto it = x_of_y.find(y);
        if (it == x_of_y.end()) throw InvariantError("defect_decompose: quotient vector not in T_R");
        out.x_image.push_back(out.left.reduce(it->second));
    }
    return out;
}

Subspace reconstruct(const DefectData& data) {
    const int t = data.left.ambient, d = data.left.d;
    IMat rows;
    for (size_t i = 0; i < data.y_basis.size(); ++i) rows.push_back(concat(data.x_image[i], data.y_basis[i]));
    for (const auto& v : data.left.basis) rows.push_back(concat(v, Vec(t, 0)));
    for (const auto& v : data.right.basis) rows.push_back(concat(Vec(t, 0), v));
    return rref(rows, d, 2 * t);
}

namespace {

// All q-isometric, stochastic, invertible maps M^perp/M -> N^perp/N, each given
// by the canonical images of quotient_basis(M).
void defect_isometries(const Subspace& N, const Subspace& M,
                       const std::function<void(const std::vector<Vec>&, const std::vector<Vec>&)>& emit) {
    const int t = N.ambient, d = N.d;
    const int D = d % 2 == 0 ? 2 * d : d;
    auto ybasis = quotient_basis(M);
    const int k = static_cast<int>(ybasis.size());
    Subspace Nperp = complement(N, FormKind::dot);
    auto reps = coset_reps(Nperp, N);
    std::vector<int> qy(k);
    std::vector<std::vector<int>> by(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
        qy[i] = quadratic_q(ybasis[i], d);
        for (int j = 0; j < k; ++j) by[i][j] = bilinear(ybasis[i], ybasis[j], d, FormKind::dot);
    }
    bool ones_first = !M.contains(ones(t));
    std::vector<Vec> img;
    std::function<void(const Subspace&)> rec = [&](const Subspace& acc) {
        int i = static_cast<int>(img.size());
        if (i == k) {
            emit(ybasis, img);
            return;
        }
        auto consider = [&](const Vec& c) {
            if (quadratic_q(c, d) % D != qy[i]) return;
            for (int j = 0; j < i; ++j)
                if (bilinear(c, img[j], d, FormKind::dot) != by[i][j]) return;
            if (acc.contains(c)) return;
            IMat rows = acc.basis;
            rows.push_back(c);
            Subspace next = rref(rows, d, t);
            img.push_back(c);
            rec(next);
            img.pop_back();
        };
        if (i == 0 && ones_first) {
            consider(N.reduce(ones(t)));
        } else {
            for (const auto& c : reps) consider(c);
        }
    };
    rec(N);
}

}  // namespace

const std::vector<Subspace>& enumerate_sigma(int t, int d) {
    check_sigma_envelope(t, d);
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Subspace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto defects = defect_subspaces(t, d);
    std::set<Subspace> out;
    for (const auto& N : defects)
        for (const auto& M : defects) {
            if (N.dim() != M.dim() || N.contains(ones(t)) != M.contains(ones(t))) continue;
            defect_isometries(N, M, [&](const std::vector<Vec>& ys, const std::vector<Vec>& xs) {
                DefectData dd{N, M, ys, xs};
                Subspace T = reconstruct(dd);
                if (!is_stochastic_lagrangian(T)) throw InvariantError("enumerate_sigma: constructed T is invalid");
                out.insert(T);
            });
        }
    std::vector<Subspace> v(out.begin(), out.end());
    if (BigInt(v.size()) != sigma_count(t, d))
        throw InvariantError("enumerate_sigma: found " + std::to_string(v.size()) + " elements, expected " +
                             sigma_count(t, d).str());
    return cache.emplace(key, std::move(v)).first->second;
}

std::vector<Subspace> enumerate_sigma_dfs(int t, int d) {
    check_sigma_envelope(t, d);
    const int D = d % 2 == 0 ? 2 * d : d;
    Vec one = ones(2 * t);
    std::vector<Vec> pool;
    for (const auto& v : all_vectors(d, 2 * t)) {
        if (quadratic_Q(v, d) % D != 0) continue;
        if (bilinear(v, one, d, FormKind::hyperbolic) != 0) continue;
        pool.push_back(v);
    }
    auto out = grow_subspaces(
        rref({one}, d, 2 * t), pool,
        [d](const Vec& a, const Vec& b) { return bilinear(a, b, d, FormKind::hyperbolic) == 0; }, t);
    std::sort(out.begin(), out.end());
    return out;
}

long long sigma_index(const Subspace& T) {
    const auto& sig = enumerate_sigma(T.ambient / 2, T.d);
    auto it = std::lower_bound(sig.begin(), sig.end(), T);
    if (it == sig.end() || *it != T) return -1;
    return it - sig.begin();
}

IMat identity_matrix(int t) {
    IMat I(t, Vec(t, 0));
    for (int i = 0; i < t; ++i) I[i][i] = 1;
    return I;
}

IMat permutation_matrix(const std::vector<int>& perm) {
    int t = static_cast<int>(perm.size());
    IMat P(t, Vec(t, 0));
    for (int i = 0; i < t; ++i) P[perm[i]][i] = 1;
    return P;
}

IMat mat_mul(const IMat& a, const IMat& b, int d) {
    size_t r = a.size(), m = b.size(), c = b.empty() ? 0 : b[0].size();
    IMat out(r, Vec(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            long long s = 0;
            for (size_t k = 0; k < m; ++k) s += static_cast<long long>(a[i][k]) * b[k][j];
            out[i][j] = mod(s, d);
        }
    return out;
}

IMat transpose(const IMat& a) {
    if (a.empty()) return a;
    IMat out(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

static Vec column(const IMat& O, int j) {
    Vec c(O.size());
    for (size_t r = 0; r < O.size(); ++r) c[r] = O[r][j];
    return c;
}

bool is_member_O(const IMat& O, int t, int d) {
    const int D = d % 2 == 0 ? 2 * d : d;
    if (static_cast<int>(O.size()) != t) return false;
    for (const auto& r : O)
        if (static_cast<int>(r.size()) != t) return false;
    for (int i = 0; i < t; ++i) {
        Vec ci = column(O, i);
        if (quadratic_q(ci, d) % D != 1 % D) return false;
        for (int j = i + 1; j < t; ++j)
            if (bilinear(ci, column(O, j), d, FormKind::dot) != 0) return false;
    }
    for (int r = 0; r < t; ++r) {
        long long s = 0;
        for (int c = 0; c < t; ++c) s += O[r][c];
        if (mod(s, d) != 1) return false;
    }
    return true;
}

const std::vector<IMat>& enumerate_O(int t, int d) {
    check_sigma_envelope(t, d);
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<IMat>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const int D = d % 2 == 0 ? 2 * d : d;
    std::vector<Vec> cand;
    for (const auto& v : all_vectors(d, t))
        if (quadratic_q(v, d) % D == 1 % D) cand.push_back(v);
    std::vector<IMat> out;
    std::vector<Vec> cols;
    std::function<void()> rec = [&]() {
        int j = static_cast<int>(cols.size());
        if (j == t) {
            IMat O(t, Vec(t));
            for (int c = 0; c < t; ++c)
                for (int r = 0; r < t; ++r) O[r][c] = cols[c][r];
            if (is_member_O(O, t, d)) out.push_back(O);
            return;
        }
        for (const auto& c : cand) {
            bool ok = true;
            for (const auto& p : cols)
                if (bilinear(p, c, d, FormKind::dot) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cols.push_back(c);
            rec();
            cols.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return cache.emplace(key, std::move(out)).first->second;
}

Subspace T_of_O(const IMat& O, int d) {
    int t = static_cast<int>(O.size());
    IMat rows;
    for (int j = 0; j < t; ++j) {
        Vec e(t, 0);
        e[j] = 1;
        rows.push_back(concat(column(O, j), e));
    }
    return rref(rows, d, 2 * t);
}

IntMat r_of_T(const Subspace& T) {
    const int t = T.ambient / 2, d = T.d;
    long long dim = ipow(d, t);
    check_cap(dim, "r_of_T");
    IntMat r = IntMat::Zero(dim, dim);
    for (const auto& e : T.elements()) r(from_digits(left_half(e), d), from_digits(right_half(e), d)) = 1;
    return r;
}

std::vector<std::pair<long long, long long>> R_support(const Subspace& T, int n) {
    const int t = T.ambient / 2, d = T.d;
    auto elems = T.elements();
    const long long E = static_cast<long long>(elems.size());
    const long long total = ipow(E, n);
    std::vector<std::pair<long long, long long>> out;
    out.reserve(total);
    std::vector<long long> choice(n, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            choice[i] = rem % E;
            rem /= E;
        }
        long long row = 0, col = 0;
        for (int c = 0; c < t; ++c)
            for (int i = 0; i < n; ++i) {
                const Vec& e = elems[choice[i]];
                row = row * d + e[c];
                col = col * d + e[t + c];
            }
        out.emplace_back(row, col);
    }
    return out;
}

CMat R_of_T(const Subspace& T, int n) {
    const int t = T.ambient / 2;
    long long dim = ipow(T.d, t * n);
    check_cap(dim, "R_of_T");
    CMat R = CMat::Zero(dim, dim);
    for (const auto& [r, c] : R_support(T, n)) R(r, c) = 1.0;
    return R;
}

Cx R_expectation(const Subspace& T, int n, const CVec& psi) {
    const int t = T.ambient / 2, d = T.d;
    if (psi.size() != ipow(d, n)) throw PreconditionError("R_expectation: dimension mismatch");
    auto elems = T.elements();
    const long long E = static_cast<long long>(elems.size());
    const long long total = ipow(E, n);
    std::vector<long long> choice(n, 0);
    Cx sum = 0;
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            choice[i] = rem % E;
            rem /= E;
        }
        Cx prod = 1;
        for (int c = 0; c < t && prod != Cx(0.0, 0.0); ++c) {
            long long xr = 0, yr = 0;
            for (int i = 0; i < n; ++i) {
                xr = xr * d + elems[choice[i]][c];
                yr = yr * d + elems[choice[i]][t + c];
            }
            prod *= std::conj(psi(xr)) * psi(yr);
        }
        sum += prod;
    }
    return sum;
}

namespace {

// (U (x) ... (x) U) M for M of dimension d^t, applying U on one factor at a time.
CMat apply_factorwise(const CMat& U, const CMat& M, int t, int d) {
    CMat cur = M;
    const long long dim = M.rows();
    for (int f = 0; f < t; ++f) {
        long long stride = ipow(d, t - 1 - f);
        CMat next = CMat::Zero(dim, M.cols());
        for (long long row = 0; row < dim; ++row) {
            int a = static_cast<int>((row / stride) % d);
            long long base = row - a * stride;
            for (int b = 0; b < d; ++b) {
                Cx u = U(a, b);
                if (u == Cx(0.0, 0.0)) continue;
                next.row(row) += u * cur.row(base + b * stride);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

CommutatorReport commutes_with_clifford(const Subspace& T) {
    const int t = T.ambient / 2, d = T.d;
    CommutatorReport rep;
    long long dim1 = ipow(d, t);
    check_cap(dim1, "commutes_with_clifford");
    CMat r = R_of_T(T, 1);
    {
        CMat F = fourier_gate(d);
        CMat left = apply_factorwise(F, r, t, d);
        // r F^{(x)t} = ((F^T)^{(x)t} r^T)^T
        CMat right = apply_factorwise(F.transpose(), r.transpose(), t, d).transpose();
        rep.fourier = (left - right).cwiseAbs().maxCoeff();
    }
    {
        CMat P = phase_gate(d);
        std::vector<Cx> diag(dim1);
        for (long long k = 0; k < dim1; ++k) {
            Cx v = 1;
            for (int a : digits(k, d, t)) v *= P(a, a);
            diag[k] = v;
        }
        double m = 0;
        for (const auto& [x, y] : R_support(T, 1)) m = std::max(m, std::abs(diag[x] - diag[y]));
        rep.phase = m;
    }
    {
        // CADD on both qudits of every copy is a basis permutation; commutation
        // means the support of R(T) is invariant under conjugation by it.
        check_cap(ipow(d, 2 * t), "commutes_with_clifford (n=2)");
        auto perm = [&](long long idx) {
            auto v = digits(idx, d, 2 * t);
            for (int c = 0; c < t; ++c) v[2 * c + 1] = (v[2 * c + 1] + v[2 * c]) % d;
            return from_digits(v, d);
        };
        auto supp = R_support(T, 2);
        std::set<std::pair<long long, long long>> s(supp.begin(), supp.end());
        double m = 0;
        for (const auto& [x, y] : supp)
            if (!s.count({perm(x), perm(y)})) {
                m = 1.0;
                break;
            }
        rep.cadd = m;
    }
    return rep;
}

long long exact_rank(const std::vector<std::vector<BigInt>>& m0) {
    auto m = m0;
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    size_t rank = 0;
    BigInt prev = 1;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<long long>(rank);
}

long long linear_independence_check(int t, int d, int n) {
    const auto& sig = enumerate_sigma(t, d);
    const size_t N = sig.size();
    std::vector<std::vector<BigInt>> G(N, std::vector<BigInt>(N));
    BigInt dd = d;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i; j < N; ++j) {
            int k = intersect(sig[i], sig[j]).dim();
            G[i][j] = G[j][i] = boost::multiprecision::pow(dd, n * k);
        }
    return exact_rank(G);
}

static bool valid_defect(const Subspace& N) {
    const int d = N.d, D = d % 2 == 0 ? 2 * d : d;
    if (!is_totally_isotropic(N, QuadKind::q)) return false;
    for (const auto& b : N.basis) {
        long long s = std::accumulate(b.begin(), b.end(), 0LL);
        if (mod(s, d) != 0 || quadratic_q(b, d) % D != 0) return false;
    }
    return true;
}

CMat css_projector(const Subspace& N, int t, int d) {
    if (N.ambient != t || N.d != d || !valid_defect(N))
        throw PreconditionError("css_projector: N must be totally q-isotropic and co-stochastic");
    long long dim = ipow(d, t);
    check_cap(dim, "css_projector");
    auto elems = N.elements();
    CMat P = CMat::Zero(dim, dim);
    for (const auto& p : elems)
        for (const auto& q : elems)
            for (long long k = 0; k < dim; ++k) {
                auto kd = digits(k, d, t);
                long long e = 0;
                for (int i = 0; i < t; ++i) {
                    kd[i] = (kd[i] + q[i]) % d;
                    e += static_cast<long long>(p[i]) * kd[i];
                }
                P(from_digits(kd, d), k) += omega_pow(d, e);
            }
    double sz = static_cast<double>(elems.size());
    return P / (sz * sz);
}

Subspace css_T(const Subspace& N) {
    DefectData dd;
    dd.left = N;
    dd.right = N;
    dd.y_basis = quotient_basis(N);
    dd.x_image = dd.y_basis;
    return reconstruct(dd);
}

Subspace left_right_act(const IMat& O, const Subspace& T, const IMat& Op) {
    const int t = T.ambient / 2, d = T.d;
    IMat OpT = transpose(Op);
    IMat rows;
    for (const auto& b : T.basis) {
        Vec x = left_half(b), y = right_half(b);
        Vec ox(t, 0), oy(t, 0);
        for (int r = 0; r < t; ++r) {
            long long s1 = 0, s2 = 0;
            for (int c = 0; c < t; ++c) {
                s1 += static_cast<long long>(O[r][c]) * x[c];
                s2 += static_cast<long long>(OpT[r][c]) * y[c];
            }
            ox[r] = mod(s1, d);
            oy[r] = mod(s2, d);
        }
        rows.push_back(concat(ox, oy));
    }
    return rref(rows, d, 2 * t);
}

std::vector<IMat> O_generators(int t, int d) {
    const auto& group = enumerate_O(t, d);
    std::vector<IMat> gens;
    std::set<IMat> closure{identity_matrix(t)};
    for (const auto& g : group) {
        if (closure.count(g)) continue;
        gens.push_back(g);
        std::vector<IMat> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
            std::vector<IMat> next;
            for (const auto& h : frontier)
                for (const auto& s : gens) {
                    IMat p = mat_mul(h, s, d);
                    if (closure.insert(p).second) next.push_back(p);
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

DoubleCosetTable double_cosets(int t, int d) {
    const auto& sig = enumerate_sigma(t, d);
    auto gens = O_generators(t, d);
    IMat I = identity_matrix(t);
    std::vector<long long> coset_of(sig.size(), -1);
    DoubleCosetTable table;
    for (size_t s = 0; s < sig.size(); ++s) {
        if (coset_of[s] >= 0) continue;
        DoubleCoset dc;
        dc.representative = static_cast<long long>(s);
        long long id = static_cast<long long>(table.cosets.size());
        std::vector<long long> frontier{static_cast<long long>(s)};
        coset_of[s] = id;
        while (!frontier.empty()) {
            std::vector<long long> next;
            for (long long i : frontier) {
                dc.members.push_back(i);
                for (const auto& g : gens) {
                    for (const Subspace& img : {left_right_act(g, sig[i], I), left_right_act(I, sig[i], g)}) {
                        long long j = sigma_index(img);
                        if (j < 0) throw InvariantError("double_cosets: action left Sigma");
                        if (coset_of[j] < 0) {
                            coset_of[j] = id;
                            next.push_back(j);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(dc.members.begin(), dc.members.end());
        auto dd = defect_decompose(sig[s]);
        dc.defect_dim = dd.left.dim();
        dc.contains_ones = dd.left.contains(ones(t));
        table.cosets.push_back(std::move(dc));
    }
    bool ok = true;
    std::set<std::pair<int, bool>> seen;
    for (const auto& c : table.cosets) {
        for (long long m : c.members) {
            auto dd = defect_decompose(sig[m]);
            if (dd.left.dim() != c.defect_dim || dd.left.contains(ones(t)) != c.contains_ones ||
                dd.right.dim() != c.defect_dim || dd.right.contains(ones(t)) != c.contains_ones)
                ok = false;
        }
        if (!seen.insert({c.defect_dim, c.contains_ones}).second) ok = false;
    }
    table.invariants_consistent = ok;
    return table;
}

ComposeResult compose(const Subspace& T1, const Subspace& T2) {
    if (T1.ambient != T2.ambient || T1.d != T2.d) throw PreconditionError("compose: parameter mismatch");
    const int t = T1.ambient / 2, d = T1.d;
    IntMat P = r_of_T(T1) * r_of_T(T2);
    long long c = 0;
    IMat rows;
    long long count = 0;
    for (long long i = 0; i < P.rows(); ++i)
        for (long long j = 0; j < P.cols(); ++j) {
            long long v = P(i, j);
            if (v == 0) continue;
            if (c == 0) c = v;
            if (v != c) throw InvariantError("compose: product is not constant on its support");
            ++count;
            rows.push_back(concat(digits(i, d, t), digits(j, d, t)));
        }
    ComposeResult res;
    res.T = rref(rows, d, 2 * t);
    if (ipow(d, res.T.dim()) != count || !is_stochastic_lagrangian(res.T))
        throw InvariantError("compose: support is not a stochastic Lagrangian subspace");
    int k = 0;
    long long cc = c;
    while (cc % d == 0) {
        cc /= d;
        ++k;
    }
    if (cc != 1) throw InvariantError("compose: constant is not a power of d");
    res.k = k;
    return res;
}

ComposeResult compose_relational(const Subspace& T1, const Subspace& T2) {
    const int t = T1.ambient / 2, d = T1.d;
    std::multimap<Vec, Vec> z_of_y;
    for (const auto& e : T2.elements()) z_of_y.emplace(left_half(e), right_half(e));
    std::set<Vec> rel;
    for (const auto& e : T1.elements()) {
        auto range = z_of_y.equal_range(right_half(e));
        for (auto it = range.first; it != range.second; ++it) rel.insert(concat(left_half(e), it->second));
    }
    ComposeResult res;
    res.T = rref(IMat(rel.begin(), rel.end()), d, 2 * t);
    res.k = intersect(defect_decompose(T1).right, defect_decompose(T2).left).dim();
    return res;
}

Vec parity_vector(int t) {
    Vec p(t);
    for (int i = 0; i < t; ++i) p[i] = i % 2 == 0 ? -1 : 1;
    return p;
}

IMat anti_permutation(const std::vector<int>& perm, int t, int d, AntiKind kind, const Vec& p, int sign) {
    if (static_cast<int>(perm.size()) != t) throw PreconditionError("anti_permutation: permutation has wrong size");
    IMat pi = permutation_matrix(perm);
    IMat out(t, Vec(t));
    switch (kind) {
        case AntiKind::complement:
            if (d != 2 || t % 4 != 2) throw PreconditionError("anti_permutation: complement needs d=2 and t = 2 mod 4");
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) out[i][j] = mod(1 - pi[i][j], 2);
            break;
        case AntiKind::qudit: {
            if (d % 2 == 0 || t % d == 0) throw PreconditionError("anti_permutation: qudit form needs odd d not dividing t");
            int c = mod(2LL * inv_mod(t % d, d), d);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) out[i][j] = mod(c - pi[i][j], d);
            break;
        }
        case AntiKind::balanced: {
            if (t % 2 != 0) throw PreconditionError("anti_permutation: balanced form needs even t");
            int s = t / 2;
            if (s % d == 0) throw PreconditionError("anti_permutation: (t/2) must be invertible mod d");
            Vec pv = p.empty() ? parity_vector(t) : p;
            long long tot = 0;
            for (int v : pv) {
                if (mod(v, d) != 1 && mod(v, d) != mod(-1, d)) throw PreconditionError("anti_permutation: p must have entries +-1");
                tot += v;
            }
            if (tot != 0) throw PreconditionError("anti_permutation: p must be balanced");
            if (sign != 1 && sign != -1) throw PreconditionError("anti_permutation: sign must be +-1");
            for (int i = 0; i < t; ++i) {
                long long s_ = 0;
                for (int j = 0; j < t; ++j) s_ += static_cast<long long>(pi[i][j]) * pv[j];
                if (mod(s_ - sign * pv[i], d) != 0) throw PreconditionError("anti_permutation: pi p != sign p");
            }
            int c = inv_mod(s % d, d);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j)
                    out[i][j] = mod(pi[i][j] - static_cast<long long>(sign) * c * pv[i] * pv[j], d);
            break;
        }
    }
    if (!is_member_O(out, t, d)) throw InvariantError("anti_permutation: result is not a stochastic isometry");
    return out;
}

CMat minimal_projector(int t, int n, int d) {
    const auto& group = enumerate_O(t, d);
    long long dim = ipow(d, t * n);
    check_cap(dim, "minimal_projector");
    CMat P = CMat::Zero(dim, dim);
    for (const auto& O : group)
        for (const auto& [r, c] : R_support(T_of_O(O, d), n)) P(r, c) += 1.0;
    return P / static_cast<double>(group.size());
}

IMat icosahedron_adjacency() {
    IMat A(12, Vec(12, 0));
    auto edge = [&](int a, int b) { A[a][b] = A[b][a] = 1; };
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5;
        int l = 6 + i, ln = 6 + (i + 1) % 5;
        edge(0, u);
        edge(u, un);
        edge(l, ln);
        edge(11, l);
        edge(u, l);
        edge(un, l);
    }
    return A;
}

}  // namespace swc
