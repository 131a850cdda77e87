#include "swc/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "swc/clifford.hpp"
#include "swc/stabilizer.hpp"

namespace swc {

std::string source_name(MomentSource s) {
    switch (s) {
        case MomentSource::bruteforce: return "bruteforce";
        case MomentSource::formula: return "formula";
        case MomentSource::haar: return "haar";
        case MomentSource::orbit: return "orbit";
    }
    return "?";
}

BigInt moment_normalization(int n, int d, int t) {
    BigInt dd = d, dn = boost::multiprecision::pow(dd, n);
    BigInt z = dn;
    for (int k = 0; k <= t - 2; ++k) z *= boost::multiprecision::pow(dd, k) + dn;
    return z;
}

BigInt haar_normalization(long long D, int t) {
    BigInt z = 1;
    for (int k = 0; k < t; ++k) z *= BigInt(k + D);
    return z;
}

std::vector<std::vector<int>> all_permutations(int t) {
    std::vector<int> p(t);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

static int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

CMat permutation_operator(long long D, const std::vector<int>& perm) {
    const int t = static_cast<int>(perm.size());
    long long dim = 1;
    for (int i = 0; i < t; ++i) {
        dim *= D;
        check_cap(dim, "permutation_operator");
    }
    CMat P = CMat::Zero(dim, dim);
    std::vector<long long> y(t), x(t);
    for (long long col = 0; col < dim; ++col) {
        long long rem = col;
        for (int i = t - 1; i >= 0; --i) {
            y[i] = rem % D;
            rem /= D;
        }
        for (int i = 0; i < t; ++i) x[perm[i]] = y[i];
        long long row = 0;
        for (int i = 0; i < t; ++i) row = row * D + x[i];
        P(row, col) = 1.0;
    }
    return P;
}

MomentOperator moment_bruteforce(int n, int d, int t) {
    long long dim = ipow(d, t * n);
    check_cap(dim, "moment_bruteforce");
    const auto& ens = enumerate_stabilizer_states(n, d);
    CMat M = CMat::Zero(dim, dim);
    for (const auto& s : ens.states) {
        CVec v = kron_vec_power(s.vector, t);
        M.noalias() += v * v.adjoint();
    }
    M /= static_cast<double>(ens.states.size());
    return {t, n, d, std::move(M), MomentSource::bruteforce};
}

MomentOperator moment_formula(int n, int d, int t) {
    long long dim = ipow(d, t * n);
    check_cap(dim, "moment_formula");
    const auto& sig = enumerate_sigma(t, d);
    double z = moment_normalization(n, d, t).convert_to<double>();
    CMat M = CMat::Zero(dim, dim);
    for (const auto& T : sig)
        for (const auto& [r, c] : R_support(T, n)) M(r, c) += 1.0;
    M /= z;
    return {t, n, d, std::move(M), MomentSource::formula};
}

MomentOperator haar_moment(long long D, int t) {
    long long dim = 1;
    for (int i = 0; i < t; ++i) dim *= D;
    check_cap(dim, "haar_moment");
    CMat M = CMat::Zero(dim, dim);
    for (const auto& p : all_permutations(t)) M += permutation_operator(D, p);
    M /= haar_normalization(D, t).convert_to<double>();
    MomentOperator out;
    out.t = t;
    out.n = 1;
    out.d = static_cast<int>(D);
    out.op = std::move(M);
    out.source = MomentSource::haar;
    return out;
}

namespace {

std::mutex g_mu;

const std::vector<std::vector<int>>& intersection_dims(int t, int d) {
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(g_mu);
    auto key = std::make_pair(t, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& sig = enumerate_sigma(t, d);
    const size_t N = sig.size();
    std::vector<std::vector<int>> k(N, std::vector<int>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i; j < N; ++j) k[i][j] = k[j][i] = intersect(sig[i], sig[j]).dim();
    return cache.emplace(key, std::move(k)).first->second;
}

bool gram_invertible(int t, int d, int n) {
    static std::map<std::tuple<int, int, int>, bool> cache;
    auto key = std::make_tuple(t, d, n);
    {
        std::lock_guard<std::mutex> lock(g_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool ok = linear_independence_check(t, d, n) == static_cast<long long>(enumerate_sigma(t, d).size());
    std::lock_guard<std::mutex> lock(g_mu);
    cache[key] = ok;
    return ok;
}

}  // namespace

RMat sigma_gram(int t, int d, int n) {
    const auto& k = intersection_dims(t, d);
    const size_t N = k.size();
    RMat G(N, N);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) G(i, j) = std::pow(static_cast<double>(d), n * k[i][j]);
    return G;
}

double coefficient_norm(int t, int d, int n, const CVec& beta) {
    RMat G = sigma_gram(t, d, n);
    if (beta.size() != G.rows()) throw PreconditionError("coefficient_norm: wrong coefficient count");
    double v = (beta.adjoint() * G.cast<Cx>() * beta)(0, 0).real();
    return std::sqrt(std::max(0.0, v));
}

std::vector<bool> permutation_mask(int t, int d) {
    const auto& sig = enumerate_sigma(t, d);
    std::vector<bool> mask(sig.size(), false);
    for (const auto& p : all_permutations(t)) {
        long long i = sigma_index(T_of_O(permutation_matrix(p), d));
        if (i < 0) throw InvariantError("permutation subspace missing from Sigma");
        mask[i] = true;
    }
    return mask;
}

RVec haar_coefficients(int t, int d, int n) {
    auto mask = permutation_mask(t, d);
    double h = haar_normalization(ipow(d, n), t).convert_to<double>();
    RVec c = RVec::Zero(mask.size());
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) c(i) = 1.0 / h;
    return c;
}

double design_gap(int n, int d, int t, long long dense_limit) {
    long long dim = ipow(d, t * n);
    if (dim <= dense_limit) {
        CMat diff = moment_formula(n, d, t).op - haar_moment(ipow(d, n), t).op;
        return diff.norm();
    }
    double z = moment_normalization(n, d, t).convert_to<double>();
    RVec h = haar_coefficients(t, d, n);
    CVec beta(h.size());
    for (long long i = 0; i < h.size(); ++i) beta(i) = 1.0 / z - h(i);
    return coefficient_norm(t, d, n, beta);
}

OrbitMoment orbit_moment(const CVec& psi, int n, int d, int t) {
    if (psi.size() != ipow(d, n)) throw PreconditionError("orbit_moment: dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > 1e-9) throw PreconditionError("orbit_moment: state is not normalized");
    const auto& sig = enumerate_sigma(t, d);
    if (!gram_invertible(t, d, n))
        throw PreconditionError("orbit_moment: Gram matrix is singular at n=" + std::to_string(n) +
                                " (the R(T) are dependent below n = t-1)");
    RMat G = sigma_gram(t, d, n);
    RVec mr(sig.size()), mi(sig.size());
    for (size_t i = 0; i < sig.size(); ++i) {
        Cx m = std::conj(R_expectation(sig[i], n, psi));
        mr(i) = m.real();
        mi(i) = m.imag();
    }
    Eigen::FullPivLU<RMat> lu(G);
    RVec ar = lu.solve(mr), ai = lu.solve(mi);
    OrbitMoment om;
    om.t = t;
    om.n = n;
    om.d = d;
    om.alpha.resize(sig.size());
    for (size_t i = 0; i < sig.size(); ++i) om.alpha(i) = Cx(ar(i), ai(i));
    return om;
}

MomentOperator orbit_moment_operator(const OrbitMoment& om) {
    long long dim = ipow(om.d, om.t * om.n);
    check_cap(dim, "orbit_moment_operator");
    const auto& sig = enumerate_sigma(om.t, om.d);
    CMat M = CMat::Zero(dim, dim);
    for (size_t i = 0; i < sig.size(); ++i)
        for (const auto& [r, c] : R_support(sig[i], om.n)) M(r, c) += om.alpha(i);
    return {om.t, om.n, om.d, std::move(M), MomentSource::orbit};
}

CMat monte_carlo_orbit_moment(const CVec& psi, int n, int d, int t, int samples, int word_length, Rng& rng) {
    long long dim = ipow(d, t * n);
    check_cap(dim, "monte_carlo_orbit_moment");
    CMat acc = CMat::Zero(dim, dim);
    for (int s = 0; s < samples; ++s) {
        auto rc = random_clifford(n, d, word_length, rng);
        CVec v = kron_vec_power(rc.unitary * psi, t);
        acc.noalias() += v * v.adjoint();
    }
    return acc / static_cast<double>(samples);
}

Subspace transpose_subspace(const Subspace& T) {
    const int t = T.ambient / 2;
    IMat rows;
    for (const auto& b : T.basis) {
        Vec s(b.begin() + t, b.end());
        s.insert(s.end(), b.begin(), b.begin() + t);
        rows.push_back(s);
    }
    return rref(rows, T.d, T.ambient);
}

std::vector<std::vector<long long>> equivalence_classes(int t, int d) {
    const auto& sig = enumerate_sigma(t, d);
    IMat I = identity_matrix(t);
    std::vector<IMat> swaps;
    for (int i = 0; i + 1 < t; ++i) {
        std::vector<int> p(t);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        swaps.push_back(permutation_matrix(p));
    }
    std::vector<long long> cls(sig.size(), -1);
    std::vector<std::vector<long long>> out;
    auto closure = [&](long long seed) {
        std::vector<long long> members, frontier{seed};
        long long id = static_cast<long long>(out.size());
        cls[seed] = id;
        while (!frontier.empty()) {
            std::vector<long long> next;
            for (long long i : frontier) {
                members.push_back(i);
                std::vector<Subspace> imgs{transpose_subspace(sig[i])};
                for (const auto& s : swaps) {
                    imgs.push_back(left_right_act(s, sig[i], I));
                    imgs.push_back(left_right_act(I, sig[i], s));
                }
                for (const auto& img : imgs) {
                    long long j = sigma_index(img);
                    if (j < 0) throw InvariantError("equivalence_classes: action left Sigma");
                    if (cls[j] < 0) {
                        cls[j] = id;
                        next.push_back(j);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    };
    closure(sigma_index(diagonal_subspace(t, d)));
    for (size_t i = 0; i < sig.size(); ++i)
        if (cls[i] < 0) closure(static_cast<long long>(i));
    return out;
}

RVec nnls(const RMat& A, const RVec& b, int max_iter) {
    const long long m = A.rows(), n = A.cols();
    if (max_iter <= 0) max_iter = static_cast<int>(3 * n + 30);
    RVec x = RVec::Zero(n);
    std::vector<bool> passive(n, false);
    const double tol = 10.0 * std::numeric_limits<double>::epsilon() * A.cwiseAbs().colwise().sum().maxCoeff() *
                       static_cast<double>(std::max(m, n));
    RVec w = A.transpose() * (b - A * x);
    auto solve_passive = [&]() {
        std::vector<long long> idx;
        for (long long j = 0; j < n; ++j)
            if (passive[j]) idx.push_back(j);
        RMat Ap(m, idx.size());
        for (size_t k = 0; k < idx.size(); ++k) Ap.col(k) = A.col(idx[k]);
        RVec sp = Ap.colPivHouseholderQr().solve(b);
        RVec s = RVec::Zero(n);
        for (size_t k = 0; k < idx.size(); ++k) s(idx[k]) = sp(k);
        return s;
    };
    for (int iter = 0; iter < max_iter; ++iter) {
        long long jmax = -1;
        double wmax = tol;
        for (long long j = 0; j < n; ++j)
            if (!passive[j] && w(j) > wmax) {
                wmax = w(j);
                jmax = j;
            }
        if (jmax < 0) break;
        passive[jmax] = true;
        for (int inner = 0; inner < max_iter; ++inner) {
            RVec s = solve_passive();
            double alpha = 1.0;
            bool feasible = true;
            for (long long j = 0; j < n; ++j)
                if (passive[j] && s(j) <= 0) {
                    feasible = false;
                    alpha = std::min(alpha, x(j) / (x(j) - s(j)));
                }
            if (feasible) {
                x = s;
                break;
            }
            x += alpha * (s - x);
            for (long long j = 0; j < n; ++j)
                if (passive[j] && x(j) <= tol) {
                    passive[j] = false;
                    x(j) = 0;
                }
        }
        w = A.transpose() * (b - A * x);
    }
    return x;
}

std::vector<CVec> design_seed_ensemble(int n, int d, int random_states, Rng& rng) {
    std::vector<CVec> out;
    CVec zero = CVec::Zero(ipow(d, n));
    zero(0) = 1.0;
    out.push_back(zero);
    for (int i = 0; i < random_states; ++i) out.push_back(haar_state(ipow(d, n), rng));
    return out;
}

OrbitDesign find_design_weights(const std::vector<CVec>& fiducials, int n, int d, int t) {
    if (fiducials.empty()) throw PreconditionError("find_design_weights: no fiducial states");
    if (n < t - 1) throw PreconditionError("find_design_weights: requires n >= t - 1");
    const auto classes = equivalence_classes(t, d);
    const int M = static_cast<int>(classes.size());
    const int K = static_cast<int>(fiducials.size());
    std::vector<OrbitMoment> oms;
    RMat A(M - 1, K);
    for (int j = 0; j < K; ++j) {
        oms.push_back(orbit_moment(fiducials[j], n, d, t));
        for (int i = 1; i < M; ++i) {
            double s = 0;
            for (long long m : classes[i]) s += oms.back().alpha(m).real();
            A(i - 1, j) = s / static_cast<double>(classes[i].size());
        }
    }
    const double scale = std::max(A.size() ? A.cwiseAbs().maxCoeff() : 0.0, 1e-300);

    RVec p = RVec::Zero(K);
    if (M == 1) {
        p(0) = 1.0;
    } else {
        RMat E(M, K);
        E.topRows(M - 1) = A / scale;
        E.row(M - 1).setOnes();
        RVec b = RVec::Zero(M);
        b(M - 1) = 1.0;
        p = nnls(E, b);
        if (p.sum() <= 0) throw PreconditionError("find_design_weights: seed ensemble admits no feasible weights");
        p /= p.sum();
        double res = (A * p).cwiseAbs().maxCoeff() / scale;
        if (res > 1e-9)
            throw PreconditionError("find_design_weights: seed ensemble cannot satisfy the design conditions, residual " +
                                    std::to_string(res));
    }

    // Support reduction: repeatedly move along a null direction of M active columns.
    auto support = [&]() {
        std::vector<int> s;
        for (int j = 0; j < K; ++j)
            if (p(j) > 0) s.push_back(j);
        return s;
    };
    int anchor = support().front();
    for (;;) {
        std::vector<int> others;
        for (int j : support())
            if (j != anchor) others.push_back(j);
        if (static_cast<int>(others.size()) < M) break;
        std::vector<int> J(others.begin(), others.begin() + M);
        RVec q(M);
        if (M == 1) {
            q(0) = 1.0;
        } else {
            RMat B(M - 1, M);
            for (int c = 0; c < M; ++c) B.col(c) = A.col(J[c]) / scale;
            Eigen::JacobiSVD<RMat> svd(B, Eigen::ComputeFullV);
            q = svd.matrixV().col(M - 1);
        }
        if (q.maxCoeff() <= 0) q = -q;
        double xc = std::numeric_limits<double>::infinity();
        int hit = -1;
        for (int c = 0; c < M; ++c)
            if (q(c) > 0 && p(J[c]) / q(c) < xc) {
                xc = p(J[c]) / q(c);
                hit = c;
            }
        for (int c = 0; c < M; ++c) p(J[c]) -= xc * q(c);
        p(J[hit]) = 0;
        for (int j = 0; j < K; ++j)
            if (p(j) < 0) {
                if (p(j) < -1e-12) throw InvariantError("find_design_weights: weight became negative");
                p(j) = 0;
            }
        p /= p.sum();
    }

    // Polish on the final support: minimum-norm correction restoring the constraints.
    std::vector<int> S = support();
    {
        RMat B(M, S.size());
        for (size_t c = 0; c < S.size(); ++c) {
            if (M > 1) B.col(c).head(M - 1) = A.col(S[c]) / scale;
            B(M - 1, c) = 1.0;
        }
        RVec ps(S.size());
        for (size_t c = 0; c < S.size(); ++c) ps(c) = p(S[c]);
        RVec r = RVec::Zero(M);
        r(M - 1) = 1.0;
        r -= B * ps;
        RVec delta = B.completeOrthogonalDecomposition().solve(r);
        RVec cand = ps + delta;
        if (cand.minCoeff() >= 0)
            for (size_t c = 0; c < S.size(); ++c) p(S[c]) = cand(c);
    }

    OrbitDesign out;
    out.t = t;
    out.n = n;
    out.d = d;
    RVec h = haar_coefficients(t, d, n);
    CVec beta = -h.cast<Cx>();
    for (int j : S) {
        out.fiducials.push_back(fiducials[j]);
        out.weights.push_back(p(j));
        out.seed_indices.push_back(j);
        beta += p(j) * oms[j].alpha;
    }
    out.residual = M > 1 ? (A * p).cwiseAbs().maxCoeff() : 0.0;
    out.frobenius_gap = coefficient_norm(t, d, n, beta);
    return out;
}

static const Subspace& qutrit_css_T() {
    static const Subspace T = css_T(rref({ones(3)}, 3, 3));
    return T;
}

double qutrit_overlap(double theta) {
    CVec psi = CVec::Zero(3);
    psi(0) = std::cos(theta);
    psi(1) = -std::sin(theta);
    return R_expectation(qutrit_css_T(), 1, psi).real();
}

QutritFiducial qutrit_fiducial_search(int n) {
    if (n < 2) throw PreconditionError("qutrit_fiducial_search: requires n >= 2");
    QutritFiducial out;
    out.n = n;
    out.target = std::pow(3.0 / (std::pow(3.0, n) + 2.0), 1.0 / n);
    double lo = 0.0, hi = kPi / 4;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (qutrit_overlap(mid) > out.target)
            lo = mid;
        else
            hi = mid;
    }
    out.theta = 0.5 * (lo + hi);
    out.value = qutrit_overlap(out.theta);
    if (ipow(3, 3 * n) <= 1LL << 22) {
        CVec psi = CVec::Zero(3);
        psi(0) = std::cos(out.theta);
        psi(1) = -std::sin(out.theta);
        CVec big = kron_vec_power(psi, n);
        auto om = orbit_moment(big, n, 3, 3);
        CVec beta = om.alpha - haar_coefficients(3, 3, n).cast<Cx>();
        out.orbit_gap = coefficient_norm(3, 3, n, beta);
    }
    return out;
}

std::pair<double, double> qutrit_third_moment_dims(int n) {
    long long D = ipow(3, n);
    CMat P = R_of_T(qutrit_css_T(), n) / static_cast<double>(D);
    CMat sym = CMat::Zero(P.rows(), P.cols()), alt = sym;
    for (const auto& p : all_permutations(3)) {
        CMat R = permutation_operator(D, p);
        sym += R;
        alt += static_cast<double>(perm_sign(p)) * R;
    }
    sym /= 6.0;
    alt /= 6.0;
    return {(sym * P * sym).trace().real(), (alt * P * alt).trace().real()};
}

}  // namespace swc
