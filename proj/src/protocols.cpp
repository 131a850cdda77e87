#include "swc/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swc/clifford.hpp"
#include "swc/commutant.hpp"
#include "swc/phase_space.hpp"
#include "swc/stabilizer.hpp"

namespace swc {

bool ProtocolReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.second; });
}

static void require_state(const CVec& psi, int n, int d, const std::string& what) {
    if (psi.size() != ipow(d, n)) throw PreconditionError(what + ": state has wrong dimension");
    if (std::abs(psi.norm() - 1.0) > 1e-9) throw PreconditionError(what + ": state is not normalized");
}

// <W_x | psi psi> for the Bell basis |W_x> = (W_x (x) I)|Phi+>.
static std::vector<Cx> bell_amplitudes(const CVec& psi, int n) {
    PhaseSpace ps{n, 2};
    const double norm = std::pow(2.0, -n / 2.0);
    std::vector<Cx> out(ps.size());
    for (long long i = 0; i < ps.size(); ++i) {
        Vec x = ps.point(i);
        CVec wd = apply_weyl(n, 2, x, psi);  // W_x is Hermitian for qubits
        Cx s = 0;
        for (long long q = 0; q < psi.size(); ++q) s += wd(q) * psi(q);
        out[i] = norm * s;
    }
    return out;
}

std::vector<double> bell_sampling_distribution(const CVec& psi, int n) {
    require_state(psi, n, 2, "bell_sampling_distribution");
    auto b = bell_amplitudes(psi, n);
    std::vector<double> p(b.size());
    for (size_t i = 0; i < b.size(); ++i) p[i] = std::norm(b[i]);
    return p;
}

BellOutcomeDistribution bell_difference_distribution(const CVec& psi, int n) {
    require_state(psi, n, 2, "bell_difference_distribution");
    PhaseSpace ps{n, 2};
    auto b = bell_amplitudes(psi, n);
    auto p = char_distribution(psi, n, 2);
    BellOutcomeDistribution out;
    out.n = n;
    out.prob.assign(ps.size(), 0.0);
    for (long long ai = 0; ai < ps.size(); ++ai) {
        Vec a = ps.point(ai);
        double direct = 0, conv = 0;
        for (long long xi = 0; xi < ps.size(); ++xi) {
            long long yi = ps.index(add(ps.point(xi), a, 2));
            direct += std::norm(b[xi]) * std::norm(b[yi]);
            conv += p[xi] * p[yi];
        }
        out.prob[ai] = conv;
        out.route_gap = std::max(out.route_gap, std::abs(direct - conv));
    }
    if (out.route_gap > 1e-10) throw InvariantError("bell_difference_distribution: routes disagree");
    return out;
}

CMat bell_difference_projector(int n, const Vec& a) {
    PhaseSpace ps{n, 2};
    long long D = ps.hilbert_dim();
    check_cap(D * D * D * D, "bell_difference_projector");
    CVec phi = CVec::Zero(D * D);
    for (long long q = 0; q < D; ++q) phi(q * D + q) = 1.0 / std::sqrt(static_cast<double>(D));
    CMat I = CMat::Identity(D, D);
    std::vector<CVec> basis;
    for (long long i = 0; i < ps.size(); ++i) basis.push_back(kron(weyl(n, 2, ps.point(i)), I) * phi);
    CMat P = CMat::Zero(D * D * D * D, D * D * D * D);
    for (long long i = 0; i < ps.size(); ++i) {
        long long j = ps.index(add(ps.point(i), a, 2));
        CVec v = kron_vec(basis[i], basis[j]);
        P.noalias() += v * v.adjoint();
    }
    return P;
}

CMat bell_difference_projector_weyl(int n, const Vec& a) {
    PhaseSpace ps{n, 2};
    long long D = ps.hilbert_dim();
    check_cap(D * D * D * D, "bell_difference_projector_weyl");
    CMat P = CMat::Zero(D * D * D * D, D * D * D * D);
    for (long long i = 0; i < ps.size(); ++i) {
        Vec x = ps.point(i);
        P += static_cast<double>(1 - 2 * mod(symplectic_int(a, x), 2)) * kron_power(weyl(n, 2, x), 4);
    }
    return P / static_cast<double>(D * D);
}

double qubit_accept_probability(const CVec& psi, int n) {
    require_state(psi, n, 2, "qubit_accept_probability");
    auto p = char_distribution(psi, n, 2);
    double s = 0;
    for (double v : p) s += v * v * v;
    return 0.5 * (1.0 + std::pow(4.0, n) * s);
}

double qubit_accept_probability_commutant(const CVec& psi, int n) {
    require_state(psi, n, 2, "qubit_accept_probability_commutant");
    std::vector<int> id(6);
    std::iota(id.begin(), id.end(), 0);
    Subspace T = T_of_O(anti_permutation(id, 6, 2, AntiKind::complement), 2);
    return 0.5 * (1.0 + R_expectation(T, n, psi).real());
}

ProtocolReport simulate_qubit_test(const CVec& psi, int n, long long shots, unsigned long long seed) {
    if (shots <= 0) throw PreconditionError("simulate_qubit_test: shots must be positive");
    require_state(psi, n, 2, "simulate_qubit_test");
    if (n > 2) throw PreconditionError("simulate_qubit_test: dense simulation supports n <= 2");
    PhaseSpace ps{n, 2};
    auto dist = bell_difference_distribution(psi, n);
    Rng rng(seed);
    std::discrete_distribution<long long> pick(dist.prob.begin(), dist.prob.end());
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const long long D = ps.hilbert_dim();
    CMat I = CMat::Identity(D, D);
    std::vector<CMat> first(ps.size()), second(ps.size());
    for (long long i = 0; i < ps.size(); ++i) {
        CMat Pp = 0.5 * (I + weyl(n, 2, ps.point(i)));
        first[i] = kron(Pp, I);
        second[i] = kron(I, Pp);
    }
    const CVec pair = kron_vec(psi, psi);
    long long accepted = 0;
    for (long long s = 0; s < shots; ++s) {
        long long a = pick(rng);
        CVec v = first[a] * pair;
        double pplus = v.squaredNorm();
        bool out1 = unif(rng) < pplus;
        CVec post = out1 ? v : CVec(pair - v);
        post /= post.norm();
        CVec w = second[a] * post;
        bool out2 = unif(rng) < w.squaredNorm();
        if (out1 == out2) ++accepted;
    }
    ProtocolReport rep;
    rep.protocol = "qubit6";
    rep.n = n;
    rep.d = 2;
    rep.shots = shots;
    rep.p_accept = static_cast<double>(accepted) / static_cast<double>(shots);
    rep.p_accept_check = qubit_accept_probability(psi, n);
    double sigma = std::sqrt(rep.p_accept_check * (1 - rep.p_accept_check) / static_cast<double>(shots));
    rep.assertions.push_back({"within 4 sigma of the analytic value",
                              std::abs(rep.p_accept - rep.p_accept_check) <= 4 * sigma + 1e-12});
    return rep;
}

CMat qudit_V(int n, int d, int s) {
    PhaseSpace ps{n, d};
    check_cap(ipow(d, 2 * s * n), "qudit_V");
    CMat V;
    for (long long i = 0; i < ps.size(); ++i) {
        CMat W = weyl(n, d, ps.point(i));
        CMat term = kron_power(kron(W, CMat(W.adjoint())), s);
        if (i == 0)
            V = term;
        else
            V += term;
    }
    return V / static_cast<double>(ps.hilbert_dim());
}

bool is_hermitian_unitary(const CMat& V, double tol) {
    if (V.rows() != V.cols()) return false;
    if ((V - V.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    CMat I = CMat::Identity(V.rows(), V.cols());
    return (V * V - I).cwiseAbs().maxCoeff() <= tol;
}

static void require_coprime(int d, int s) {
    if (s < 2 || std::gcd(s, d) != 1) throw PreconditionError("qudit test: requires s >= 2 and gcd(s, d) = 1");
}

double qudit_accept_probability(const CVec& psi, int n, int d, int s) {
    require_coprime(d, s);
    require_state(psi, n, d, "qudit_accept_probability");
    auto p = char_distribution(psi, n, d);
    double sum = 0;
    for (double v : p) sum += std::pow(v, s);
    return 0.5 * (1.0 + std::pow(static_cast<double>(d), (s - 1) * n) * sum);
}

double qudit_accept_probability_dense(const CVec& psi, int n, int d, int s) {
    require_coprime(d, s);
    require_state(psi, n, d, "qudit_accept_probability_dense");
    CMat V = qudit_V(n, d, s);
    CVec v = kron_vec_power(psi, 2 * s);
    return 0.5 * (1.0 + v.dot(V * v).real());
}

double qudit_constant(int d, int s) {
    return 0.5 * (1.0 - std::pow(1.0 - 1.0 / (4.0 * d * d), s - 1));
}

static void require_three_copy(int d) {
    if (d % 6 != 1 && d % 6 != 5) throw PreconditionError("three-copy test: requires d = 1 or 5 mod 6");
}

CMat three_copy_V(int n, int d) {
    require_three_copy(d);
    PhaseSpace ps{n, d};
    check_cap(ipow(d, 3 * n), "three_copy_V");
    CMat V;
    for (long long i = 0; i < ps.size(); ++i) {
        CMat term = kron_power(point_operator(n, d, ps.point(i)), 3);
        if (i == 0)
            V = term;
        else
            V += term;
    }
    return V / static_cast<double>(ps.hilbert_dim());
}

double three_copy_accept_probability(const CVec& psi, int n, int d) {
    require_three_copy(d);
    require_state(psi, n, d, "three_copy_accept_probability");
    auto w = wigner(psi, n, d);
    double s = 0;
    for (double v : w) s += v * v * v;
    return 0.5 * (1.0 + std::pow(static_cast<double>(d), 2 * n) * s);
}

double three_copy_accept_probability_dense(const CVec& psi, int n, int d) {
    require_state(psi, n, d, "three_copy_accept_probability_dense");
    CMat V = three_copy_V(n, d);
    CVec v = kron_vec_power(psi, 3);
    return 0.5 * (1.0 + v.dot(V * v).real());
}

UncertaintyCheck uncertainty_weyl(const CVec& psi, int n, int d, const Vec& x, const Vec& y) {
    require_state(psi, n, d, "uncertainty_weyl");
    const double delta = 1.0 / (2.0 * d);
    double vx = std::norm(psi.dot(apply_weyl(n, d, x, psi)));
    double vy = std::norm(psi.dot(apply_weyl(n, d, y, psi)));
    UncertaintyCheck c;
    c.threshold = 1.0 - delta * delta;
    c.value = std::min(vx, vy);
    c.premise = vx > c.threshold && vy > c.threshold;
    c.conclusion = mod(symplectic_int(x, y), d) == 0;
    return c;
}

static double point_expectation(const CVec& psi, int n, int d, const Vec& x) {
    return psi.dot(point_operator(n, d, x) * psi).real();
}

UncertaintyCheck uncertainty_points(const CVec& psi, int n, int d, const Vec& x, const Vec& y, const Vec& z) {
    if (d % 2 == 0) throw PreconditionError("uncertainty_points: requires odd d");
    require_state(psi, n, d, "uncertainty_points");
    double ax = point_expectation(psi, n, d, x), ay = point_expectation(psi, n, d, y),
           az = point_expectation(psi, n, d, z);
    UncertaintyCheck c;
    c.threshold = std::sqrt(1.0 - 1.0 / (2.0 * d * d));
    c.value = std::min({ax, ay, az});
    c.premise = ax > c.threshold && ay > c.threshold && az > c.threshold;
    Vec zx(z.size()), yx(y.size());
    for (size_t i = 0; i < z.size(); ++i) {
        zx[i] = z[i] - x[i];
        yx[i] = y[i] - x[i];
    }
    c.conclusion = mod(symplectic_int(zx, yx), d) == 0;
    return c;
}

UncertaintySearch uncertainty_weyl_search(int n, int d, long long states, Rng& rng) {
    PhaseSpace ps{n, d};
    const long long N = ps.size();
    UncertaintySearch out;
    out.threshold = 1.0 - 1.0 / (4.0 * d * d);
    std::vector<std::pair<long long, long long>> pairs;
    for (long long i = 0; i < N; ++i)
        for (long long j = i + 1; j < N; ++j)
            if (mod(symplectic_int(ps.point(i), ps.point(j)), d) != 0) pairs.emplace_back(i, j);
    auto visit = [&](const CVec& psi) {
        std::vector<double> e(N);
        for (long long i = 0; i < N; ++i) e[i] = std::norm(psi.dot(apply_weyl(n, d, ps.point(i), psi)));
        for (const auto& [i, j] : pairs) {
            double m = std::min(e[i], e[j]);
            out.best = std::max(out.best, m);
            if (m > out.threshold) ++out.violations;
        }
        ++out.states;
    };
    for (long long s = 0; s < states; ++s) visit(haar_state(ps.hilbert_dim(), rng));
    if (d == 2 && n == 1) {
        for (int k = 0; k <= 720; ++k) {
            double th = kPi * k / 720.0;
            CVec psi(2);
            psi << std::cos(th), std::sin(th);
            visit(psi);
        }
    }
    return out;
}

UncertaintySearch uncertainty_points_search(int n, int d, long long states, Rng& rng) {
    if (d % 2 == 0) throw PreconditionError("uncertainty_points_search: requires odd d");
    PhaseSpace ps{n, d};
    const long long N = ps.size();
    std::vector<CMat> A(N);
    for (long long i = 0; i < N; ++i) A[i] = point_operator(n, d, ps.point(i));
    UncertaintySearch out;
    out.threshold = std::sqrt(1.0 - 1.0 / (2.0 * d * d));
    const long long K = std::min<long long>(N, 12);
    for (long long s = 0; s < states; ++s) {
        CVec psi = haar_state(ps.hilbert_dim(), rng);
        std::vector<std::pair<double, long long>> a(N);
        for (long long i = 0; i < N; ++i) a[i] = {psi.dot(A[i] * psi).real(), i};
        std::sort(a.begin(), a.end(), std::greater<>());
        // every point above the threshold is a candidate, so violations are exact;
        // `best` is taken over these and the K largest values
        long long C = K;
        while (C < N && a[C].first > out.threshold) ++C;
        for (long long i = 0; i < C; ++i)
            for (long long j = 0; j < C; ++j)
                for (long long k = 0; k < C; ++k) {
                    Vec x = ps.point(a[i].second), y = ps.point(a[j].second), z = ps.point(a[k].second);
                    Vec zx(2 * n), yx(2 * n);
                    for (int c = 0; c < 2 * n; ++c) {
                        zx[c] = z[c] - x[c];
                        yx[c] = y[c] - x[c];
                    }
                    if (mod(symplectic_int(zx, yx), d) == 0) continue;
                    double m = std::min({a[i].first, a[j].first, a[k].first});
                    out.best = std::max(out.best, m);
                    if (m > out.threshold) ++out.violations;
                }
        ++out.states;
    }
    return out;
}

double qubit_xz_uncertainty_max(int grid) {
    Vec xv{0, 1}, zv{1, 0};
    double best = 0;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j < grid; ++j) {
            double th = kPi * i / grid, ph = 2 * kPi * j / grid;
            CVec psi(2);
            psi << std::cos(th / 2), std::polar(std::sin(th / 2), ph);
            double ex = std::norm(psi.dot(apply_weyl(1, 2, xv, psi)));
            double ez = std::norm(psi.dot(apply_weyl(1, 2, zv, psi)));
            best = std::max(best, std::min(ex, ez));
        }
    return best;
}

static void require_odd(int d, const std::string& what) {
    if (d % 2 == 0) throw PreconditionError(what + ": requires odd d");
}

double sum_negativity(const CVec& psi, int n, int d) {
    require_odd(d, "sum_negativity");
    require_state(psi, n, d, "sum_negativity");
    double s = 0;
    for (double v : wigner(psi, n, d))
        if (v < 0) s -= v;
    return s;
}

double sum_negativity_abs(const CVec& psi, int n, int d) {
    require_odd(d, "sum_negativity_abs");
    require_state(psi, n, d, "sum_negativity_abs");
    double s = 0;
    for (double v : wigner(psi, n, d)) s += std::abs(v);
    return 0.5 * (s - 1.0);
}

double mana(const CVec& psi, int n, int d) { return std::log(2.0 * sum_negativity(psi, n, d) + 1.0); }

HudsonReport robust_hudson_check(const CVec& psi, int n, int d) {
    require_odd(d, "robust_hudson_check");
    require_state(psi, n, d, "robust_hudson_check");
    HudsonReport r;
    r.deficit = 1.0 - max_stabilizer_overlap(psi, n, d).value;
    r.sn = sum_negativity(psi, n, d);
    r.rhs = 9.0 * d * d * r.sn;
    auto w = wigner(psi, n, d);
    double dn = std::pow(static_cast<double>(d), n), wnorm = 0;
    for (double v : w) {
        double q = dn * v * v;
        r.q_moment += q * q;
        wnorm += std::abs(v);
    }
    r.holder = 1.0 / (dn * wnorm * wnorm);
    r.robust_ok = r.deficit <= r.rhs + 1e-12;
    r.holder_ok = r.q_moment >= r.holder - 1e-12;
    return r;
}

CVec choi_state(const CMat& U) {
    const long long D = U.rows();
    if (U.cols() != D || (U.adjoint() * U - CMat::Identity(D, D)).cwiseAbs().maxCoeff() > 1e-9)
        throw PreconditionError("choi_state: input is not unitary");
    CVec v(D * D);
    const double c = 1.0 / std::sqrt(static_cast<double>(D));
    for (long long i = 0; i < D; ++i)
        for (long long q = 0; q < D; ++q) v(i * D + q) = c * U(i, q);
    return v;
}

ProtocolReport clifford_test(const CMat& U) {
    const long long D = U.rows();
    int n = 0;
    while ((1LL << n) < D) ++n;
    if ((1LL << n) != D) throw PreconditionError("clifford_test: dimension must be a power of 2");
    CVec choi = choi_state(U);
    ProtocolReport rep;
    rep.protocol = "clifford";
    rep.n = 2 * n;
    rep.d = 2;
    rep.p_accept = qubit_accept_probability(choi, 2 * n);
    if (2 * n <= 4) rep.p_accept_check = qubit_accept_probability_commutant(choi, 2 * n);
    bool is_clifford = conjugate_weyl_check(U, n, 2).ok;
    rep.input = is_clifford ? "clifford unitary" : "non-clifford unitary";
    rep.assertions.push_back({"accepts with certainty iff Clifford", (std::abs(rep.p_accept - 1.0) < 1e-10) == is_clifford});
    if (rep.p_accept_check >= 0)
        rep.assertions.push_back({"routes agree", std::abs(rep.p_accept - rep.p_accept_check) < 1e-10});
    try {
        check_stabilizer_envelope(2 * n, 2);
        rep.max_overlap = max_stabilizer_overlap(choi, 2 * n, 2).value;
        rep.bound = 1.0 - (1.0 - rep.max_overlap) / 4.0;
        rep.assertions.push_back({"p_accept <= 1 - eps^2/4", rep.p_accept <= rep.bound + 1e-12});
    } catch (const ResourceError&) {
        // Choi state outside the enumerable stabilizer envelope
    }
    return rep;
}

double technical_inequality_margin(int grid, int kmax) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        double p = 0.75 + 0.25 * i / grid;
        for (int k = 1; k <= kmax; ++k) m = std::min(m, std::pow(4 * p - 3, k) - (4 * std::pow(p, k) - 3));
    }
    return m;
}

}  // namespace swc
