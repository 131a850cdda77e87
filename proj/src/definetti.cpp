#include "swc/definetti.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "swc/commutant.hpp"
#include "swc/moments.hpp"
#include "swc/phase_space.hpp"
#include "swc/stabilizer.hpp"

namespace swc {

namespace {

Cx cpow(Cx z, int k) {
    Cx r = 1.0;
    while (k > 0) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

RVec hermitian_eigenvalues(const CMat& A) {
    Eigen::SelfAdjointEigenSolver<CMat> es(A, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double trace_norm_hermitian(const CMat& A) {
    return hermitian_eigenvalues((A + A.adjoint()) / 2.0).cwiseAbs().sum();
}

CMat psd_sqrt(const CMat& A) {
    Eigen::SelfAdjointEigenSolver<CMat> es((A + A.adjoint()) / 2.0);
    RVec ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

CMat permute_operator(const CMat& rho, const std::vector<long long>& a) {
    CMat out(rho.rows(), rho.cols());
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
        for (Eigen::Index i = 0; i < rho.rows(); ++i) out(a[i], a[j]) = rho(i, j);
    return out;
}

CVec permute_vector(const CVec& v, const std::vector<long long>& a) {
    CVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(a[i]) = v(i);
    return out;
}

double commutator_norm(const SymmetricInput& in, const std::vector<long long>& a) {
    if (in.pure) {
        // ||[g, P]||_F = sqrt(2) ||g psi - <psi|g psi> psi|| for unitary g and unit psi.
        CVec u = in.psi / in.psi.norm();
        CVec g = permute_vector(u, a);
        return std::sqrt(2.0) * (g - u.dot(g) * u).norm();
    }
    return (permute_operator(in.state, a) - in.state).norm();
}

std::vector<IMat> symmetry_generators(Symmetry sym, int t, int d) {
    std::vector<IMat> gens;
    if (sym == Symmetry::full_O) return O_generators(t, d);
    for (int i = 0; i + 1 < t; ++i) {
        std::vector<int> perm(t);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[i + 1]);
        gens.push_back(permutation_matrix(perm));
    }
    if (sym == Symmetry::perm_anti) gens.push_back(anti_identity_block(t));
    return gens;
}

// Orthonormal basis of the vectors fixed by the symmetry (not for full_O).
CMat invariant_basis(Symmetry sym, int t, int n, int d) {
    const long long D = ipow(d, n);
    CMat B = symmetric_basis(D, t);
    if (sym == Symmetry::permutations) return B;
    auto a = copy_action(anti_identity_block(t), n, d);
    CMat K(B.rows(), B.cols());
    for (Eigen::Index c = 0; c < B.cols(); ++c) K.col(c) = permute_vector(B.col(c), a) - B.col(c);
    Eigen::SelfAdjointEigenSolver<CMat> es(K.adjoint() * K);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) < 1e-10) keep.push_back(i);
    CMat C(B.cols(), static_cast<Eigen::Index>(keep.size()));
    for (size_t k = 0; k < keep.size(); ++k) C.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
    return B * C;
}

CVec project_minimal(const CVec& psi, int t, int n, int d) {
    const auto& group = enumerate_O(t, d);
    CVec acc = CVec::Zero(psi.size());
    for (const auto& O : group) acc += permute_vector(psi, copy_action(O, n, d));
    return acc / static_cast<double>(group.size());
}

CMat random_psd(long long dim, int rank, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat A(dim, rank);
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) A(i, j) = Cx(g(rng), g(rng));
    return A * A.adjoint();
}

// Reduction of a 2n-qudit pure state to its first n qudits.
CMat reduce_first_half(const CVec& v, long long D) {
    Eigen::Map<const CMat> m(v.data(), D, D);  // m(anc, sys)
    return m.transpose() * m.conjugate();
}

}  // namespace

// ---- Gram matrix ------------------------------------------------------------

const CMat& stabilizer_overlaps(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, CMat> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CMat H = enumerate_stabilizer_states(n, d).matrix();
    return cache.emplace(key, H.adjoint() * H).first->second;
}

CMat gram_power(int n, int d, int t) {
    const CMat& M = stabilizer_overlaps(n, d);
    CMat G(M.rows(), M.cols());
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        for (Eigen::Index i = 0; i < M.rows(); ++i) G(i, j) = i == j ? Cx(1.0) : cpow(M(i, j), t);
    return G;
}

double gram_eps(int n, int d, int t) {
    return std::pow(static_cast<double>(d), 0.5 * ((n + 2) * (n + 2) - t));
}

bool GramData::claims_hold(double tol) const {
    if (rank != size()) return false;
    double lo = 1 - 2 * eps - tol, hi = 1 + 2 * eps + tol;
    bool ok = opnorm_dev <= eps + tol && eig_min >= lo && eig_max <= hi && 1 / eig_max >= lo && 1 / eig_min <= hi;
    if (q_eig_min >= 0) ok = ok && q_eig_min >= lo && q_eig_max <= hi && orthonormality_dev <= 1e-8;
    return ok;
}

GramData gram(int n, int d, int t, bool dense) {
    if (t < 1) throw PreconditionError("gram: t must be positive");
    GramData g;
    g.n = n;
    g.d = d;
    g.t = t;
    g.G = gram_power(n, d, t);
    g.eps = gram_eps(n, d, t);
    const Eigen::Index N = g.G.rows();
    for (Eigen::Index j = 0; j < N; ++j)
        for (Eigen::Index i = 0; i < N; ++i)
            if (i != j) g.max_offdiag = std::max(g.max_offdiag, std::abs(g.G(i, j)));
    RVec ev = hermitian_eigenvalues(g.G);
    g.eig_min = ev.minCoeff();
    g.eig_max = ev.maxCoeff();
    g.opnorm_dev = (ev.array() - 1.0).abs().maxCoeff();
    g.rank = (ev.array() > 1e-10 * std::max(1.0, g.eig_max)).count();
    if (dense) {
        const long long dim = ipow(ipow(d, n), t);
        check_cap(dim, "gram: dense tensor powers");
        const auto& ens = enumerate_stabilizer_states(n, d);
        CMat H(dim, N);
        for (Eigen::Index k = 0; k < N; ++k) H.col(k) = kron_vec_power(ens.states[k].vector, t);
        Eigen::JacobiSVD<CMat> svd(H, Eigen::ComputeThinU);
        RVec sv = svd.singularValues();
        Eigen::Index r = (sv.array() > 1e-10 * std::max(1.0, sv(0))).count();
        RVec q = sv.head(r).cwiseAbs2();
        g.q_eig_min = q.minCoeff();
        g.q_eig_max = q.maxCoeff();
        CMat U = svd.matrixU().leftCols(r);
        RVec inv = sv.head(r).cwiseInverse();
        CMat W = U * inv.asDiagonal() * (U.adjoint() * H);  // (Q^+)^{1/2} H
        g.orthonormality_dev = (W.adjoint() * W - CMat::Identity(N, N)).cwiseAbs().maxCoeff();
    }
    return g;
}

// ---- symmetric inputs -------------------------------------------------------

CMat symmetric_basis(long long D, int t) {
    const long long dim = ipow(D, t);
    check_cap(dim, "symmetric_basis");
    std::unordered_map<long long, Eigen::Index> column;
    std::vector<std::vector<long long>> groups;
    for (long long idx = 0; idx < dim; ++idx) {
        auto dg = digits(idx, static_cast<int>(D), t);
        std::sort(dg.begin(), dg.end());
        long long key = from_digits(dg, static_cast<int>(D));
        auto [it, fresh] = column.emplace(key, static_cast<Eigen::Index>(groups.size()));
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(idx);
    }
    CMat B = CMat::Zero(dim, static_cast<Eigen::Index>(groups.size()));
    for (size_t c = 0; c < groups.size(); ++c) {
        double a = 1.0 / std::sqrt(static_cast<double>(groups[c].size()));
        for (long long idx : groups[c]) B(idx, static_cast<Eigen::Index>(c)) = a;
    }
    return B;
}

std::vector<long long> copy_action(const IMat& O, int n, int d) {
    const int t = static_cast<int>(O.size());
    std::vector<long long> a(ipow(d, t * n), -1);
    for (const auto& [r, c] : R_support(T_of_O(O, d), n)) a[c] = r;
    return a;
}

IMat anti_identity_block(int t) {
    if (t < 6) throw PreconditionError("anti_identity_block: need at least six copies");
    IMat O = identity_matrix(t);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) O[i][j] = i == j ? 0 : 1;
    return O;
}

SymmetricInput make_invariant_state(int t, int n, int d, Symmetry symmetry, unsigned long long seed, bool pure,
                                    int rank) {
    if (t < 1 || n < 1) throw PreconditionError("make_invariant_state: need t, n >= 1");
    if (symmetry == Symmetry::perm_anti && (d != 2 || t < 6))
        throw PreconditionError("make_invariant_state: anti-identity symmetry needs d = 2 and t >= 6");
    const long long dim = ipow(ipow(d, n), t);
    check_cap(dim, "make_invariant_state");
    if (!pure) check_cap(dim * dim / 64, "make_invariant_state: dense mixed state");
    if (symmetry == Symmetry::full_O) check_sigma_envelope(t, d);
    Rng rng(seed);
    SymmetricInput in;
    in.t = t;
    in.n = n;
    in.d = d;
    in.symmetry = symmetry;
    in.pure = pure;
    if (symmetry == Symmetry::full_O) {
        if (pure) {
            CVec v = project_minimal(haar_state(dim, rng), t, n, d);
            in.psi = v / v.norm();
        } else {
            CMat r0 = random_psd(dim, rank, rng);
            const auto& group = enumerate_O(t, d);
            CMat acc = CMat::Zero(dim, dim);
            for (const auto& O : group) acc += permute_operator(r0, copy_action(O, n, d));
            in.state = acc / acc.trace().real();
        }
        return in;
    }
    CMat V = invariant_basis(symmetry, t, n, d);
    if (V.cols() == 0) throw InvariantError("make_invariant_state: invariant subspace is trivial");
    if (pure) {
        CVec v = V * (V.adjoint() * haar_state(dim, rng));
        in.psi = v / v.norm();
    } else {
        CMat c = random_psd(V.cols(), std::min<Eigen::Index>(rank, V.cols()), rng);
        in.state = V * c * V.adjoint();
        in.state /= in.state.trace().real();
    }
    return in;
}

SymmetricInput stabilizer_power_input(int t, int n, int d, long long index, Symmetry symmetry) {
    const auto& ens = enumerate_stabilizer_states(n, d);
    if (index < 0 || index >= static_cast<long long>(ens.states.size()))
        throw PreconditionError("stabilizer_power_input: index out of range");
    check_cap(ipow(ipow(d, n), t), "stabilizer_power_input");
    SymmetricInput in;
    in.t = t;
    in.n = n;
    in.d = d;
    in.symmetry = symmetry;
    in.pure = true;
    in.psi = kron_vec_power(ens.states[index].vector, t);
    return in;
}

double symmetry_defect(const SymmetricInput& in) {
    double worst = 0;
    for (const auto& g : symmetry_generators(in.symmetry, in.t, in.d))
        worst = std::max(worst, commutator_norm(in, copy_action(g, in.n, in.d)));
    return worst;
}

double minimal_span_residual(const SymmetricInput& in) {
    if (!in.pure) throw PreconditionError("minimal_span_residual: pure input expected");
    check_sigma_envelope(in.t, in.d);
    return (in.psi - project_minimal(in.psi, in.t, in.n, in.d)).norm();
}

// ---- decomposition ----------------------------------------------------------

CVec power_overlaps(const CVec& psi, int n, int d, int t) {
    const auto& ens = enumerate_stabilizer_states(n, d);
    const long long D = ipow(d, n);
    if (psi.size() != ipow(D, t)) throw PreconditionError("power_overlaps: dimension mismatch");
    CVec out(static_cast<Eigen::Index>(ens.states.size()));
    for (size_t k = 0; k < ens.states.size(); ++k) {
        CVec sc = ens.states[k].vector.conjugate();
        CVec v = psi;
        for (int c = 0; c < t; ++c) {
            const long long rest = v.size() / D;
            Eigen::Map<const CMat> m(v.data(), rest, D);
            CVec w = m * sc;
            v = std::move(w);
        }
        out(static_cast<Eigen::Index>(k)) = v(0);
    }
    return out;
}

CVec stab_power_reconstruct(const CVec& alpha, int n, int d, int t) {
    const auto& ens = enumerate_stabilizer_states(n, d);
    const long long dim = ipow(ipow(d, n), t);
    check_cap(dim, "stab_power_reconstruct");
    CVec out = CVec::Zero(dim);
    for (size_t k = 0; k < ens.states.size(); ++k)
        if (alpha(static_cast<Eigen::Index>(k)) != Cx(0.0))
            out += alpha(static_cast<Eigen::Index>(k)) * kron_vec_power(ens.states[k].vector, t);
    return out;
}

StabPowerDecomposition stab_power_decompose(const CVec& psi, int n, int d, int t) {
    StabPowerDecomposition r;
    r.n = n;
    r.d = d;
    r.t = t;
    r.eps = gram_eps(n, d, t);
    CMat G = gram_power(n, d, t);
    CVec b = power_overlaps(psi, n, d, t);
    r.alpha = G.completeOrthogonalDecomposition().solve(b);
    r.alpha_norm2 = r.alpha.squaredNorm();
    r.residual = (psi - stab_power_reconstruct(r.alpha, n, d, t)).norm();
    return r;
}

CVec random_invariant_coefficients(int n, int d, int t, Rng& rng) {
    const Eigen::Index N = static_cast<Eigen::Index>(enumerate_stabilizer_states(n, d).states.size());
    std::normal_distribution<double> g(0.0, 1.0);
    CVec a(N);
    for (Eigen::Index i = 0; i < N; ++i) a(i) = Cx(g(rng), g(rng));
    double norm2 = a.dot(gram_power(n, d, t) * a).real();
    return a / std::sqrt(norm2);
}

// ---- de Finetti ---------------------------------------------------------------

double exp_definetti_bound(int n, int d, int t, int s, bool pure) {
    int m = pure ? n + 2 : 2 * n + 2;
    return 2 * std::pow(static_cast<double>(d), 0.5 * m * m - 0.5 * (t - s));
}

double anti_definetti_bound(int n, int t, int s, bool pure) {
    double ratio = std::sqrt(static_cast<double>(s) / t);
    return pure ? 6 * std::sqrt(std::pow(2.0, n + 1)) * ratio : 6 * std::sqrt(2.0) * std::pow(2.0, n) * ratio;
}

DeFinettiReport exp_definetti_coefficients(const CVec& alpha_in, int n, int d, int t, int s) {
    if (s < 1 || s > t) throw PreconditionError("exp_definetti: need 1 <= s <= t");
    DeFinettiReport rep;
    rep.variant = "exp";
    rep.n = n;
    rep.d = d;
    rep.t = t;
    rep.s = s;
    rep.pure = true;
    rep.eps = gram_eps(n, d, t);
    rep.bound = exp_definetti_bound(n, d, t, s, true);
    double norm2 = alpha_in.dot(gram_power(n, d, t) * alpha_in).real();
    if (norm2 <= 0) throw PreconditionError("exp_definetti: zero state");
    CVec alpha = alpha_in / std::sqrt(norm2);
    const Eigen::Index N = alpha.size();
    rep.weight_sum = alpha.squaredNorm();
    CMat Gs = gram_power(n, d, s);
    CMat Gr = gram_power(n, d, t - s);
    CMat C(N, N);
    for (Eigen::Index j = 0; j < N; ++j)
        for (Eigen::Index i = 0; i < N; ++i) C(i, j) = alpha(i) * std::conj(alpha(j)) * Gr(j, i);
    CMat X = C;
    X.diagonal().setZero();
    CMat Delta = X;
    rep.p.resize(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        rep.p[i] = std::norm(alpha(i)) / rep.weight_sum;
        Delta(i, i) = C(i, i) - rep.p[i];
    }
    // ||H Y H^dagger||_1 = ||Gs^{1/2} Y Gs^{1/2}||_1 with H^dagger H = Gs.
    CMat R = psd_sqrt(Gs);
    rep.distance = 0.5 * trace_norm_hermitian(R * Delta * R);
    rep.cross_term = trace_norm_hermitian(R * X * R);
    return rep;
}

CMat partial_trace_copies(const CMat& rho, long long local, int t, int s) {
    const long long A = ipow(local, s), B = ipow(local, t - s);
    if (rho.rows() != A * B) throw PreconditionError("partial_trace_copies: dimension mismatch");
    CMat out = CMat::Zero(A, A);
    for (long long a = 0; a < A; ++a)
        for (long long a2 = 0; a2 < A; ++a2) {
            Cx acc = 0;
            for (long long b = 0; b < B; ++b) acc += rho(a * B + b, a2 * B + b);
            out(a, a2) = acc;
        }
    return out;
}

CMat partial_trace_copies(const CVec& psi, long long local, int t, int s) {
    const long long A = ipow(local, s), B = ipow(local, t - s);
    if (psi.size() != A * B) throw PreconditionError("partial_trace_copies: dimension mismatch");
    Eigen::Map<const CMat> m(psi.data(), B, A);  // m(b, a) = psi(a B + b)
    return m.transpose() * m.conjugate();
}

double trace_distance(const CMat& a, const CMat& b) { return 0.5 * trace_norm_hermitian(a - b); }

std::vector<CMat> mixed_stabilizer_states(int n, int d) {
    check_stabilizer_envelope(n, d);
    std::vector<CMat> out;
    const Subspace whole = full_space(d, 2 * n);
    for (const auto& S : all_subspaces(d, 2 * n)) {
        if (!is_symplectic_isotropic(S)) continue;
        CMat P = stabilizer_code_projector(S, n);
        P /= P.trace().real();
        for (const auto& z : coset_reps(whole, complement(S, FormKind::symplectic))) {
            CMat W = weyl(n, d, z);
            out.push_back(W * P * W.adjoint());
        }
    }
    return out;
}

DeFinettiReport exp_definetti_check(const SymmetricInput& in, int s) {
    if (in.symmetry != Symmetry::full_O) throw PreconditionError("exp_definetti_check: input must be O_t-invariant");
    if (s < 1 || s > in.t) throw PreconditionError("exp_definetti_check: need 1 <= s <= t");
    double defect = symmetry_defect(in);
    if (defect > 1e-9)
        throw PreconditionError("exp_definetti_check: input does not commute with O_t (defect " +
                                std::to_string(defect) + ")");
    const long long D = ipow(in.d, in.n);
    if (in.pure) {
        auto dec = stab_power_decompose(in.psi, in.n, in.d, in.t);
        if (dec.residual > 1e-8)
            throw PreconditionError("exp_definetti_check: state outside the span of stabilizer powers (residual " +
                                    std::to_string(dec.residual) + ")");
        DeFinettiReport rep = exp_definetti_coefficients(dec.alpha, in.n, in.d, in.t, s);
        if (ipow(D, s) <= 1024) {
            CMat rs = partial_trace_copies(in.psi, D, in.t, s);
            const auto& ens = enumerate_stabilizer_states(in.n, in.d);
            CMat mix = CMat::Zero(rs.rows(), rs.cols());
            for (size_t k = 0; k < ens.states.size(); ++k) {
                if (rep.p[k] == 0) continue;
                CVec v = kron_vec_power(ens.states[k].vector, s);
                mix += rep.p[k] * v * v.adjoint();
            }
            rep.distance_dense = trace_distance(rs, mix);
        }
        return rep;
    }
    // Mixed input: decompose the standard purification on 2n qudits per copy.
    CVec vec = purify(in.state);
    std::vector<int> ordering(2 * in.t);
    for (int c = 0; c < in.t; ++c) {
        ordering[2 * c] = c;
        ordering[2 * c + 1] = in.t + c;
    }
    CVec Psi = tensor_permute(vec, D, ordering);
    auto dec = stab_power_decompose(Psi, 2 * in.n, in.d, in.t);
    if (dec.residual > 1e-8)
        throw PreconditionError("exp_definetti_check: purification outside the span of stabilizer powers (residual " +
                                std::to_string(dec.residual) + ")");
    DeFinettiReport pur = exp_definetti_coefficients(dec.alpha, 2 * in.n, in.d, in.t, s);
    DeFinettiReport rep;
    rep.variant = "exp";
    rep.n = in.n;
    rep.d = in.d;
    rep.t = in.t;
    rep.s = s;
    rep.pure = false;
    rep.eps = pur.eps;
    rep.weight_sum = pur.weight_sum;
    rep.cross_term = pur.cross_term;
    rep.p = pur.p;
    rep.bound = exp_definetti_bound(in.n, in.d, in.t, s, false);
    check_cap(ipow(D, s), "exp_definetti_check: reduced state");
    const auto& ens = enumerate_stabilizer_states(2 * in.n, in.d);
    CMat mix = CMat::Zero(ipow(D, s), ipow(D, s));
    for (size_t k = 0; k < ens.states.size(); ++k) {
        if (pur.p[k] == 0) continue;
        mix += pur.p[k] * kron_power(reduce_first_half(ens.states[k].vector, D), s);
    }
    rep.distance = trace_distance(partial_trace_copies(in.state, D, in.t, s), mix);
    rep.distance_dense = pur.distance;  // distance for the purification, an upper bound
    return rep;
}

DeFinettiReport anti_definetti_check(const SymmetricInput& in, int s) {
    if (in.d != 2) throw PreconditionError("anti_definetti_check: qubits only");
    if (s < 6 || s % 6 != 0 || s >= in.t) throw PreconditionError("anti_definetti_check: s must be a multiple of six below t");
    if (in.symmetry == Symmetry::permutations)
        throw PreconditionError("anti_definetti_check: input must also commute with the anti-identity");
    const long long D = ipow(2, in.n);
    const long long ds = ipow(D, s);
    if (ds > 1024) throw ResourceError("anti_definetti_check: reduced dimension", ds, 1024);
    // O_t contains the permutations and the anti-identity, so those generators suffice.
    SymmetricInput probe = in;
    probe.symmetry = Symmetry::perm_anti;
    double defect = symmetry_defect(probe);
    if (defect > 1e-9)
        throw PreconditionError("anti_definetti_check: symmetry precondition unmet (defect " + std::to_string(defect) + ")");
    CMat rs = in.pure ? partial_trace_copies(in.psi, D, in.t, s) : partial_trace_copies(in.state, D, in.t, s);

    // Candidate single-copy states: pure stabilizer states for pure input,
    // all mixed stabilizer states otherwise.
    std::vector<CMat> cand;
    if (in.pure) {
        for (const auto& st : enumerate_stabilizer_states(in.n, 2).states) cand.push_back(st.vector * st.vector.adjoint());
    } else {
        cand = mixed_stabilizer_states(in.n, 2);
    }
    const Eigen::Index K = static_cast<Eigen::Index>(cand.size());
    std::vector<CMat> powers(cand.size());
    for (size_t k = 0; k < cand.size(); ++k) powers[k] = kron_power(cand[k], s);
    // Frobenius fit through the Gram form: min p^T A p - 2 b^T p over p >= 0.
    RMat A(K, K);
    RVec b(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        b(k) = (powers[k] * rs).trace().real();
        for (Eigen::Index l = 0; l <= k; ++l)
            A(k, l) = A(l, k) = std::pow((cand[k] * cand[l]).trace().real(), s);
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(A);
    RVec ev = es.eigenvalues().cwiseMax(0.0);
    RVec sq = ev.cwiseSqrt(), isq(K);
    for (Eigen::Index i = 0; i < K; ++i) isq(i) = sq(i) > 1e-12 ? 1.0 / sq(i) : 0.0;
    RMat R = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().transpose();
    RMat Rp = es.eigenvectors() * isq.asDiagonal() * es.eigenvectors().transpose();
    const double w = 100.0;
    RMat E(K + 1, K);
    E.topRows(K) = R;
    E.row(K).setConstant(w);
    RVec rhs(K + 1);
    rhs.head(K) = Rp * b;
    rhs(K) = w;
    RVec p = nnls(E, rhs);
    DeFinettiReport rep;
    rep.variant = "anti";
    rep.n = in.n;
    rep.d = 2;
    rep.t = in.t;
    rep.s = s;
    rep.pure = in.pure;
    rep.weight_sum = p.sum();
    if (rep.weight_sum <= 0) throw InvariantError("anti_definetti_check: empty fit");
    p /= rep.weight_sum;
    CMat mix = CMat::Zero(ds, ds);
    rep.p.resize(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        rep.p[k] = p(k);
        if (p(k) > 0) mix += p(k) * powers[k];
    }
    rep.distance = trace_distance(rs, mix);
    rep.bound = anti_definetti_bound(in.n, in.t, s, false);
    if (in.pure) rep.bound_pure = anti_definetti_bound(in.n, in.t, s, true);
    return rep;
}

// ---- purification -------------------------------------------------------------

CVec vectorize(const CMat& B) {
    CVec v(B.size());
    for (Eigen::Index x = 0; x < B.rows(); ++x)
        for (Eigen::Index y = 0; y < B.cols(); ++y) v(x * B.cols() + y) = B(x, y);
    return v;
}

CMat unvectorize(const CVec& v, long long rows, long long cols) {
    if (v.size() != rows * cols) throw PreconditionError("unvectorize: dimension mismatch");
    CMat B(rows, cols);
    for (long long x = 0; x < rows; ++x)
        for (long long y = 0; y < cols; ++y) B(x, y) = v(x * cols + y);
    return B;
}

CVec purify(const CMat& rho) {
    if (rho.rows() != rho.cols() || (rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw PreconditionError("purify: operator is not Hermitian");
    if (hermitian_eigenvalues(rho).minCoeff() < -1e-9) throw PreconditionError("purify: operator is not PSD");
    return vectorize(psd_sqrt(rho));
}

PurificationTrials purification_symmetry_trials(long long dim, int trials, Rng& rng) {
    if (dim < 2) throw PreconditionError("purification_symmetry_trials: need dim >= 2");
    PurificationTrials out;
    std::vector<long long> perm(dim);
    for (int k = 0; k < trials; ++k) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::shuffle(perm.begin(), perm.end(), rng);
        } while (std::is_sorted(perm.begin(), perm.end()));
        CMat rho = random_psd(dim, 2, rng);
        if (k % 2 == 0) {
            // Average over the cyclic group generated by the permutation.
            CMat acc = rho, cur = rho;
            for (int step = 1;; ++step) {
                cur = permute_operator(cur, perm);
                if ((cur - rho).norm() < 1e-12 * rho.norm()) break;
                acc += cur;
                if (step > 10000) throw InvariantError("purification_symmetry_trials: permutation order too large");
            }
            rho = acc;
        }
        rho /= rho.trace().real();
        bool commutes = (permute_operator(rho, perm) - rho).norm() < 1e-9;
        std::vector<long long> pair_perm(dim * dim);
        for (long long x = 0; x < dim; ++x)
            for (long long y = 0; y < dim; ++y) pair_perm[x * dim + y] = perm[x] * dim + perm[y];
        CVec psi = purify(rho);
        bool invariant = (permute_vector(psi, pair_perm) - psi).norm() < 1e-9;
        ++out.trials;
        if (commutes) ++out.commuting;
        if (commutes == invariant) ++out.agreements;
    }
    return out;
}

std::string symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::full_O: return "full_O";
        case Symmetry::perm_anti: return "perm_anti";
        case Symmetry::permutations: return "permutations";
    }
    return "?";
}

Symmetry symmetry_from_name(const std::string& s) {
    if (s == "full_O") return Symmetry::full_O;
    if (s == "perm_anti") return Symmetry::perm_anti;
    if (s == "permutations") return Symmetry::permutations;
    throw PreconditionError("unknown symmetry: " + s);
}

}  // namespace swc
