#include "swc/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "swc/phase_space.hpp"

namespace swc {

CMat StabilizerEnsemble::matrix() const {
    if (states.empty()) return CMat();
    CMat V(states.front().vector.size(), static_cast<Eigen::Index>(states.size()));
    for (size_t i = 0; i < states.size(); ++i) V.col(static_cast<Eigen::Index>(i)) = states[i].vector;
    return V;
}

BigInt stabilizer_count(int n, int d) {
    BigInt dd = d;
    BigInt r = boost::multiprecision::pow(dd, n);
    for (int i = 1; i <= n; ++i) r *= boost::multiprecision::pow(dd, i) + 1;
    return r;
}

void check_stabilizer_envelope(int n, int d) {
    if (!is_prime(d)) throw PreconditionError("stabilizer enumeration needs prime d, got " + std::to_string(d));
    bool ok = n >= 1 && ((d <= 3 && n <= 3) || (d == 5 && n <= 2) || (n == 1 && d <= 13));
    if (!ok)
        throw ResourceError("stabilizer enumeration (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")",
                            ipow(d, n), d <= 3 ? ipow(d, 3) : (d == 5 ? 25 : d));
}

std::vector<Subspace> enumerate_lagrangians(int n, int d) {
    check_stabilizer_envelope(n, d);
    auto pool = all_vectors(d, 2 * n);
    pool.erase(pool.begin());
    auto out = grow_subspaces(
        zero_subspace(d, 2 * n), pool,
        [d](const Vec& a, const Vec& b) { return bilinear(a, b, d, FormKind::symplectic) == 0; }, n);
    std::sort(out.begin(), out.end());
    return out;
}

CMat stabilizer_code_projector(const Subspace& S, int n) {
    const int d = S.d;
    if (S.ambient != 2 * n || !is_symplectic_isotropic(S))
        throw PreconditionError("stabilizer_code_projector: subspace is not isotropic in Z_d^{2n}");
    long long dim = ipow(d, n);
    std::vector<CMat> group{CMat::Identity(dim, dim)};
    for (const auto& g : S.basis) {
        CMat W = weyl(n, d, g);
        std::vector<CMat> next;
        next.reserve(group.size() * d);
        for (const auto& e : group) {
            CMat acc = e;
            for (int a = 0; a < d; ++a) {
                next.push_back(acc);
                acc = acc * W;
            }
        }
        group = std::move(next);
    }
    CMat P = CMat::Zero(dim, dim);
    for (const auto& e : group) P += e;
    return P / static_cast<double>(group.size());
}

static void fix_global_phase(CVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) > 1e-9) {
            v *= std::conj(v(i)) / std::abs(v(i));
            return;
        }
}

StabilizerState reference_state(const Subspace& M) {
    const int n = M.ambient / 2;
    if (M.dim() != n) throw PreconditionError("reference_state: subspace is not Lagrangian");
    CMat P = stabilizer_code_projector(M, n);
    Cx tr = P.trace();
    if (std::abs(tr - 1.0) > 1e-9 || (P * P - P).cwiseAbs().maxCoeff() > 1e-9)
        throw InvariantError("reference_state: inconsistent phase assignment (trace " + std::to_string(tr.real()) + ")");
    Eigen::Index best = 0;
    P.colwise().norm().maxCoeff(&best);
    CVec v = P.col(best);
    v /= v.norm();
    fix_global_phase(v);
    StabilizerState s{n, M.d, M, Vec(2 * n, 0), v};
    return s;
}

StabilizerState translate(const StabilizerState& ref, const Vec& z) {
    StabilizerState s = ref;
    s.z = ref.M.reduce(z);
    s.vector = apply_weyl(ref.n, ref.d, s.z, ref.vector);
    return s;
}

const StabilizerEnsemble& enumerate_stabilizer_states(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<StabilizerEnsemble>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto ens = std::make_unique<StabilizerEnsemble>();
    ens->n = n;
    ens->d = d;
    Subspace full = full_space(d, 2 * n);
    for (const auto& M : enumerate_lagrangians(n, d)) {
        StabilizerState ref = reference_state(M);
        for (const auto& z : coset_reps(full, M)) ens->states.push_back(translate(ref, z));
    }
    if (BigInt(ens->states.size()) != stabilizer_count(n, d))
        throw InvariantError("enumerate_stabilizer_states: wrong cardinality");
    auto& out = *ens;
    cache.emplace(key, std::move(ens));
    return out;
}

CMat measurement_channel(const Subspace& M, const CMat& rho) {
    const int n = M.ambient / 2;
    const int d = M.d;
    if (rho.rows() != ipow(d, n) || rho.cols() != rho.rows())
        throw PreconditionError("measurement_channel: dimension mismatch");
    if (M.dim() != n || !is_symplectic_isotropic(M))
        throw PreconditionError("measurement_channel: subspace is not Lagrangian");
    CMat out = CMat::Zero(rho.rows(), rho.cols());
    for (const auto& x : M.elements()) {
        CMat W = weyl(n, d, x);
        out += W * rho * W.adjoint();
    }
    return out / static_cast<double>(ipow(d, n));
}

OverlapResult max_stabilizer_overlap(const CVec& psi, int n, int d) {
    const auto& ens = enumerate_stabilizer_states(n, d);
    if (psi.size() != ipow(d, n)) throw PreconditionError("max_stabilizer_overlap: dimension mismatch");
    OverlapResult best;
    for (size_t i = 0; i < ens.states.size(); ++i) {
        double v = std::norm(ens.states[i].vector.dot(psi));
        if (v > best.value + 1e-13) {
            best.value = v;
            best.index = static_cast<long long>(i);
        }
    }
    return best;
}

long long sample_stabilizer_index(int n, int d, Rng& rng) {
    const auto& ens = enumerate_stabilizer_states(n, d);
    std::uniform_int_distribution<long long> u(0, static_cast<long long>(ens.states.size()) - 1);
    return u(rng);
}

StabilizerState sample_stabilizer(int n, int d, Rng& rng) {
    return enumerate_stabilizer_states(n, d).states[sample_stabilizer_index(n, d, rng)];
}

}  // namespace swc
