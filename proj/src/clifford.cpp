#include "swc/clifford.hpp"

#include <numeric>

#include "swc/phase_space.hpp"

namespace swc {

std::string gate_name(GateKind k) {
    switch (k) {
        case GateKind::F: return "F";
        case GateKind::P: return "P";
        case GateKind::CADD: return "CADD";
        case GateKind::W: return "W";
    }
    return "?";
}

GateKind gate_from_name(const std::string& s) {
    if (s == "F") return GateKind::F;
    if (s == "P") return GateKind::P;
    if (s == "CADD") return GateKind::CADD;
    if (s == "W") return GateKind::W;
    throw PreconditionError("unknown gate '" + s + "'");
}

CMat fourier_gate(int d) {
    CMat H(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) H(a, b) = omega_pow(d, static_cast<long long>(a) * b);
    return H / std::sqrt(static_cast<double>(d));
}

CMat phase_gate(int d) {
    CMat P = CMat::Zero(d, d);
    if (d == 2) {
        P(0, 0) = 1.0;
        P(1, 1) = Cx(0.0, 1.0);
        return P;
    }
    int half = inv_mod(2, d);
    for (int a = 0; a < d; ++a) P(a, a) = omega_pow(d, static_cast<long long>(half) * a * (a - 1));
    return P;
}

CMat cadd_gate(int d) {
    CliffordWord w{2, d, {Gate{GateKind::CADD, {0, 1}}}};
    return word_matrix(w);
}

static CMat embed_single(const CMat& U, int site, int n, int d) {
    CMat left = CMat::Identity(ipow(d, site), ipow(d, site));
    CMat right = CMat::Identity(ipow(d, n - 1 - site), ipow(d, n - 1 - site));
    return kron(kron(left, U), right);
}

CMat gate_matrix(const Gate& g, int n, int d) {
    long long dim = ipow(d, n);
    check_cap(dim, "gate_matrix");
    auto need = [&](size_t k) {
        if (g.args.size() != k) throw PreconditionError("gate " + gate_name(g.kind) + ": wrong number of arguments");
    };
    switch (g.kind) {
        case GateKind::F:
            need(1);
            if (g.args[0] < 0 || g.args[0] >= n) throw PreconditionError("gate F: qudit out of range");
            return embed_single(fourier_gate(d), g.args[0], n, d);
        case GateKind::P:
            need(1);
            if (g.args[0] < 0 || g.args[0] >= n) throw PreconditionError("gate P: qudit out of range");
            return embed_single(phase_gate(d), g.args[0], n, d);
        case GateKind::CADD: {
            need(2);
            int c = g.args[0], t = g.args[1];
            if (c < 0 || t < 0 || c >= n || t >= n || c == t) throw PreconditionError("gate CADD: bad qudits");
            CMat U = CMat::Zero(dim, dim);
            for (long long k = 0; k < dim; ++k) {
                auto v = digits(k, d, n);
                v[t] = (v[t] + v[c]) % d;
                U(from_digits(v, d), k) = 1.0;
            }
            return U;
        }
        case GateKind::W:
            need(static_cast<size_t>(2 * n));
            return weyl(n, d, g.args);
    }
    throw PreconditionError("gate_matrix: unknown gate");
}

CMat word_matrix(const CliffordWord& w) {
    long long dim = ipow(w.d, w.n);
    check_cap(dim, "word_matrix");
    CMat U = CMat::Identity(dim, dim);
    for (const auto& g : w.letters) U = gate_matrix(g, w.n, w.d) * U;
    return U;
}

bool is_symplectic(const IMat& G, int d) {
    const int m = static_cast<int>(G.size());
    // columns of G
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vec ci(m), cj(m);
            for (int r = 0; r < m; ++r) {
                ci[r] = G[r][i];
                cj[r] = G[r][j];
            }
            Vec ei(m, 0), ej(m, 0);
            ei[i] = 1;
            ej[j] = 1;
            if (bilinear(ci, cj, d, FormKind::symplectic) != bilinear(ei, ej, d, FormKind::symplectic)) return false;
        }
    return true;
}

ConjugationResult conjugate_weyl_check(const CMat& U, int n, int d) {
    PhaseSpace ps{n, d};
    ConjugationResult res;
    const long long N = ps.size();
    const double dim = static_cast<double>(ps.hilbert_dim());
    if (U.rows() != ps.hilbert_dim()) {
        res.diagnostic = "dimension mismatch";
        return res;
    }
    res.image.resize(N);
    res.phase.resize(N);
    for (long long i = 0; i < N; ++i) {
        Vec x = ps.point(i);
        CMat V = U * weyl(n, d, x) * U.adjoint();
        long long best = -1;
        double bestv = -1, second = 0;
        Cx bestc;
        for (long long j = 0; j < N; ++j) {
            Cx c = weyl_trace(n, d, ps.point(j), V) / dim;
            double a = std::abs(c);
            if (a > bestv) {
                second = std::max(second, bestv);
                bestv = a;
                best = j;
                bestc = c;
            } else {
                second = std::max(second, a);
            }
        }
        if (std::abs(bestv - 1.0) > 1e-8 || second > 1e-8) {
            res.diagnostic = "no unique Weyl match for x=" + to_string(x);
            return res;
        }
        res.image[i] = ps.point(best);
        res.phase[i] = bestc;
    }
    const int m = 2 * n;
    res.gamma.assign(m, Vec(m, 0));
    for (int j = 0; j < m; ++j) {
        Vec e(m, 0);
        e[j] = 1;
        const Vec& img = res.image[ps.index(e)];
        for (int r = 0; r < m; ++r) res.gamma[r][j] = img[r];
    }
    res.linear = true;
    for (long long i = 0; i < N && res.linear; ++i) {
        Vec x = ps.point(i);
        Vec gx(m, 0);
        for (int r = 0; r < m; ++r) {
            long long s = 0;
            for (int c = 0; c < m; ++c) s += static_cast<long long>(res.gamma[r][c]) * x[c];
            gx[r] = mod(s, d);
        }
        if (gx != res.image[i]) {
            res.linear = false;
            res.diagnostic = "conjugation action is not linear at x=" + to_string(x);
        }
    }
    res.symplectic = is_symplectic(res.gamma, d);
    if (res.linear && !res.symplectic) res.diagnostic = "Gamma is not symplectic";
    res.ok = res.linear && res.symplectic;
    return res;
}

bool phase_is_character(const ConjugationResult& r, int n, int d, Vec* z) {
    if (!r.ok) return false;
    PhaseSpace ps{n, d};
    for (long long zi = 0; zi < ps.size(); ++zi) {
        Vec cand = ps.point(zi);
        bool good = true;
        for (long long i = 0; i < ps.size() && good; ++i)
            good = std::abs(r.phase[i] - omega_pow(d, symplectic_int(cand, ps.point(i)))) < 1e-8;
        if (good) {
            if (z) *z = cand;
            return true;
        }
    }
    return false;
}

RandomClifford random_clifford(int n, int d, int length, Rng& rng) {
    check_cap(ipow(d, n), "random_clifford");
    RandomClifford out;
    out.word.n = n;
    out.word.d = d;
    std::vector<GateKind> kinds{GateKind::F, GateKind::P, GateKind::W};
    if (n >= 2) kinds.push_back(GateKind::CADD);
    std::uniform_int_distribution<int> pick_kind(0, static_cast<int>(kinds.size()) - 1);
    std::uniform_int_distribution<int> pick_site(0, n - 1);
    std::uniform_int_distribution<int> pick_res(0, d - 1);
    for (int i = 0; i < length; ++i) {
        Gate g;
        g.kind = kinds[pick_kind(rng)];
        switch (g.kind) {
            case GateKind::F:
            case GateKind::P:
                g.args = {pick_site(rng)};
                break;
            case GateKind::CADD: {
                int c = pick_site(rng);
                std::uniform_int_distribution<int> other(0, n - 2);
                int t = other(rng);
                if (t >= c) ++t;
                g.args = {c, t};
                break;
            }
            case GateKind::W:
                g.args.resize(2 * n);
                for (auto& a : g.args) a = pick_res(rng);
                break;
        }
        out.word.letters.push_back(g);
    }
    out.unitary = word_matrix(out.word);
    return out;
}

std::vector<IMat> enumerate_sp(int n, int d) {
    if (n != 1) throw PreconditionError("enumerate_sp: only n = 1 is supported");
    if (!is_prime(d)) throw PreconditionError("enumerate_sp: d must be prime");
    std::vector<IMat> out;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e)
                    if (mod(a * e - b * c, d) == 1) out.push_back({{a, b}, {c, e}});
    return out;
}

long long sp_orbit_count(int n, int d, int t) {
    if (n != 1) throw PreconditionError("sp_orbit_count: only n = 1 is supported");
    if (t < 1) throw PreconditionError("sp_orbit_count: t must be positive");
    const int k = t - 1;
    const long long N = ipow(d, 2 * k);
    if (N > 10000000) throw ResourceError("sp_orbit_count", N, 10000000);
    std::vector<long long> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](long long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const IMat gens[2] = {{{1, 1}, {0, 1}}, {{0, d - 1}, {1, 0}}};
    for (long long idx = 0; idx < N; ++idx) {
        auto v = digits(idx, d, 2 * k);
        for (const auto& g : gens) {
            Vec w(2 * k);
            for (int j = 0; j < k; ++j) {
                w[2 * j] = mod(g[0][0] * v[2 * j] + g[0][1] * v[2 * j + 1], d);
                w[2 * j + 1] = mod(g[1][0] * v[2 * j] + g[1][1] * v[2 * j + 1], d);
            }
            long long a = find(idx), b = find(from_digits(w, d));
            if (a != b) parent[a] = b;
        }
    }
    long long count = 0;
    for (long long i = 0; i < N; ++i)
        if (find(i) == i) ++count;
    return count;
}

}  // namespace swc
