#include "swc/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "swc/commutant.hpp"
#include "swc/definetti.hpp"
#include "swc/moments.hpp"
#include "swc/phase_space.hpp"
#include "swc/protocols.hpp"
#include "swc/stabilizer.hpp"

namespace swc {

namespace {

using Checks = std::vector<CheckRecord>;

std::string tag(int n, int d, int t) {
    return "n" + std::to_string(n) + "_d" + std::to_string(d) + "_t" + std::to_string(t);
}

void guarded(Checks& out, const std::string& name, const std::string& anchor, const std::function<void(Checks&)>& fn) {
    try {
        fn(out);
    } catch (const ResourceError& e) {
        out.push_back(skipped(name, anchor, e.what()));
    } catch (const PreconditionError& e) {
        out.push_back(skipped(name, anchor, e.what()));
    } catch (const std::exception& e) {
        CheckRecord r = check_true(name, anchor, false, e.what());
        out.push_back(r);
    }
}

Rng criterion_rng(unsigned long long seed, int id) {
    std::seed_seq sq{static_cast<unsigned>(seed), static_cast<unsigned>(seed >> 32), static_cast<unsigned>(id)};
    return Rng(sq);
}

std::string prefix(int id, const std::string& key) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "c%02d.", id);
    return buf + key + ".";
}

// ---- 1 ----------------------------------------------------------------------

Checks c_cardinality(Profile p) {
    Checks out;
    const std::string anchor = "|Sigma_{t,t}(d)| = prod_{k=0}^{t-2} (d^k + 1)";
    std::vector<std::pair<int, int>> grid;  // (d, t)
    if (p == Profile::quick)
        grid = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {5, 3}};
    else
        grid = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {5, 4}};
    for (auto [d, t] : grid) {
        std::string name = prefix(1, "cardinality") + "d" + std::to_string(d) + "_t" + std::to_string(t);
        guarded(out, name, anchor, [&](Checks& o) {
            double expected = static_cast<double>(sigma_count(t, d));
            double got = static_cast<double>(enumerate_sigma(t, d).size());
            o.push_back(check_near(name, anchor, got, expected, 0));
        });
    }
    return out;
}

// ---- 2 ----------------------------------------------------------------------

Checks c_commutant(Profile p, Rng& rng) {
    Checks out;
    const std::string anchor = "R(T) commutes with the Clifford group";
    std::vector<std::pair<int, int>> exhaustive = p == Profile::quick
                                                      ? std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}
                                                      : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
    for (auto [d, t] : exhaustive) {
        std::string name = prefix(2, "commutator") + "d" + std::to_string(d) + "_t" + std::to_string(t);
        guarded(out, name, anchor, [&](Checks& o) {
            double worst = 0;
            for (const auto& T : enumerate_sigma(t, d)) worst = std::max(worst, commutes_with_clifford(T).max());
            auto r = check_le(name, anchor, worst, 1e-9);
            r.detail = "exhaustive over " + std::to_string(enumerate_sigma(t, d).size());
            o.push_back(r);
        });
    }
    if (p == Profile::full) {
        for (int t : {5, 6}) {
            std::string name = prefix(2, "commutator") + "d2_t" + std::to_string(t) + "_sampled";
            guarded(out, name, anchor, [&](Checks& o) {
                const auto& sig = enumerate_sigma(t, 2);
                std::vector<size_t> idx(sig.size());
                std::iota(idx.begin(), idx.end(), 0);
                std::shuffle(idx.begin(), idx.end(), rng);
                size_t m = std::min<size_t>(200, idx.size());
                double worst = 0;
                for (size_t i = 0; i < m; ++i) worst = std::max(worst, commutes_with_clifford(sig[idx[i]]).max());
                auto r = check_le(name, anchor, worst, 1e-9);
                r.detail = std::to_string(m) + " sampled of " + std::to_string(sig.size());
                o.push_back(r);
            });
        }
    }
    const std::string anchor_li = "R(T) linearly independent for n >= t - 1";
    std::vector<std::array<int, 3>> li = p == Profile::quick ? std::vector<std::array<int, 3>>{{3, 3, 2}}
                                                             : std::vector<std::array<int, 3>>{{4, 2, 3}, {3, 3, 2}, {4, 3, 3}};
    for (auto [t, d, n] : li) {
        std::string name = prefix(2, "rank") + "t" + std::to_string(t) + "_d" + std::to_string(d) + "_n" + std::to_string(n);
        guarded(out, name, anchor_li, [&](Checks& o) {
            double rank = static_cast<double>(linear_independence_check(t, d, n));
            o.push_back(check_near(name, anchor_li, rank, static_cast<double>(enumerate_sigma(t, d).size()), 0));
        });
    }
    return out;
}

// ---- 3, 4 -------------------------------------------------------------------

Checks c_moments(Profile p) {
    Checks out;
    const std::string anchor = "stabilizer t-th moment = Z^{-1} sum_T R(T)";
    std::vector<std::array<int, 3>> grid = p == Profile::quick
                                               ? std::vector<std::array<int, 3>>{{1, 2, 4}, {1, 3, 3}}
                                               : std::vector<std::array<int, 3>>{{1, 2, 4}, {2, 2, 4}, {1, 2, 6}, {1, 3, 3}, {2, 3, 3}, {1, 3, 4}};
    for (auto [n, d, t] : grid) {
        std::string name = prefix(3, "moment") + "n" + std::to_string(n) + "_d" + std::to_string(d) + "_t" + std::to_string(t);
        guarded(out, name, anchor, [&](Checks& o) {
            double gap = (moment_bruteforce(n, d, t).op - moment_formula(n, d, t).op).norm();
            o.push_back(check_le(name, anchor, gap, 1e-10));
        });
    }
    return out;
}

Checks c_designs(Profile) {
    Checks out;
    const std::string anchor = "multi-qubit stabilizer states form 3-designs; qutrit ones form 2-designs";
    for (auto [n, d, t] : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}}) {
        std::string name = prefix(4, "design_gap_zero") + tag(n, d, t);
        guarded(out, name, anchor, [&](Checks& o) { o.push_back(check_le(name, anchor, design_gap(n, d, t), 1e-10)); });
    }
    for (auto [n, d, t] : std::vector<std::array<int, 3>>{{2, 2, 4}, {2, 3, 3}}) {
        std::string name = prefix(4, "design_gap_positive") + tag(n, d, t);
        guarded(out, name, anchor, [&](Checks& o) {
            double g = design_gap(n, d, t);
            CheckRecord r = check_true(name, anchor, g > 1e-6);
            r.measured = g;
            r.bound = 1e-6;
            r.detail = "gap must exceed the bound";
            o.push_back(r);
        });
    }
    return out;
}

// ---- 5, 6 -------------------------------------------------------------------

struct Setting {
    std::string key;
    int n, d;
    std::function<double(const CVec&)> accept;
    std::function<double(double)> ceiling;  // soundness bound as a function of eps^2
};

std::vector<Setting> protocol_settings(Profile p) {
    std::vector<Setting> s;
    std::vector<int> ns = p == Profile::quick ? std::vector<int>{1} : std::vector<int>{1, 2};
    for (int n : ns)
        s.push_back({"qubit6_n" + std::to_string(n), n, 2, [n](const CVec& v) { return qubit_accept_probability(v, n); },
                     [](double e2) { return 1 - e2 / 4; }});
    for (int n : ns)
        s.push_back({"qudit_d3_s2_n" + std::to_string(n), n, 3,
                     [n](const CVec& v) { return qudit_accept_probability(v, n, 3, 2); },
                     [](double e2) { return 1 - qudit_constant(3, 2) * e2; }});
    std::vector<int> ds = p == Profile::quick ? std::vector<int>{5} : std::vector<int>{5, 7};
    for (int d : ds)
        s.push_back({"threecopy_d" + std::to_string(d) + "_n1", 1, d,
                     [d](const CVec& v) { return three_copy_accept_probability(v, 1, d); },
                     [d](double e2) { return 1 - e2 / (16.0 * d * d); }});
    return s;
}

Checks c_completeness(Profile p) {
    Checks out;
    const std::string anchor = "stabilizer states are accepted with certainty";
    for (const auto& st : protocol_settings(p)) {
        std::string name = prefix(5, "completeness") + st.key;
        guarded(out, name, anchor, [&](Checks& o) {
            double worst = 0;
            const auto& ens = enumerate_stabilizer_states(st.n, st.d);
            for (const auto& s : ens.states) worst = std::max(worst, std::abs(st.accept(s.vector) - 1));
            auto r = check_le(name, anchor, worst, 1e-12);
            r.detail = std::to_string(ens.states.size()) + " states";
            o.push_back(r);
        });
    }
    return out;
}

Checks c_soundness(Profile p, Rng& rng) {
    Checks out;
    const std::string anchor = "acceptance probability bounded away from 1 for non-stabilizer states";
    for (const auto& st : protocol_settings(p)) {
        std::string name = prefix(6, "soundness") + st.key;
        guarded(out, name, anchor, [&](Checks& o) {
            const int samples = 1000;
            long long violations = 0;
            double worst = -1;  // max of p_accept - ceiling
            for (int k = 0; k < samples; ++k) {
                CVec v = haar_state(ipow(st.d, st.n), rng);
                double e2 = 1 - max_stabilizer_overlap(v, st.n, st.d).value;
                double excess = st.accept(v) - st.ceiling(e2);
                if (excess > 1e-12) ++violations;
                worst = std::max(worst, excess);
            }
            auto r = check_le(name, anchor, worst, 0, 1e-12);
            r.detail = std::to_string(samples) + " Haar states, " + std::to_string(violations) + " violations";
            o.push_back(r);
        });
    }
    return out;
}

// ---- 7 ----------------------------------------------------------------------

Checks c_bell(Profile, Rng& rng, unsigned long long seed) {
    Checks out;
    const std::string anchor = "Bell difference sampling samples the convolution of the characteristic distribution";
    for (int n : {1, 2}) {
        std::string name = prefix(7, "routes") + "n" + std::to_string(n);
        guarded(out, name, anchor, [&](Checks& o) {
            double worst = 0;
            for (int k = 0; k < 100; ++k)
                worst = std::max(worst, bell_difference_distribution(haar_state(ipow(2, n), rng), n).route_gap);
            o.push_back(check_le(name, anchor, worst, 1e-10));
        });
    }
    const std::string anchor_mc = "simulated six-copy test matches the analytic acceptance";
    CVec T(2);
    T << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), kPi / 4);
    std::string name = prefix(7, "tstate_analytic");
    guarded(out, name, anchor_mc, [&](Checks& o) {
        o.push_back(check_near(name, anchor_mc, qubit_accept_probability(T, 1), 13.0 / 16.0, 1e-12));
    });
    name = prefix(7, "tstate_montecarlo");
    guarded(out, name, anchor_mc, [&](Checks& o) {
        const long long shots = 100000;
        ProtocolReport rep = simulate_qubit_test(T, 1, shots, seed ^ 0x5eedULL);
        double sigma = std::sqrt(rep.p_accept_check * (1 - rep.p_accept_check) / static_cast<double>(shots));
        auto r = check_le(name, anchor_mc, std::abs(rep.p_accept - 13.0 / 16.0), 4 * sigma);
        r.detail = "empirical " + std::to_string(rep.p_accept) + " at 1e5 shots, 4 sigma gate";
        o.push_back(r);
    });
    return out;
}

// ---- 8, 9 -------------------------------------------------------------------

Checks c_minimal(Profile) {
    Checks out;
    const std::string anchor = "Pi_min projects onto the span of stabilizer tensor powers";
    for (auto [t, n, d] : std::vector<std::array<int, 3>>{{4, 1, 2}, {6, 1, 2}, {3, 1, 3}}) {
        std::string base = prefix(8, "minimal") + tag(n, d, t);
        guarded(out, base + ".rank", anchor, [&](Checks& o) {
            CMat P = minimal_projector(t, n, d);
            double idem = (P * P - P).cwiseAbs().maxCoeff();
            o.push_back(check_le(base + ".idempotent", anchor, idem, 1e-10));
            double rank = std::round(P.trace().real());
            auto r = check_near(base + ".rank", anchor, rank, static_cast<double>(gram(n, d, t, true).rank), 0);
            o.push_back(r);
            double worst = 0;
            for (const auto& s : enumerate_stabilizer_states(n, d).states) {
                CVec v = kron_vec_power(s.vector, t);
                worst = std::max(worst, (P * v - v).norm());
            }
            o.push_back(check_le(base + ".fixes_powers", anchor, worst, 1e-10));
        });
    }
    return out;
}

Checks c_semigroup(Profile) {
    Checks out;
    const std::string anchor = "r(T1) r(T2) = d^k r(T1 o T2)";
    for (auto [t, d] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}}) {
        std::string name = prefix(9, "compose") + "t" + std::to_string(t) + "_d" + std::to_string(d);
        guarded(out, name, anchor, [&](Checks& o) {
            const auto& sig = enumerate_sigma(t, d);
            long long bad = 0, pairs = 0;
            for (const auto& a : sig)
                for (const auto& b : sig) {
                    auto x = compose(a, b);
                    auto y = compose_relational(a, b);
                    ++pairs;
                    if (x.T != y.T || x.k != y.k) ++bad;
                }
            auto r = check_le(name, anchor, static_cast<double>(bad), 0);
            r.detail = std::to_string(pairs) + " pairs, integer product against relational composition";
            o.push_back(r);
        });
    }
    std::string name = prefix(9, "associativity") + "t3_d3";
    guarded(out, name, anchor, [&](Checks& o) {
        const auto& sig = enumerate_sigma(3, 3);
        std::map<std::pair<long long, long long>, ComposeResult> memo;
        auto comp = [&](const Subspace& a, const Subspace& b) {
            auto key = std::make_pair(sigma_index(a), sigma_index(b));
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            return memo.emplace(key, compose(a, b)).first->second;
        };
        long long bad = 0;
        for (const auto& a : sig)
            for (const auto& b : sig)
                for (const auto& c : sig) {
                    auto ab = comp(a, b);
                    auto left = comp(ab.T, c);
                    auto bc = comp(b, c);
                    auto right = comp(a, bc.T);
                    if (left.T != right.T || ab.k + left.k != bc.k + right.k) ++bad;
                }
        o.push_back(check_le(name, anchor, static_cast<double>(bad), 0));
    });
    return out;
}

// ---- 10 ---------------------------------------------------------------------

Checks c_hudson(Profile, Rng& rng) {
    Checks out;
    const std::string anchor = "1 - max stabilizer overlap <= 9 d^2 sn(psi)";
    for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        std::string name = prefix(10, "robust") + "d" + std::to_string(d) + "_n" + std::to_string(n);
        guarded(out, name, anchor, [&](Checks& o) {
            double worst = -1;
            long long bad = 0;
            for (int k = 0; k < 1000; ++k) {
                auto r = robust_hudson_check(haar_state(ipow(d, n), rng), n, d);
                worst = std::max(worst, r.deficit - r.rhs);
                if (!r.robust_ok) ++bad;
            }
            auto r = check_le(name, anchor, worst, 0, 1e-12);
            r.detail = "1000 Haar states, " + std::to_string(bad) + " violations";
            o.push_back(r);
        });
        std::string ename = prefix(10, "exact") + "d" + std::to_string(d) + "_n" + std::to_string(n);
        guarded(out, ename, "stabilizer states have non-negative Wigner functions", [&](Checks& o) {
            double worst_sn = 0, worst_ov = 0;
            for (const auto& s : enumerate_stabilizer_states(n, d).states) {
                worst_sn = std::max(worst_sn, sum_negativity(s.vector, n, d));
                worst_ov = std::max(worst_ov, std::abs(1 - max_stabilizer_overlap(s.vector, n, d).value));
            }
            o.push_back(check_le(ename + ".sn", "stabilizer states have non-negative Wigner functions", worst_sn, 1e-12));
            o.push_back(check_le(ename + ".overlap", "stabilizer states have non-negative Wigner functions", worst_ov, 1e-12));
        });
    }
    return out;
}

// ---- 11 ---------------------------------------------------------------------

Checks c_definetti(Profile, Rng& rng) {
    Checks out;
    const std::string anchor_g = "Gram matrix of stabilizer tensor powers is eps-close to the identity";
    for (int t : {20, 24, 30}) {
        std::string name = prefix(11, "gram") + "n1_d2_t" + std::to_string(t);
        guarded(out, name, anchor_g, [&](Checks& o) {
            GramData g = gram(1, 2, t);
            o.push_back(check_le(name + ".opnorm", anchor_g, g.opnorm_dev, g.eps));
            o.push_back(check_true(name + ".claims", anchor_g, g.lemma_applies() && g.claims_hold(),
                                   "rank, eigenvalue interval, orthonormal frame"));
        });
    }
    const std::string anchor_e = "exponential stabilizer de Finetti bound 2 d^{(n+2)^2/2} d^{-(t-s)/2}";
    CVec alpha = random_invariant_coefficients(1, 2, 20, rng);
    for (int t : {20, 24})
        for (int s : {1, 2}) {
            std::string name = prefix(11, "exp") + "t" + std::to_string(t) + "_s" + std::to_string(s);
            guarded(out, name, anchor_e, [&](Checks& o) {
                auto rep = exp_definetti_coefficients(alpha, 1, 2, t, s);
                auto r = check_le(name + ".distance", anchor_e, rep.distance, rep.bound);
                o.push_back(r);
                o.push_back(check_le(name + ".cross_term", anchor_e, rep.cross_term, rep.bound));
            });
        }
    std::string name = prefix(11, "exp_decay") + "s2";
    guarded(out, name, anchor_e, [&](Checks& o) {
        std::vector<double> xs, ys;
        bool monotone = true;
        double prev = 1e300;
        for (int t = 8; t <= 60; t += 4) {
            double dist = exp_definetti_coefficients(alpha, 1, 2, t, 2).distance;
            monotone = monotone && dist <= prev + 1e-15;
            prev = dist;
            xs.push_back(t);
            ys.push_back(std::log(dist));
        }
        double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
        double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
        double sxy = 0, sxx = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        auto r = check_le(name + ".slope", anchor_e, sxy / sxx, -0.34, 0.05);
        r.detail = "log-linear fit of distance over t = 8..60";
        o.push_back(r);
        o.push_back(check_true(name + ".monotone", anchor_e, monotone));
    });
    return out;
}

// ---- 12 ---------------------------------------------------------------------

Checks c_orbit_designs(Profile, Rng& rng) {
    Checks out;
    const std::string anchor = "weighted Clifford orbits form exact designs";
    for (auto [d, t, n, maxfid] : std::vector<std::array<int, 4>>{{3, 3, 2, 2}, {2, 4, 3, 3}}) {
        std::string name = prefix(12, "orbit_design") + "d" + std::to_string(d) + "_t" + std::to_string(t) + "_n" +
                           std::to_string(n);
        guarded(out, name, anchor, [&](Checks& o) {
            auto seedset = design_seed_ensemble(n, d, 64, rng);
            OrbitDesign des = find_design_weights(seedset, n, d, t);
            o.push_back(check_le(name + ".gap", anchor, des.frobenius_gap, 1e-8));
            o.push_back(check_le(name + ".fiducials", anchor, static_cast<double>(des.fiducials.size()), maxfid));
        });
    }
    std::string name = prefix(12, "qutrit_fiducial") + "n2";
    guarded(out, name, anchor, [&](Checks& o) {
        QutritFiducial f = qutrit_fiducial_search(2);
        auto r = check_le(name, anchor, f.orbit_gap, 1e-8);
        r.detail = "theta " + std::to_string(f.theta);
        o.push_back(r);
    });
    return out;
}

// ---- 13 ---------------------------------------------------------------------

Checks c_structure(Profile) {
    Checks out;
    const std::string anchor_o = "icosahedron adjacency is a stochastic isometry";
    std::string name = prefix(13, "icosahedron");
    guarded(out, name, anchor_o, [&](Checks& o) {
        IMat A = icosahedron_adjacency();
        IMat C(12, Vec(12, 0));
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j) C[i][j] = i == j ? 0 : 1 - A[i][j];
        o.push_back(check_true(name + ".member", anchor_o, is_member_O(A, 12, 2)));
        o.push_back(check_true(name + ".complement_not_member", anchor_o, !is_member_O(C, 12, 2),
                               "adjacency of the complement graph"));
    });
    const std::string anchor_a = "R(anti-identity) = 2^{-n} (I^6 + X^6 + Y^6 + Z^6)^{(x)n}";
    for (int n : {1, 2}) {
        std::string an = prefix(13, "anti_identity") + "n" + std::to_string(n);
        guarded(out, an, anchor_a, [&](Checks& o) { o.push_back(check_le(an, anchor_a, anti_identity_weyl_gap(n), 1e-10)); });
    }
    const std::string anchor_q = "qutrit third-moment block dimensions (3^n +- 1)/2";
    std::string qn = prefix(13, "qutrit_dims") + "n2";
    guarded(out, qn, anchor_q, [&](Checks& o) {
        auto [plus, minus] = qutrit_third_moment_dims(2);
        o.push_back(check_near(qn + ".plus", anchor_q, plus, 5, 1e-9));
        o.push_back(check_near(qn + ".minus", anchor_q, minus, 4, 1e-9));
    });
    return out;
}

}  // namespace

double anti_identity_weyl_gap(int n) {
    const int t = 6;
    const long long D = ipow(2, n);
    PhaseSpace ps{n, 2};
    // Monomial action of each W_x on basis vectors.
    std::vector<std::vector<std::pair<long long, Cx>>> act(ps.size(), std::vector<std::pair<long long, Cx>>(D));
    for (long long xi = 0; xi < ps.size(); ++xi) {
        CMat W = weyl(n, 2, ps.point(xi));
        for (long long j = 0; j < D; ++j) {
            Eigen::Index r = 0;
            W.col(j).cwiseAbs().maxCoeff(&r);
            act[xi][j] = {r, W(r, j)};
        }
    }
    IMat O = anti_permutation({0, 1, 2, 3, 4, 5}, t, 2, AntiKind::complement);
    auto a = copy_action(O, n, 2);
    const long long dim = ipow(D, t);
    double worst = 0;
    std::map<long long, Cx> col;
    for (long long c = 0; c < dim; ++c) {
        col.clear();
        auto dg = digits(c, static_cast<int>(D), t);
        for (long long xi = 0; xi < ps.size(); ++xi) {
            long long row = 0;
            Cx ph = 1.0;
            for (int k = 0; k < t; ++k) {
                row = row * D + act[xi][dg[k]].first;
                ph *= act[xi][dg[k]].second;
            }
            col[row] += ph / static_cast<double>(D);
        }
        col[a[c]] -= 1.0;
        for (const auto& [r, v] : col) worst = std::max(worst, std::abs(v));
    }
    return worst;
}

Profile profile_from_name(const std::string& s) {
    if (s == "quick") return Profile::quick;
    if (s == "full") return Profile::full;
    throw PreconditionError("unknown profile: " + s);
}

std::string profile_name(Profile p) { return p == Profile::quick ? "quick" : "full"; }

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> list{
        {1, "cardinality", "enumerated Sigma_{t,t}(d) matches the product formula"},
        {2, "commutant", "R(T) commute with Cliffords and are linearly independent"},
        {3, "moments", "moment formula equals brute force"},
        {4, "designs", "design gaps vanish exactly where expected"},
        {5, "completeness", "stabilizer tests accept stabilizer states"},
        {6, "soundness", "stabilizer tests reject far-from-stabilizer states"},
        {7, "bell_sampling", "Bell difference sampling routes and Monte Carlo agree"},
        {8, "minimal_projector", "Pi_min is the projector onto stabilizer powers"},
        {9, "semigroup", "r(T) compose as a semigroup"},
        {10, "hudson", "robust Hudson bound"},
        {11, "definetti", "Gram lemma and exponential de Finetti bound"},
        {12, "orbit_designs", "weighted orbit designs and the qutrit fiducial"},
        {13, "structure", "icosahedron, anti-identity identity and qutrit dimensions"},
    };
    return list;
}

std::vector<int> profile_criteria(Profile p) {
    if (p == Profile::quick) return {1, 2, 3, 4, 5};
    std::vector<int> all(13);
    std::iota(all.begin(), all.end(), 1);
    return all;
}

std::vector<CheckRecord> run_criterion(int id, Profile p, unsigned long long seed) {
    Rng rng = criterion_rng(seed, id);
    switch (id) {
        case 1: return c_cardinality(p);
        case 2: return c_commutant(p, rng);
        case 3: return c_moments(p);
        case 4: return c_designs(p);
        case 5: return c_completeness(p);
        case 6: return c_soundness(p, rng);
        case 7: return c_bell(p, rng, seed);
        case 8: return c_minimal(p);
        case 9: return c_semigroup(p);
        case 10: return c_hudson(p, rng);
        case 11: return c_definetti(p, rng);
        case 12: return c_orbit_designs(p, rng);
        case 13: return c_structure(p);
    }
    throw PreconditionError("unknown criterion " + std::to_string(id));
}

ReportBundle verify_all(Profile p, unsigned long long seed, const std::vector<int>& only) {
    ReportBundle b;
    b.version = library_version();
    b.config = json{{"command", "verify-all"}, {"profile", profile_name(p)}, {"seed", seed}};
    for (int id : profile_criteria(p)) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        b.add(run_criterion(id, p, seed));
    }
    b.normalize();
    return b;
}

}  // namespace swc
