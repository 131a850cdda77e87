#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swc/common.hpp"
#include "swc/gf_linalg.hpp"

namespace swc {

struct ProtocolReport {
    std::string protocol;
    std::string input;
    int n = 1;
    int d = 2;
    double p_accept = 0;
    double p_accept_check = -1;  // second route, -1 if not computed
    double bound = 1;            // soundness bound on p_accept
    double max_overlap = -1;     // -1 if the ensemble is not enumerable
    long long shots = 0;
    std::vector<std::pair<std::string, bool>> assertions;
    bool passed() const;
};

// ---- qubits -----------------------------------------------------------------

struct BellOutcomeDistribution {
    int n = 1;
    std::vector<double> prob;  // indexed as PhaseSpace points
    double route_gap = 0;      // max difference between the two computations
};
BellOutcomeDistribution bell_difference_distribution(const CVec& psi, int n);
// Single Bell measurement on psi (x) psi: |<W_x|psi psi>|^2.
std::vector<double> bell_sampling_distribution(const CVec& psi, int n);
// Pi_a on four copies, from the Bell basis and from the Weyl sum.
CMat bell_difference_projector(int n, const Vec& a);
CMat bell_difference_projector_weyl(int n, const Vec& a);

double qubit_accept_probability(const CVec& psi, int n);
// tr[psi^{(x)6} (I + R(anti-identity)) / 2]
double qubit_accept_probability_commutant(const CVec& psi, int n);
ProtocolReport simulate_qubit_test(const CVec& psi, int n, long long shots, unsigned long long seed);

// ---- qudits -----------------------------------------------------------------

// V_s = d^{-n} sum_x (W_x (x) W_x^dagger)^{(x) s}
CMat qudit_V(int n, int d, int s);
bool is_hermitian_unitary(const CMat& V, double tol = 1e-9);
double qudit_accept_probability(const CVec& psi, int n, int d, int s);
// 1/2 (1 + <psi^{(x)2s}| V_s |psi^{(x)2s}>) with V_s realized densely.
double qudit_accept_probability_dense(const CVec& psi, int n, int d, int s);
double qudit_constant(int d, int s);  // C_{d,s}

// V = d^{-n} sum_x A_x^{(x)3}
CMat three_copy_V(int n, int d);
double three_copy_accept_probability(const CVec& psi, int n, int d);
double three_copy_accept_probability_dense(const CVec& psi, int n, int d);

// ---- uncertainty relations --------------------------------------------------

struct UncertaintyCheck {
    bool premise = false;
    bool conclusion = true;  // commutation holds
    bool ok() const { return !premise || conclusion; }
    double value = 0;        // smallest premise quantity
    double threshold = 0;
};
UncertaintyCheck uncertainty_weyl(const CVec& psi, int n, int d, const Vec& x, const Vec& y);
UncertaintyCheck uncertainty_points(const CVec& psi, int n, int d, const Vec& x, const Vec& y, const Vec& z);

struct UncertaintySearch {
    long long states = 0;
    long long violations = 0;
    double best = 0;       // max over states and non-commuting pairs of the premise quantity
    double threshold = 0;  // the premise threshold
};
// Random pure states (plus, for d = 2, the real great circle) against all
// non-commuting Weyl pairs.
UncertaintySearch uncertainty_weyl_search(int n, int d, long long states, Rng& rng);
UncertaintySearch uncertainty_points_search(int n, int d, long long states, Rng& rng);
// max over the Bloch sphere of min(<X>^2, <Z>^2), sampled on a grid.
double qubit_xz_uncertainty_max(int grid);

// ---- Wigner negativity ------------------------------------------------------

double sum_negativity(const CVec& psi, int n, int d);
double sum_negativity_abs(const CVec& psi, int n, int d);  // 1/2 (||psi||_W - 1)
double mana(const CVec& psi, int n, int d);

struct HudsonReport {
    double deficit = 0;     // 1 - max stabilizer overlap
    double sn = 0;
    double rhs = 0;         // 9 d^2 sn
    double q_moment = 0;    // sum_x q(x)^2
    double holder = 0;      // 1 / (d^n ||psi||_W^2)
    bool robust_ok = false;
    bool holder_ok = false;
};
HudsonReport robust_hudson_check(const CVec& psi, int n, int d);

// ---- Clifford testing -------------------------------------------------------

CVec choi_state(const CMat& U);
ProtocolReport clifford_test(const CMat& U);

// (4p - 3)^k >= 4 p^k - 3 on an even grid of p in [3/4, 1]; returns the minimum margin.
double technical_inequality_margin(int grid, int kmax);

}  // namespace swc
