#pragma once

#include <string>
#include <vector>

#include "swc/common.hpp"
#include "swc/gf_linalg.hpp"

namespace swc {

// ---- Gram matrix of stabilizer tensor powers -------------------------------

struct GramData {
    int n = 1;
    int d = 2;
    int t = 1;
    CMat G;                     // G_{SS'} = <S|S'>^t over enumerate_stabilizer_states
    double eps = 0;             // d^{((n+2)^2 - t)/2}
    double max_offdiag = 0;
    double opnorm_dev = 0;      // ||G - I|| in operator norm
    double eig_min = 0;
    double eig_max = 0;
    long long rank = 0;
    // Dense route over the vectors |S>^{(x)t}; -1 when not computed.
    double q_eig_min = -1;
    double q_eig_max = -1;
    double orthonormality_dev = -1;  // max |<S|^t Q^+ |S'>^t - delta_{SS'}|

    long long size() const { return G.rows(); }
    bool lemma_applies() const { return eps < 0.5; }
    // rank, norm and eigenvalue claims; meaningful only when lemma_applies().
    bool claims_hold(double tol = 1e-9) const;
};

// Overlaps <S|S'> for the enumerated ensemble of n qudits.
const CMat& stabilizer_overlaps(int n, int d);
CMat gram_power(int n, int d, int t);
double gram_eps(int n, int d, int t);
// `dense` enables the Q route (needs d^{tn} within the cap).
GramData gram(int n, int d, int t, bool dense = false);

// ---- symmetric inputs -------------------------------------------------------

enum class Symmetry { full_O, perm_anti, permutations };

struct SymmetricInput {
    int t = 1;
    int n = 1;
    int d = 2;
    Symmetry symmetry = Symmetry::full_O;
    bool pure = true;
    CVec psi;    // set when pure
    CMat state;  // density operator on (d^n)^{(x)t}
};

// Pure input: the random vector projected onto the invariant subspace.
// Mixed input: a random rank-`rank` PSD operator twirled over the group
// (full_O) or supported on the invariant subspace (perm_anti, permutations).
SymmetricInput make_invariant_state(int t, int n, int d, Symmetry symmetry, unsigned long long seed,
                                    bool pure = true, int rank = 3);
SymmetricInput stabilizer_power_input(int t, int n, int d, long long index, Symmetry symmetry = Symmetry::full_O);
// Largest ||[g, rho]|| over the generators of the declared symmetry.
double symmetry_defect(const SymmetricInput& in);
// ||(1 - Pi_min) psi|| for a pure input.
double minimal_span_residual(const SymmetricInput& in);

// Orthonormal basis of Sym^t(C^D), one column per multiset of digits.
CMat symmetric_basis(long long D, int t);
// Computational-basis permutation realizing R(O) on t copies of n qudits:
// result[col] = row.
std::vector<long long> copy_action(const IMat& O, int n, int d);
// Anti-identity on the first six copies, identity on the rest (d = 2).
IMat anti_identity_block(int t);

// ---- decomposition into stabilizer powers ----------------------------------

struct StabPowerDecomposition {
    int n = 1;
    int d = 2;
    int t = 1;
    CVec alpha;
    double residual = 0;  // ||Psi - sum_S alpha_S |S>^t||
    double alpha_norm2 = 0;
    double eps = 0;
    bool in_interval() const { return alpha_norm2 >= 1 - 2 * eps - 1e-12 && alpha_norm2 <= 1 + 2 * eps + 1e-12; }
};

// <S|^{(x)t} Psi for every enumerated S.
CVec power_overlaps(const CVec& psi, int n, int d, int t);
StabPowerDecomposition stab_power_decompose(const CVec& psi, int n, int d, int t);
CVec stab_power_reconstruct(const CVec& alpha, int n, int d, int t);
// Random coefficients normalized so that sum_S alpha_S |S>^t has unit norm.
CVec random_invariant_coefficients(int n, int d, int t, Rng& rng);

// ---- de Finetti checks ------------------------------------------------------

struct DeFinettiReport {
    std::string variant;
    int n = 1;
    int d = 2;
    int t = 1;
    int s = 1;
    bool pure = true;
    double distance = 0;     // trace distance to the mixture of stabilizer powers
    double cross_term = -1;  // trace norm of the off-diagonal part (exp, pure route)
    double distance_dense = -1;  // dense cross-check of `distance`, -1 if not computed
    double bound = 0;
    double bound_pure = -1;  // anti: the sharper pure-state bound, asserted too
    double eps = 0;
    double weight_sum = 0;   // sum |alpha_S|^2 before normalization, or NNLS weight sum
    std::vector<double> p;
    bool vacuous() const { return bound >= 1; }
    bool within_bound(double tol = 1e-12) const {
        return distance <= bound + tol && (cross_term < 0 || cross_term <= bound + tol) &&
               (bound_pure < 0 || distance <= bound_pure + tol);
    }
};

double exp_definetti_bound(int n, int d, int t, int s, bool pure);
double anti_definetti_bound(int n, int t, int s, bool pure);

// Pure route on coefficients: reduced state from the Gram expansion.
DeFinettiReport exp_definetti_coefficients(const CVec& alpha, int n, int d, int t, int s);
DeFinettiReport exp_definetti_check(const SymmetricInput& in, int s);
DeFinettiReport anti_definetti_check(const SymmetricInput& in, int s);

// Dense reduced state on the first s copies.
CMat partial_trace_copies(const CMat& rho, long long local, int t, int s);
CMat partial_trace_copies(const CVec& psi, long long local, int t, int s);
double trace_distance(const CMat& a, const CMat& b);
// Maximally mixed states on all stabilizer codes of n qudits.
std::vector<CMat> mixed_stabilizer_states(int n, int d);

// ---- purification -----------------------------------------------------------

CVec vectorize(const CMat& B);
CMat unvectorize(const CVec& v, long long rows, long long cols);
CVec purify(const CMat& rho);

struct PurificationTrials {
    long long trials = 0;
    long long commuting = 0;
    long long agreements = 0;  // [rho, O] = 0 iff (O (x) O) purify(rho) = purify(rho)
};
// Random (rho, permutation) pairs on C^dim; half are made to commute.
PurificationTrials purification_symmetry_trials(long long dim, int trials, Rng& rng);

std::string symmetry_name(Symmetry s);
Symmetry symmetry_from_name(const std::string& s);

}  // namespace swc
