#pragma once

#include <string>
#include <vector>

#include "swc/commutant.hpp"
#include "swc/common.hpp"

namespace swc {

enum class MomentSource { bruteforce, formula, haar, orbit };

struct MomentOperator {
    int t = 1;
    int n = 1;
    int d = 2;
    CMat op;
    MomentSource source = MomentSource::formula;
};

// Z = d^n prod_{k=0}^{t-2} (d^k + d^n)
BigInt moment_normalization(int n, int d, int t);
// prod_{k=0}^{t-1} (k + D)
BigInt haar_normalization(long long D, int t);

MomentOperator moment_bruteforce(int n, int d, int t);
MomentOperator moment_formula(int n, int d, int t);
MomentOperator haar_moment(long long D, int t);

// Permutation operator on (C^D)^{(x) t}: |y_1..y_t> -> |y_{perm^{-1}(1)} ...>.
CMat permutation_operator(long long D, const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int t);

// Gram matrix d^{n dim(T cap T')} over enumerate_sigma(t, d).
RMat sigma_gram(int t, int d, int n);
// Frobenius norm of sum_T beta_T R(T) computed from the Gram matrix.
double coefficient_norm(int t, int d, int n, const CVec& beta);
// Coefficients of the Haar moment in the basis R(T), T in Sigma.
RVec haar_coefficients(int t, int d, int n);
std::vector<bool> permutation_mask(int t, int d);

// Frobenius distance between stabilizer and Haar moments. Uses dense
// operators when d^{tn} <= dense_limit, the Gram route otherwise.
double design_gap(int n, int d, int t, long long dense_limit = 1024);

struct OrbitMoment {
    int t = 1;
    int n = 1;
    int d = 2;
    CVec alpha;  // coefficients over enumerate_sigma(t, d)
};
// Clifford-orbit average of Psi^{(x) t} via G alpha = m.
OrbitMoment orbit_moment(const CVec& psi, int n, int d, int t);
MomentOperator orbit_moment_operator(const OrbitMoment& om);
// Sampling oracle: average of (U psi)^{(x) t} over random Clifford words.
CMat monte_carlo_orbit_moment(const CVec& psi, int n, int d, int t, int samples, int word_length, Rng& rng);

// Classes of Sigma under T -> pi T pi' and transposition. Permutation class first;
// the rest ordered by smallest member index.
std::vector<std::vector<long long>> equivalence_classes(int t, int d);
Subspace transpose_subspace(const Subspace& T);

struct OrbitDesign {
    int t = 1;
    int n = 1;
    int d = 2;
    std::vector<CVec> fiducials;
    std::vector<double> weights;
    std::vector<long long> seed_indices;  // positions in the input seed list
    double residual = 0;                  // max |sum_j p_j alpha_i^(j)|, i >= 2
    double frobenius_gap = 0;             // distance of the mixture to the Haar moment
};
OrbitDesign find_design_weights(const std::vector<CVec>& fiducials, int n, int d, int t);
// Seed: |0...0> followed by `random_states` Haar-random states.
std::vector<CVec> design_seed_ensemble(int n, int d, int random_states, Rng& rng);

struct QutritFiducial {
    int n = 2;
    double theta = 0;
    double target = 0;
    double value = 0;
    double orbit_gap = -1;  // design gap of the orbit of psi(theta)^{(x) n}
};
// <psi^{(x)3}| r(T) |psi^{(x)3}> for the CSS representative of Sigma_{3,3}(3).
double qutrit_overlap(double theta);
QutritFiducial qutrit_fiducial_search(int n);

// tr[Pi_sym P Pi_sym], tr[Pi_alt P Pi_alt] with P = 3^{-n} R(T_css), t = 3, d = 3.
std::pair<double, double> qutrit_third_moment_dims(int n);

// Lawson-Hanson non-negative least squares: argmin ||A x - b|| over x >= 0.
RVec nnls(const RMat& A, const RVec& b, int max_iter = 0);

std::string source_name(MomentSource s);

}  // namespace swc
