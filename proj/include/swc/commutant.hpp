#pragma once

#include <map>
#include <vector>

#include "swc/common.hpp"
#include "swc/gf_linalg.hpp"

namespace swc {

using IntMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// |Sigma_{t,t}(d)| = prod_{k=0}^{t-2} (d^k + 1)
BigInt sigma_count(int t, int d);
void check_sigma_envelope(int t, int d);

bool is_stochastic_lagrangian(const Subspace& T);
Subspace diagonal_subspace(int t, int d);
int diag_dim(const Subspace& T);  // dim(T cap Delta)

// Defect subspaces of Z_d^t: totally q-isotropic and orthogonal to 1_t.
std::vector<Subspace> defect_subspaces(int t, int d);

struct DefectData {
    Subspace left;             // T_LD
    Subspace right;            // T_RD
    std::vector<Vec> y_basis;  // basis of T_RD^perp modulo T_RD (1_t first when 1_t not in T_RD)
    std::vector<Vec> x_image;  // canonical representatives of T_J[y]
};
DefectData defect_decompose(const Subspace& T);
Subspace reconstruct(const DefectData& data);
// Coset basis of M^perp / M as used by defect_decompose.
std::vector<Vec> quotient_basis(const Subspace& M);

// Cached, sorted by canonical basis.
const std::vector<Subspace>& enumerate_sigma(int t, int d);
// Independent search over isotropic generator sets (small parameters only).
std::vector<Subspace> enumerate_sigma_dfs(int t, int d);
long long sigma_index(const Subspace& T);

// O[r][c]; cached, sorted.
const std::vector<IMat>& enumerate_O(int t, int d);
bool is_member_O(const IMat& O, int t, int d);
Subspace T_of_O(const IMat& O, int d);
IMat identity_matrix(int t);
IMat permutation_matrix(const std::vector<int>& perm);  // pi e_i = e_{perm[i]}
IMat mat_mul(const IMat& a, const IMat& b, int d);
IMat transpose(const IMat& a);

// 0/1 integer matrix of dimension d^t.
IntMat r_of_T(const Subspace& T);
// Nonzero (row, col) positions of R(T) = r(T)^{(x) n} in the copy-major
// ordering (t copies, each of n qudits, first copy most significant).
std::vector<std::pair<long long, long long>> R_support(const Subspace& T, int n);
CMat R_of_T(const Subspace& T, int n);
// <Psi^{(x)t}| R(T) |Psi^{(x)t}> without building R(T).
Cx R_expectation(const Subspace& T, int n, const CVec& psi);

struct CommutatorReport {
    double fourier = 0;  // n = 1
    double phase = 0;    // n = 1
    double cadd = 0;     // n = 2
    double max() const { return std::max({fourier, phase, cadd}); }
};
CommutatorReport commutes_with_clifford(const Subspace& T);

// Rank of the Gram matrix [d^{n dim(T cap T')}] over Sigma_{t,t}(d), exact.
long long linear_independence_check(int t, int d, int n);
long long exact_rank(const std::vector<std::vector<BigInt>>& m);

CMat css_projector(const Subspace& N, int t, int d);
// T = {(x + z, x + w) : x in N^perp, z, w in N}
Subspace css_T(const Subspace& N);

Subspace left_right_act(const IMat& O, const Subspace& T, const IMat& Oprime);

struct DoubleCoset {
    long long representative;          // index into enumerate_sigma
    std::vector<long long> members;    // sorted indices
    int defect_dim;
    bool contains_ones;
};
struct DoubleCosetTable {
    std::vector<DoubleCoset> cosets;
    bool invariants_consistent = false;
};
DoubleCosetTable double_cosets(int t, int d);

// Smallest generating subset of O_t(d) found greedily in enumeration order.
std::vector<IMat> O_generators(int t, int d);

struct ComposeResult {
    Subspace T;
    int k = 0;
};
// Integer-matrix route: support and constant of r(T1) r(T2).
ComposeResult compose(const Subspace& T1, const Subspace& T2);
// Relational composition {(x, z) : (x, y) in T1, (y, z) in T2} with k = dim(T1_RD cap T2_LD).
ComposeResult compose_relational(const Subspace& T1, const Subspace& T2);

enum class AntiKind { complement, qudit, balanced };
// complement: 1 1^T - pi (d = 2, t = 2 mod 4)
// qudit: 2 t^{-1} 1 1^T - pi (odd d, d does not divide t)
// balanced: pi - sign * (t/2)^{-1} p p^T with pi p = sign p
IMat anti_permutation(const std::vector<int>& perm, int t, int d, AntiKind kind,
                      const Vec& p = {}, int sign = 1);
Vec parity_vector(int t);  // (-1, 1, -1, 1, ...)

CMat minimal_projector(int t, int n, int d);

IMat icosahedron_adjacency();

}  // namespace swc
