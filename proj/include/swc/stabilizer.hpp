#pragma once

#include <memory>
#include <string>
#include <vector>

#include "swc/common.hpp"
#include "swc/gf_linalg.hpp"

namespace swc {

struct StabilizerState {
    int n = 1;
    int d = 2;
    Subspace M;   // Lagrangian in Z_d^{2n}
    Vec z;        // translation label: state = W_z |M, f_0>
    CVec vector;  // realized amplitudes
};

struct StabilizerEnsemble {
    int n = 1;
    int d = 2;
    std::vector<StabilizerState> states;
    // Columns are the state vectors, in enumeration order.
    CMat matrix() const;
};

// Cardinality d^n prod_{i=1}^n (d^i + 1).
BigInt stabilizer_count(int n, int d);
void check_stabilizer_envelope(int n, int d);

std::vector<Subspace> enumerate_lagrangians(int n, int d);

// Projector onto the stabilizer code of the group generated by the Weyl
// operators on the basis of the isotropic subspace S (phase +1 on generators).
CMat stabilizer_code_projector(const Subspace& S, int n);
StabilizerState reference_state(const Subspace& M);
// W_z applied to the reference state, with the label z reduced to its
// canonical coset representative modulo M.
StabilizerState translate(const StabilizerState& ref, const Vec& z);

// Cached; sorted by Lagrangian basis, then by lex-least coset label z.
const StabilizerEnsemble& enumerate_stabilizer_states(int n, int d);

CMat measurement_channel(const Subspace& M, const CMat& rho);

struct OverlapResult {
    long long index = -1;
    double value = 0.0;
};
OverlapResult max_stabilizer_overlap(const CVec& psi, int n, int d);

long long sample_stabilizer_index(int n, int d, Rng& rng);
StabilizerState sample_stabilizer(int n, int d, Rng& rng);

}  // namespace swc
