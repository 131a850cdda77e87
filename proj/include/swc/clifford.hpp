#pragma once

#include <string>
#include <vector>

#include "swc/common.hpp"
#include "swc/gf_linalg.hpp"

namespace swc {

enum class GateKind { F, P, CADD, W };

struct Gate {
    GateKind kind = GateKind::F;
    std::vector<int> args;  // F,P: {qudit}; CADD: {control, target}; W: phase-space point
};

struct CliffordWord {
    int n = 1;
    int d = 2;
    std::vector<Gate> letters;
};

// Single-qudit generators.
CMat fourier_gate(int d);
CMat phase_gate(int d);
// CADD |a, b> = |a, a + b> on two qudits.
CMat cadd_gate(int d);

CMat gate_matrix(const Gate& g, int n, int d);
CMat word_matrix(const CliffordWord& w);

struct ConjugationResult {
    bool ok = false;
    std::string diagnostic;
    IMat gamma;               // 2n x 2n, columns = images of unit vectors
    std::vector<Vec> image;   // image[x] for every phase-space index x
    std::vector<Cx> phase;    // U W_x U^dagger = phase[x] W_{image[x]}
    bool symplectic = false;  // Gamma^T J Gamma = J
    bool linear = false;
};
ConjugationResult conjugate_weyl_check(const CMat& U, int n, int d);

bool is_symplectic(const IMat& gamma, int d);

// Finds z with phase[x] = omega^{[z, x]} for every x, if one exists.
bool phase_is_character(const ConjugationResult& r, int n, int d, Vec* z = nullptr);

struct RandomClifford {
    CliffordWord word;
    CMat unitary;
};
RandomClifford random_clifford(int n, int d, int length, Rng& rng);

std::vector<IMat> enumerate_sp(int n, int d);
long long sp_orbit_count(int n, int d, int t);

std::string gate_name(GateKind k);
GateKind gate_from_name(const std::string& s);

}  // namespace swc
