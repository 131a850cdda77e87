#pragma once

#include <vector>

#include "swc/common.hpp"
#include "swc/gf_linalg.hpp"

namespace swc {

// Phase-space points x = (p, q) in Z_d^{2n}. Flat index is row-major over
// (p, q) with p slowest; within p and q the first qudit is most significant.
struct PhaseSpace {
    int n;
    int d;
    long long size() const { return ipow(d, 2 * n); }
    long long hilbert_dim() const { return ipow(d, n); }
    Vec point(long long idx) const { return digits(idx, d, 2 * n); }
    long long index(const Vec& x) const;
};

// tau = exp(i pi (d^2 + 1) / d)
Cx tau(int d);
// [x, y] = p.q' - q.p', as an integer computed from the given lifts.
long long symplectic_int(const Vec& x, const Vec& y);

// W_x = tau^{-p.q} (Z^{p_1} X^{q_1}) (x) ... ; entries of x may be arbitrary integers.
CMat weyl(int n, int d, const Vec& x);
CVec apply_weyl(int n, int d, const Vec& x, const CVec& v);
// tr[W_x^dagger B] using the monomial structure of W_x.
Cx weyl_trace(int n, int d, const Vec& x, const CMat& B);

std::vector<Cx> characteristic_function(const CMat& B, int n, int d);
std::vector<Cx> characteristic_function(const CVec& psi, int n, int d);
// p_psi(x) = |c_psi(x)|^2; rejects non-normalized input.
std::vector<double> char_distribution(const CVec& psi, int n, int d);

std::vector<Cx> symplectic_fourier(const std::vector<Cx>& f, int n, int d);
std::vector<Cx> symplectic_fourier(const std::vector<double>& f, int n, int d);

CMat point_operator(int n, int d, const Vec& x);
// w_B(x) = d^{-n} tr[A_x B], computed through the Fourier transform of c_B.
std::vector<Cx> wigner_complex(const CMat& B, int n, int d);
std::vector<double> wigner(const CMat& B, int n, int d);
std::vector<double> wigner(const CVec& psi, int n, int d);
// Direct evaluation from explicitly built point operators (oracle route).
std::vector<double> wigner_direct(const CMat& B, int n, int d);

CMat kron_power(const CMat& B, int k);
// Permute the k tensor factors (each of dimension `local`) of B: output factor i
// is input factor ordering[i].
CMat tensor_permute(const CMat& B, int local, const std::vector<int>& ordering);
CVec tensor_permute(const CVec& v, int local, const std::vector<int>& ordering);

}  // namespace swc
