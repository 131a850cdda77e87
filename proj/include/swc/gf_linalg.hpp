#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swc/common.hpp"

namespace swc {

using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<int>;
using IMat = std::vector<Vec>;

struct Modulus {
    int d = 2;
    int D = 4;
    Modulus() = default;
    explicit Modulus(int d_);
};

// Row space over Z_d, stored as its reduced row echelon basis. Two values
// compare equal iff they are the same set of vectors.
struct Subspace {
    int d = 2;
    int ambient = 0;
    IMat basis;

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const;
    // Lexicographically least member of v + *this.
    Vec reduce(const Vec& v) const;
    std::vector<Vec> elements() const;
    std::vector<int> pivots() const;

    bool operator==(const Subspace& o) const {
        return d == o.d && ambient == o.ambient && basis == o.basis;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;
};

enum class FormKind { dot, symplectic, hyperbolic };
enum class QuadKind { q, Q };

Subspace rref(const IMat& rows, int d, int ambient);
Subspace zero_subspace(int d, int ambient);
Subspace full_space(int d, int ambient);
Subspace span_of(const std::vector<Vec>& vs, int d, int ambient);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Right kernel {v : A v = 0} over Z_d.
Subspace nullspace(const IMat& A, int d, int cols);

int bilinear(const Vec& x, const Vec& y, int d, FormKind form);
Subspace complement(const Subspace& s, FormKind form);

// x.x mod D with lifts in [0, d).
int quadratic_q(const Vec& x, int d);
// x.x - y.y mod D.
int quadratic_Q(const Vec& x, const Vec& y, int d);
// Q on a concatenated vector (x, y) of even length.
int quadratic_Q(const Vec& xy, int d);

bool is_totally_isotropic(const Subspace& s, QuadKind kind);
bool is_symplectic_isotropic(const Subspace& s);

BigInt gaussian_binomial(int n, int k, int d);
bool gaussian_pascal_check(int n, int k, int d);
bool gaussian_binomial_formula_check(int n, int d, long long t);

std::vector<Vec> coset_reps(const Subspace& sup, const Subspace& sub);

// All vectors of Z_d^m in lexicographic order.
std::vector<Vec> all_vectors(int d, int m);

// Every subspace obtainable from `start` by adjoining vectors of `pool` that
// satisfy `compatible` against each current basis vector. Returns all
// subspaces of dimension `target_dim` (or every level when target_dim < 0).
std::vector<Subspace> grow_subspaces(const Subspace& start, const std::vector<Vec>& pool,
                                     const std::function<bool(const Vec&, const Vec&)>& compatible,
                                     int target_dim);

// Every subspace of Z_d^m (all dimensions), sorted.
std::vector<Subspace> all_subspaces(int d, int m);

Vec add(const Vec& a, const Vec& b, int d);
Vec scale(const Vec& a, int c, int d);
Vec concat(const Vec& a, const Vec& b);
Vec ones(int t);
std::string to_string(const Vec& v);
std::string to_string(const Subspace& s);

}  // namespace swc
