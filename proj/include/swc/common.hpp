#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace swc {

using Cx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Rng = std::mt19937_64;

// Raised when a dense object would exceed the configured dimension cap.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, long long requested, long long cap);
    long long requested;
    long long cap;
};

// Raised when parameters violate an operation's documented envelope.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Internal consistency failure (a mathematical invariant did not hold).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

constexpr double kPi = 3.14159265358979323846;
constexpr double kTol = 1e-9;

// Dimension cap for dense operators; SWC_DIM_CAP overrides the default 8192.
long long dimension_cap();
void set_dimension_cap(long long cap);
void check_cap(long long dim, const std::string& what);

long long ipow(long long b, int e);
bool is_prime(int d);

// Integer residue in [0, m).
inline int mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

int inv_mod(int a, int p);

inline Cx omega_pow(int d, long long k) {
    double ang = 2.0 * kPi * static_cast<double>(mod(k, d)) / d;
    return {std::cos(ang), std::sin(ang)};
}

// Haar-random pure state via a normalized complex Gaussian vector.
CVec haar_state(long long dim, Rng& rng);

// |psi>^{\otimes k}
CVec kron_vec_power(const CVec& v, int k);
CVec kron_vec(const CVec& a, const CVec& b);
CMat kron(const CMat& a, const CMat& b);

// Digits of idx in base d, most significant first, length len.
std::vector<int> digits(long long idx, int d, int len);
long long from_digits(const std::vector<int>& v, int d);

}  // namespace swc
