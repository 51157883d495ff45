#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

using Rational = boost::multiprecision::cpp_rational;

// A root of unity exp(2*pi*i * num/den), stored with num/den in lowest terms
// and 0 <= num < den. Its multiplicative order is den.
struct RootOfUnity {
  long long num = 0;
  long long den = 1;

  static RootOfUnity one() { return {0, 1}; }
  static RootOfUnity minus_one() { return {1, 2}; }
  static RootOfUnity zeta(long long n, long long k = 1);

  RootOfUnity times(const RootOfUnity& o) const;
  RootOfUnity divide(const RootOfUnity& o) const;
  RootOfUnity pow(long long e) const;
  RootOfUnity inverse() const;
  int order() const { return static_cast<int>(den); }
  bool is_one() const { return num == 0; }
  bool is_minus_one() const { return den == 2 && num == 1; }

  std::string str() const;     // canonical "zeta(N)^k"
  std::string pretty() const;  // "1", "-1", "i", "-i" or canonical

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
    return a.den != b.den ? a.den < b.den : a.num < b.num;
  }
};

int order_of(const RootOfUnity& q);

// The N-th cyclotomic polynomial, integer coefficients ascending.
const std::vector<long long>& cyclotomic_polynomial(int n);

// An element of Q(zeta_N), stored as a length-N rational coefficient vector
// of powers of zeta_N. Multiplication is cyclic convolution; reduction modulo
// the N-th cyclotomic polynomial happens lazily at equality tests.
class CycloNumber {
 public:
  CycloNumber() = default;
  static CycloNumber zero(int modulus);
  static CycloNumber one(int modulus);
  static CycloNumber from_rational(int modulus, const Rational& c);
  static CycloNumber root(int modulus, long long k);  // zeta_N^k
  static CycloNumber from_rou(const RootOfUnity& q, int modulus);

  int modulus() const { return modulus_; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator-() const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber scaled(const Rational& c) const;
  CycloNumber conj() const;  // complex conjugation zeta^k -> zeta^{-k}
  CycloNumber inverse() const;
  CycloNumber pow(long long e) const;

  bool is_zero() const;
  bool is_one() const;
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b);

  // reduced representative modulo the cyclotomic polynomial, degree < phi(N)
  std::vector<Rational> reduced() const;
  std::optional<Rational> rational_value() const;
  std::optional<RootOfUnity> as_root_of_unity() const;
  CycloNumber lifted_to(int new_modulus) const;  // requires modulus | new_modulus

  std::string str() const;

 private:
  int modulus_ = 1;
  std::vector<Rational> coeff_;  // length modulus_
  void check_same_modulus(const CycloNumber& o) const;
};

using CycloVector = std::vector<CycloNumber>;

struct CycloMatrix {
  int modulus = 1;
  int rows = 0;
  int cols = 0;
  std::vector<CycloNumber> a;  // row-major

  static CycloMatrix zero(int modulus, int rows, int cols);
  static CycloMatrix identity(int modulus, int n);
  CycloNumber& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const CycloNumber& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix operator+(const CycloMatrix& o) const;
  CycloMatrix operator-(const CycloMatrix& o) const;
  CycloVector apply(const CycloVector& v) const;
  CycloMatrix lifted_to(int new_modulus) const;
  bool is_identity() const;
  bool is_scalar(CycloNumber* value = nullptr) const;
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

  std::string str() const;
};

// Least k >= 1 with M^k = I; throws past the guard.
int matrix_order(const CycloMatrix& m, int guard = 10000);

// Basis of the null space, deterministic free-variable form.
std::vector<CycloVector> kernel(const CycloMatrix& m);

// Exact rank via Gaussian elimination over Q(zeta_N).
int rank(CycloMatrix m);

// Eigen decomposition of a matrix of finite order dividing `order`:
// candidates are the order-th roots of unity, eigenspaces are exact kernels.
// The bases concatenate to the full dimension.
std::vector<std::pair<RootOfUnity, std::vector<CycloVector>>> eigenspaces(
    const CycloMatrix& m, int order);

struct SimultaneousEigenvector {
  CycloVector vec;                      // normalized: first nonzero entry = 1
  std::vector<RootOfUnity> eigenvalues;  // one per input matrix
};

// Common eigenbasis of a pairwise-commuting family of finite-order matrices.
std::vector<SimultaneousEigenvector> simultaneous_eigenbasis(
    std::vector<CycloMatrix> mats);

}  // namespace nichols
