#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclo.hpp"

namespace nichols {

struct CartanMatrix {
  int theta = 0;
  std::vector<int> a;  // row-major, a_ii = 2, a_ij <= 0 off-diagonal

  static CartanMatrix make(int theta);
  int at(int i, int j) const { return a[static_cast<size_t>(i) * theta + j]; }
  int& at(int i, int j) { return a[static_cast<size_t>(i) * theta + j]; }
  std::string str() const;
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

struct CartanResult {
  enum class Kind { Cartan, NotCartanType, InfiniteImmediately };
  Kind kind = Kind::NotCartanType;
  std::optional<CartanMatrix> matrix;
  int bad_i = -1, bad_j = -1;  // offending pair for NotCartanType / unit diagonal
};

// Exponent search a_ij in (-ord(q_ii), 0] with q_ii^{a_ij} = q_ij q_ji;
// a unit diagonal entry short-circuits to InfiniteImmediately.
CartanResult cartan_from_q(const QMatrix& Q);

struct FiniteTypeResult {
  bool finite = false;
  std::vector<std::string> components;  // Dynkin labels or failure notes
};

// Connected-component classification against the finite Dynkin list
// A, B, C, D, E6, E7, E8, F4, G2 up to simultaneous permutation.
FiniteTypeResult is_finite_type(const CartanMatrix& A);

struct HilbertPrefix {
  int cap = 0;
  std::vector<long long> dims;  // dims[d] = dim of the degree-d component

  bool terminated() const { return !dims.empty() && dims.back() == 0; }
  long long total() const;
  std::string str() const;
};

// Graded dimensions of the Nichols algebra of a diagonal braiding, computed
// as exact ranks of the quantum symmetrizers up to the degree cap. `budget`
// bounds theta^cap.
HilbertPrefix nichols_hilbert_prefix(const QMatrix& Q, int cap, long long budget = 20000);

}  // namespace nichols
