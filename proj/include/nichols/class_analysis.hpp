#pragma once

#include <optional>
#include <vector>

#include "nichols/group.hpp"

namespace nichols {

struct RealityReport {
  bool is_real = false;
  bool is_absolutely_real = false;
  std::optional<GroupElement> inverting_witness;
  std::optional<GroupElement> involution_witness;
};

// Brute-force search over G for an element conjugating s to s^{-1}, and for
// an involution doing the same. Witnesses are the first matches in the
// group's enumeration order.
RealityReport reality_report(const FiniteGroup& G, const GroupElement& s);

// The involution g_j = (1 j-1)(2 j-2)... inverting the standard j-cycle
// (1 2 ... j); acts on {1..j}. Degenerates to the identity for j = 2.
Perm an_inverting_involution(int j);

// sign of g_j: (-1)^{k-1} for j = 2k, (-1)^k for j = 2k+1
int an_inverting_involution_sign(int j);

// Sufficient conditions on an even cycle type for absolute reality in A_n:
// at least two fixed points, or an even total count of cycle lengths that
// are congruent to 0 or 3 mod 4.
bool type_implies_absolutely_real(const CycleType& t);

// Whether the symmetric-group class of this (even) cycle type splits into
// two alternating-group classes: all cycle lengths odd and pairwise distinct
// (at most one fixed point, no even lengths, longer odd lengths at most once).
bool an_class_splits(const CycleType& t);

struct PowerWitness {
  int j = 0;
  GroupElement sigma;        // sigma s sigma^{-1} = s^j
  bool distinct3 = false;    // s, s^j, s^{j^2} pairwise distinct
  bool square_returns = false;  // s^{j^2} = s
};

// For each j in [2, |s|) coprime to |s| with s^j in O, the first conjugating
// element found in enumeration order, with the power-pattern flags.
std::vector<PowerWitness> power_witnesses(const FiniteGroup& G, const ConjugacyClass& O);

}  // namespace nichols
