#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"
#include "nichols/class_analysis.hpp"

namespace nichols {

struct ScreenOptions {
  int subrack_bound = 120;          // largest class the subrack search will walk
  long long hilbert_budget = 20000;  // theta^cap bound for the symmetrizer
  int jobs = 1;                      // worker threads for scans
};

struct Verdict {
  enum class Tag { InfiniteDim, FiniteDim, Undetermined };
  Tag tag = Tag::Undetermined;
  std::optional<long long> dimension;  // set for FiniteDim
  std::vector<std::string> reasons;    // fired rule first, then notes
  std::optional<RootOfUnity> q_ss;
  bool negative_braiding = false;

  std::optional<GroupElement> reality_witness;
  std::optional<PowerWitness> power_witness;
  std::optional<QMatrix> witness_q;
  std::optional<CartanMatrix> witness_cartan;
  std::vector<std::string> witness_subrack_elems;  // rendered points of witness_q

  bool infinite() const { return tag == Tag::InfiniteDim; }
  std::string tag_str() const;
};

// Group-theoretic data of a class shared by every representation screened.
struct ClassProfile {
  ConjugacyClass cls;
  Subgroup cent;
  RealityReport reality;
  std::vector<PowerWitness> witnesses;
  int base_order = 1;
};
ClassProfile make_class_profile(const FiniteGroup& G, const GroupElement& s);

// The decision procedure: scalar rule, reality rule, the two power rules,
// the abelian-subrack Cartan screen, then the finite-dimensional patterns
// (global flip, disconnected two-point pair); first decisive rule wins.
Verdict screen(const ClassProfile& profile, const Irrep& rho, const ScreenOptions& opts = {});
Verdict screen(const FiniteGroup& G, const ConjugacyClass& O, const Irrep& rho,
               const ScreenOptions& opts = {});

struct ScreenRow {
  FiniteGroup group;
  std::string class_rep;
  long long class_size = 0;
  std::string centralizer;
  std::string rep;  // irrep label, or "any" / "q_ss!=-1" / "q_ss=-1"
  Verdict verdict;
};

// One row per (conjugacy class, centralizer irrep) pair of the dihedral
// group; class-level rows where the verdict is representation-free.
std::vector<ScreenRow> table_dn(int n, const ScreenOptions& opts = {});

// Alternating-group scan, 4 <= n <= 8. Classes decided by representation-free
// rules get a single "any" row; supported centralizers are enumerated
// irrep by irrep; anything else yields the two q_ss family rows.
std::vector<ScreenRow> scan_an(int n, const ScreenOptions& opts = {});

}  // namespace nichols
