#pragma once

#include <string>
#include <vector>

#include "nichols/reps.hpp"

namespace nichols {

// The Yetter-Drinfeld module M(O, rho): basis g_i v_p with i indexing the
// class numeration and v_p a basis of the representation space. The
// factorization t_i g_j = g_h gamma (gamma in the centralizer) is
// precomputed for all pairs at build time.
class YDModule {
 public:
  YDModule() = default;

  const ConjugacyClass& cls() const { return cls_; }
  const Irrep& rho() const { return rho_; }
  int class_size() const { return cls_.size(); }
  int vdim() const { return rho_.degree(); }
  int degree() const { return class_size() * vdim(); }
  int modulus() const { return rho_.modulus(); }

  int h_index(int i, int j) const { return h_[static_cast<size_t>(i) * cls_.size() + j]; }
  const GroupElement& gamma(int i, int j) const {
    return gamma_[static_cast<size_t>(i) * cls_.size() + j];
  }

  friend YDModule build_yd_module(const ConjugacyClass& O, const Irrep& rho);

 private:
  ConjugacyClass cls_;
  Irrep rho_;
  std::vector<int> h_;
  std::vector<GroupElement> gamma_;
};

YDModule build_yd_module(const ConjugacyClass& O, const Irrep& rho);

// One summand of c(g_i v_p (x) g_j v_q): coeff * g_{fi} v_{fp} (x) g_{si} v_{sp}
struct BraidTerm {
  int first_i = 0, first_p = 0;
  int second_i = 0, second_p = 0;
  CycloNumber coeff;
};

// The braiding c(g_i v_p (x) g_j v_q) expanded over the module basis.
std::vector<BraidTerm> braiding(const YDModule& m, int i, int p, int j, int q);

// Index subset of the class numeration, closed under conjugation.
struct Subrack {
  std::vector<int> indices;  // ascending
  bool abelian = false;
  bool maximal = false;
};

// All abelian subracks of O (pairwise-commuting subsets, automatically closed
// under conjugation), or only the maximal ones. Enumeration is a deterministic
// clique search on the commuting graph; |O| is capped by `bound`.
std::vector<Subrack> abelian_subracks(const ConjugacyClass& O, bool max_only, int bound = 120);

// Diagonal braiding data on an abelian subrack, one matrix per shared
// eigenvector of the centralizer elements gamma_ij acting on V.
struct QMatrix {
  int theta = 0;
  std::vector<RootOfUnity> q;  // row-major
  std::vector<int> subrack;    // class indices of the points
  int eigentag = 0;            // which common eigenvector
  std::vector<std::string> eigenvector;  // rendered coordinates

  const RootOfUnity& at(int i, int j) const { return q[static_cast<size_t>(i) * theta + j]; }
  RootOfUnity& at(int i, int j) { return q[static_cast<size_t>(i) * theta + j]; }
};

// Empty when the gamma actions have no shared eigenbasis (only possible for
// higher-dimensional rho).
std::vector<QMatrix> diagonal_subspaces(const YDModule& m, const Subrack& s);

// Operational negativity: every diagonal subspace extracted from every
// maximal abelian subrack has q_ii = -1 and q_ij q_ji = 1.
bool is_negative_braiding(const YDModule& m, int subrack_bound = 120);

// Partition of the reflection class of an odd dihedral group into n/d blocks,
// each conjugation-closed and rack-isomorphic to the reflection class of the
// d-gon; the isomorphism is verified block by block.
std::vector<std::vector<int>> rack_decomposition(const ConjugacyClass& O, int d);

}  // namespace nichols
