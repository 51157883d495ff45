#pragma once

#include <string>
#include <vector>

#include "nichols/cyclo.hpp"
#include "nichols/group.hpp"

namespace nichols {

// An irreducible representation of a subgroup, stored as an explicit table of
// matrices over Q(zeta_N). Construction checks multiplicativity on all pairs
// and the irreducibility criterion sum |chi(g)|^2 = |H|.
class Irrep {
 public:
  Irrep() = default;
  Irrep(Subgroup domain, std::string label, int modulus, std::vector<CycloMatrix> table);

  const Subgroup& domain() const { return domain_; }
  const std::string& label() const { return label_; }
  int modulus() const { return modulus_; }
  int degree() const { return degree_; }

  const CycloMatrix& at(const GroupElement& g) const;
  CycloNumber character(const GroupElement& g) const;

 private:
  Subgroup domain_;
  std::string label_;
  int modulus_ = 1;
  int degree_ = 0;
  std::vector<CycloMatrix> table_;  // indexed like domain_.elems
};

// All |H| characters of an abelian subgroup, built on the greedy cyclic
// decomposition. Values are roots of unity in Q(zeta_exponent).
std::vector<Irrep> abelian_irreps(const Subgroup& H);

// Built-in table for dihedral-labeled subgroups: the four (or two) characters
// on the found generators (a, b), then the standard two-dimensional family
// rho_k(b) = diag(zeta^k, zeta^{-k}), rho_k(a) = [[0,1],[1,0]].
std::vector<Irrep> builtin_irreps(const Subgroup& H);

// Irreps of a centralizer: abelian or dihedral-labeled subgroups are
// supported; anything else is rejected.
std::vector<Irrep> centralizer_irreps(const Subgroup& H);
bool centralizer_irreps_available(const Subgroup& H);

// The scalar by which a central element acts; errors if rho(s) is not scalar.
RootOfUnity schur_scalar(const Irrep& rho, const GroupElement& s);

// rho-bar(h) = rho(g h g^{-1}) for g normalizing the domain.
Irrep conjugate_rep(const Irrep& rho, const GroupElement& g);

// character equality (= isomorphism for irreducibles over C)
bool irreps_isomorphic(const Irrep& a, const Irrep& b);

struct Index2Data {
  enum class Case { RestrictionIrreducible, RestrictionSplits };
  Case tag = Case::RestrictionIrreducible;
  Irrep eta;
  Irrep eta_prime;               // eta twisted by the sign of the coset
  std::vector<Irrep> components;  // {Res eta} or {rho, rho-bar}
};

// Restriction bookkeeping along an index-2 subgroup: case (i) when
// eta and eta' are non-isomorphic (restriction stays irreducible), case (ii)
// when they agree (restriction splits into a conjugate pair).
Index2Data index2_decompose(const Irrep& eta, const Subgroup& Hs);

}  // namespace nichols
