#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

// Permutation of {0..n-1} stored as its image array.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const;
  bool even() const;
  Perm compose(const Perm& rhs) const;  // apply rhs first, then *this
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g * this * g^{-1}

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

// Dihedral element in the normal form x^flip y^rot, with x^2 = e = y^n,
// x y x = y^{-1}.
struct DihedralElt {
  int flip = 0;
  int rot = 0;
  friend bool operator==(const DihedralElt&, const DihedralElt&) = default;
  friend auto operator<=>(const DihedralElt&, const DihedralElt&) = default;
};

struct CyclicElt {
  int r = 0;
  friend bool operator==(const CyclicElt&, const CyclicElt&) = default;
  friend auto operator<=>(const CyclicElt&, const CyclicElt&) = default;
};

struct GroupElement;

struct ProductElt {
  std::vector<GroupElement> parts;
};

struct GroupElement {
  std::variant<Perm, DihedralElt, CyclicElt, ProductElt> value;

  const Perm& perm() const;
  const DihedralElt& dihedral() const;
  const CyclicElt& cyclic() const;
  const ProductElt& product() const;
};

int compare(const GroupElement& a, const GroupElement& b);
bool operator==(const GroupElement& a, const GroupElement& b);
bool operator!=(const GroupElement& a, const GroupElement& b);
bool operator<(const GroupElement& a, const GroupElement& b);

enum class GroupKind { Sn, An, Dn, Zn, Product };

// A fully enumerated finite group: symmetric, alternating, dihedral, cyclic
// or a direct product of such. Immutable after construction; cheap to copy.
class FiniteGroup {
 public:
  static constexpr long long kDefaultMaxOrder = 1'000'000;

  FiniteGroup() = default;
  static FiniteGroup symmetric(int n, long long max_order = kDefaultMaxOrder);
  static FiniteGroup alternating(int n, long long max_order = kDefaultMaxOrder);
  static FiniteGroup dihedral(int n, long long max_order = kDefaultMaxOrder);
  static FiniteGroup cyclic(int n, long long max_order = kDefaultMaxOrder);
  static FiniteGroup product(std::vector<FiniteGroup> factors,
                             long long max_order = kDefaultMaxOrder);

  bool valid() const { return impl_ != nullptr; }
  GroupKind kind() const;
  int param() const;  // the n of Sn/An/Dn/Zn; 0 for products
  const std::vector<FiniteGroup>& factors() const;
  long long order() const;
  const std::vector<GroupElement>& elements() const;
  const std::vector<GroupElement>& generators() const;
  const std::string& name() const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;  // g h g^{-1}
  GroupElement power(const GroupElement& a, long long e) const;
  bool commute(const GroupElement& a, const GroupElement& b) const;
  bool contains(const GroupElement& e) const;
  bool is_identity(const GroupElement& e) const;
  int element_order(const GroupElement& e) const;
  int index_of(const GroupElement& e) const;  // position in elements(); -1 if absent
  long long exponent() const;                 // lcm of element orders

  std::string render(const GroupElement& e) const;
  GroupElement parse(const std::string& text) const;

  bool same_group(const FiniteGroup& o) const { return impl_ == o.impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  const Impl& impl() const;
};

// Group spec grammar: An:<n> | Sn:<n> | Dn:<n> | Zn:<n> | (G1)x(G2)[x(G3)...]
FiniteGroup parse_group(const std::string& spec,
                        long long max_order = FiniteGroup::kDefaultMaxOrder);

int element_order(const FiniteGroup& G, const GroupElement& g);

// Cycle type (1^{m_1}, 2^{m_2}, ...) of a permutation.
struct CycleType {
  std::vector<int> counts;  // counts[j] = m_j; counts[0] unused

  int n() const;
  bool even() const;
  int element_order() const;
  std::string str() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};
CycleType cycle_type(const Perm& p);

// Conjugacy class with a fixed numeration t_1 = s, ..., t_M and coset
// representatives g_i with g_i s g_i^{-1} = t_i (g_1 = e). The numeration is
// the breadth-first orbit sweep from s over the group's fixed generator list.
struct ConjugacyClass {
  FiniteGroup group;
  std::vector<GroupElement> elems;
  std::vector<GroupElement> reps;
  std::map<GroupElement, int> index;

  const GroupElement& base() const { return elems.front(); }
  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const GroupElement& e) const;
  bool contains(const GroupElement& e) const { return index.count(e) > 0; }
};
ConjugacyClass conjugacy_class(const FiniteGroup& G, const GroupElement& s);
std::vector<ConjugacyClass> all_conjugacy_classes(const FiniteGroup& G);

struct Subgroup {
  FiniteGroup ambient;
  std::vector<GroupElement> elems;  // in ambient enumeration order
  std::string label;
  std::optional<GroupElement> base;  // distinguished element, e.g. class base point
  std::map<GroupElement, int> index;

  long long order() const { return static_cast<long long>(elems.size()); }
  bool contains(const GroupElement& e) const { return index.count(e) > 0; }
  int index_of(const GroupElement& e) const;
  bool is_abelian() const;
  long long exponent() const;
};

Subgroup centralizer(const FiniteGroup& G, const GroupElement& s);
Subgroup subgroup_from_elements(const FiniteGroup& G,
                                std::vector<GroupElement> elems,
                                std::optional<GroupElement> base = {});

// Greedy direct decomposition of an abelian subgroup into cyclic factors.
// The subgroup's base element is preferred as first generator when it has
// maximal order.
std::vector<GroupElement> abelian_cyclic_generators(const Subgroup& H);

// First pair (a, b) in enumeration order with |a| = 2, |b| = |H|/2,
// a b a^{-1} = b^{-1} and <a, b> = H; empty when H is not dihedral.
std::optional<std::pair<GroupElement, GroupElement>> dihedral_generators(
    const Subgroup& H);

}  // namespace nichols
