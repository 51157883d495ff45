#include "nichols/reps.hpp"

#include <algorithm>
#include <numeric>

namespace nichols {

Irrep::Irrep(Subgroup domain, std::string label, int modulus, std::vector<CycloMatrix> table)
    : domain_(std::move(domain)), label_(std::move(label)), modulus_(modulus),
      table_(std::move(table)) {
  if (table_.size() != domain_.elems.size())
    throw spec_error("irrep table size mismatch for " + label_);
  degree_ = table_.empty() ? 0 : table_[0].rows;
  const FiniteGroup& G = domain_.ambient;
  for (size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].rows != degree_ || table_[i].cols != degree_ || table_[i].modulus != modulus_)
      throw spec_error("irrep table shape mismatch for " + label_);
  }
  // multiplicativity on all pairs
  for (size_t i = 0; i < domain_.elems.size(); ++i)
    for (size_t j = 0; j < domain_.elems.size(); ++j) {
      int k = domain_.index_of(G.multiply(domain_.elems[i], domain_.elems[j]));
      if (k < 0) throw spec_error("irrep domain not closed under multiplication");
      if (!(table_[i] * table_[j] == table_[static_cast<size_t>(k)]))
        throw spec_error("irrep " + label_ + " is not multiplicative");
    }
  // irreducibility: sum |chi(g)|^2 = |H|
  CycloNumber total = CycloNumber::zero(modulus_);
  for (size_t i = 0; i < table_.size(); ++i) {
    CycloNumber chi = CycloNumber::zero(modulus_);
    for (int d = 0; d < degree_; ++d) chi += table_[i].at(d, d);
    total += chi * chi.conj();
  }
  if (total != CycloNumber::from_rational(modulus_, Rational(domain_.order())))
    throw spec_error("representation " + label_ + " is not irreducible");
}

const CycloMatrix& Irrep::at(const GroupElement& g) const {
  int i = domain_.index_of(g);
  if (i < 0) throw spec_error("irrep " + label_ + " evaluated outside its domain");
  return table_[static_cast<size_t>(i)];
}

CycloNumber Irrep::character(const GroupElement& g) const {
  const CycloMatrix& m = at(g);
  CycloNumber chi = CycloNumber::zero(modulus_);
  for (int d = 0; d < degree_; ++d) chi += m.at(d, d);
  return chi;
}

// --------------------------------------------------------- abelian_irreps

std::vector<Irrep> abelian_irreps(const Subgroup& H) {
  if (!H.is_abelian()) throw spec_error("abelian_irreps on a nonabelian subgroup");
  const FiniteGroup& G = H.ambient;
  std::vector<GroupElement> gens = abelian_cyclic_generators(H);
  std::vector<int> orders;
  for (const auto& g : gens) orders.push_back(G.element_order(g));
  int N = 1;
  for (int o : orders) N = static_cast<int>(std::lcm(N, o));

  // exponent tuple of every subgroup element with respect to the generators
  size_t r = gens.size();
  std::vector<std::vector<int>> expo(H.elems.size());
  {
    std::vector<int> tuple(r, 0);
    while (true) {
      GroupElement e = G.identity();
      for (size_t k = 0; k < r; ++k) e = G.multiply(e, G.power(gens[k], tuple[k]));
      expo[static_cast<size_t>(H.index_of(e))] = tuple;
      size_t k = r;
      bool done = r == 0;
      while (k > 0) {
        --k;
        if (++tuple[k] < orders[k]) break;
        tuple[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
  }

  bool all_order2 = std::all_of(orders.begin(), orders.end(), [](int o) { return o == 2; });
  auto label_of = [&](const std::vector<int>& ls) {
    if (r == 0 || (r == 1 && orders[0] == 1)) return std::string("eps");
    std::string out;
    for (size_t k = 0; k < r; ++k) {
      if (k) out += "⊗";  // tensor sign
      if (all_order2)
        out += ls[k] ? "sgn" : "eps";
      else
        out += "chi:" + std::to_string(ls[k]);
    }
    return out;
  };

  std::vector<Irrep> out;
  std::vector<int> ls(r, 0);
  while (true) {
    std::vector<CycloMatrix> table;
    for (size_t e = 0; e < H.elems.size(); ++e) {
      long long num = 0;
      for (size_t k = 0; k < r; ++k)
        num += static_cast<long long>(ls[k]) * expo[e][k] * (N / orders[k]);
      CycloMatrix m = CycloMatrix::zero(N, 1, 1);
      m.at(0, 0) = CycloNumber::root(N, num);
      table.push_back(std::move(m));
    }
    out.emplace_back(H, label_of(ls), N, std::move(table));
    size_t k = r;
    bool done = r == 0;
    while (k > 0) {
      --k;
      if (++ls[k] < orders[k]) break;
      ls[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

// --------------------------------------------------------- builtin_irreps

std::vector<Irrep> builtin_irreps(const Subgroup& H) {
  if (H.label.rfind("D", 0) != 0)
    throw spec_error("builtin_irreps supports dihedral-labeled subgroups; got " + H.label);
  auto giens = dihedral_generators(H);
  if (!giens) throw spec_error("no dihedral generators found for " + H.label);
  auto [a, b] = *giens;
  const FiniteGroup& G = H.ambient;
  int n2 = static_cast<int>(H.order() / 2);
  int N = static_cast<int>(std::lcm(2, n2));

  // write every element as a^s b^t
  std::vector<std::pair<int, int>> expo(H.elems.size(), {-1, -1});
  for (int s = 0; s <= 1; ++s)
    for (int t = 0; t < n2; ++t) {
      GroupElement e = G.multiply(G.power(a, s), G.power(b, t));
      expo[static_cast<size_t>(H.index_of(e))] = {s, t};
    }
  for (auto& p : expo)
    if (p.first < 0) throw spec_error("dihedral normal form failed for " + H.label);

  std::vector<Irrep> out;
  int counter = 1;
  auto add_character = [&](int va, int vb) {
    std::vector<CycloMatrix> table;
    for (size_t e = 0; e < H.elems.size(); ++e) {
      auto [s, t] = expo[e];
      long long v = 1;
      if (s && va < 0) v = -v;
      if (t % 2 && vb < 0) v = -v;
      CycloMatrix m = CycloMatrix::zero(N, 1, 1);
      m.at(0, 0) = CycloNumber::from_rational(N, Rational(v));
      table.push_back(std::move(m));
    }
    out.emplace_back(H, "rho:" + std::to_string(counter++), N, std::move(table));
  };
  add_character(1, 1);
  add_character(-1, 1);
  if (n2 % 2 == 0) {
    add_character(1, -1);
    add_character(-1, -1);
  }
  int two_dims = n2 % 2 == 0 ? n2 / 2 - 1 : (n2 - 1) / 2;
  for (int k = 1; k <= two_dims; ++k) {
    CycloMatrix rb = CycloMatrix::zero(N, 2, 2);
    rb.at(0, 0) = CycloNumber::root(N, static_cast<long long>(k) * (N / n2));
    rb.at(1, 1) = CycloNumber::root(N, -static_cast<long long>(k) * (N / n2));
    CycloMatrix ra = CycloMatrix::zero(N, 2, 2);
    ra.at(0, 1) = CycloNumber::one(N);
    ra.at(1, 0) = CycloNumber::one(N);
    std::vector<CycloMatrix> table;
    for (size_t e = 0; e < H.elems.size(); ++e) {
      auto [s, t] = expo[e];
      CycloMatrix m = CycloMatrix::identity(N, 2);
      if (s) m = m * ra;
      for (int q = 0; q < t; ++q) m = m * rb;
      table.push_back(std::move(m));
    }
    out.emplace_back(H, "rho:" + std::to_string(counter++), N, std::move(table));
  }
  return out;
}

bool centralizer_irreps_available(const Subgroup& H) {
  return H.is_abelian() || dihedral_generators(H).has_value();
}

std::vector<Irrep> centralizer_irreps(const Subgroup& H) {
  if (H.is_abelian()) return abelian_irreps(H);
  if (dihedral_generators(H)) return builtin_irreps(H);
  throw spec_error("centralizer representations unavailable for structure " + H.label);
}

// ------------------------------------------------------------- operations

RootOfUnity schur_scalar(const Irrep& rho, const GroupElement& s) {
  const CycloMatrix& m = rho.at(s);
  CycloNumber val;
  if (!m.is_scalar(&val))
    throw spec_error("element does not act by a scalar in " + rho.label());
  auto q = val.as_root_of_unity();
  if (!q) throw spec_error("scalar action is not a root of unity in " + rho.label());
  return *q;
}

Irrep conjugate_rep(const Irrep& rho, const GroupElement& g) {
  const Subgroup& H = rho.domain();
  const FiniteGroup& G = H.ambient;
  for (const auto& h : H.elems)
    if (!H.contains(G.conjugate(g, h)))
      throw spec_error("conjugating element does not normalize the domain of " + rho.label());
  std::vector<CycloMatrix> table;
  for (const auto& h : H.elems) table.push_back(rho.at(G.conjugate(g, h)));
  return Irrep(H, rho.label() + "~", rho.modulus(), std::move(table));
}

bool irreps_isomorphic(const Irrep& a, const Irrep& b) {
  if (a.degree() != b.degree()) return false;
  if (a.domain().elems != b.domain().elems) return false;
  int N = static_cast<int>(std::lcm(a.modulus(), b.modulus()));
  for (const auto& h : a.domain().elems)
    if (a.character(h).lifted_to(N) != b.character(h).lifted_to(N)) return false;
  return true;
}

Index2Data index2_decompose(const Irrep& eta, const Subgroup& Hs) {
  const Subgroup& Gs = eta.domain();
  const FiniteGroup& G = Gs.ambient;
  if (Gs.order() != 2 * Hs.order())
    throw spec_error("index2_decompose requires an index-2 subgroup");
  for (const auto& h : Hs.elems)
    if (!Gs.contains(h)) throw spec_error("index2_decompose: subgroup not contained in domain");

  Index2Data data;
  data.eta = eta;
  // eta' = eta twisted by the sign of the coset
  {
    std::vector<CycloMatrix> table;
    for (const auto& g : Gs.elems) {
      CycloMatrix m = eta.at(g);
      if (!Hs.contains(g))
        for (auto& c : m.a) c = -c;
      table.push_back(std::move(m));
    }
    data.eta_prime = Irrep(Gs, eta.label() + "'", eta.modulus(), std::move(table));
  }

  GroupElement outer = G.identity();
  for (const auto& g : Gs.elems)
    if (!Hs.contains(g)) {
      outer = g;
      break;
    }

  if (!irreps_isomorphic(eta, data.eta_prime)) {
    data.tag = Index2Data::Case::RestrictionIrreducible;
    std::vector<CycloMatrix> table;
    for (const auto& h : Hs.elems) table.push_back(eta.at(h));
    Irrep res(Hs, eta.label() + "|", eta.modulus(), std::move(table));
    // in this case the restriction is self-conjugate
    if (!irreps_isomorphic(res, conjugate_rep(res, outer)))
      throw spec_error("index-2 case (i) invariant failed: restriction not self-conjugate");
    data.components.push_back(std::move(res));
    return data;
  }

  data.tag = Index2Data::Case::RestrictionSplits;
  // split the restriction along a common eigenbasis of the subgroup action
  std::vector<CycloMatrix> mats;
  for (const auto& h : Hs.elems) mats.push_back(eta.at(h));
  std::vector<SimultaneousEigenvector> eig;
  try {
    eig = simultaneous_eigenbasis(mats);
  } catch (const spec_error&) {
    throw spec_error("index-2 split supported only for diagonalizable restrictions");
  }
  // group eigenvectors by their character tuple
  std::vector<std::vector<RootOfUnity>> kinds;
  for (const auto& ev : eig)
    if (std::find(kinds.begin(), kinds.end(), ev.eigenvalues) == kinds.end())
      kinds.push_back(ev.eigenvalues);
  if (kinds.size() != 2)
    throw spec_error("index-2 case (ii) expected exactly two conjugate summands, found " +
                     std::to_string(kinds.size()));
  int N = 1;
  for (const auto& k : kinds)
    for (const auto& q : k) N = static_cast<int>(std::lcm(N, q.order()));
  N = static_cast<int>(std::lcm(N, eta.modulus()));
  for (size_t which = 0; which < kinds.size(); ++which) {
    std::vector<CycloMatrix> table;
    for (size_t h = 0; h < Hs.elems.size(); ++h) {
      CycloMatrix m = CycloMatrix::zero(N, 1, 1);
      m.at(0, 0) = CycloNumber::from_rou(kinds[which][h], N);
      table.push_back(std::move(m));
    }
    data.components.emplace_back(Hs, eta.label() + (which ? ".1" : ".0"), N, std::move(table));
  }
  if (!irreps_isomorphic(conjugate_rep(data.components[0], outer), data.components[1]))
    throw spec_error("index-2 case (ii) invariant failed: summands are not conjugate");
  return data;
}

}  // namespace nichols
