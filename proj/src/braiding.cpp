#include "nichols/braiding.hpp"

#include <algorithm>
#include <map>

namespace nichols {

YDModule build_yd_module(const ConjugacyClass& O, const Irrep& rho) {
  const FiniteGroup& G = O.group;
  // the domain of rho must be the centralizer of the base point
  {
    const Subgroup& H = rho.domain();
    if (!H.ambient.same_group(G))
      throw spec_error("build_yd_module: representation lives over a different group");
    for (const auto& h : H.elems)
      if (!G.commute(h, O.base()))
        throw spec_error("build_yd_module: domain is not the centralizer of the base point");
    if (H.order() * O.size() != G.order())
      throw spec_error("build_yd_module: domain is not the full centralizer");
  }
  YDModule m;
  m.cls_ = O;
  m.rho_ = rho;
  int M = O.size();
  m.h_.resize(static_cast<size_t>(M) * M);
  m.gamma_.reserve(static_cast<size_t>(M) * M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      GroupElement tg = G.multiply(O.elems[i], O.reps[j]);
      int h = O.index_of(G.conjugate(O.elems[i], O.elems[j]));
      if (h < 0) throw spec_error("class not closed under conjugation");
      GroupElement gamma = G.multiply(G.inverse(O.reps[h]), tg);
      if (!G.commute(gamma, O.base()))
        throw spec_error("yd factorization produced a non-centralizing gamma");
      m.h_[static_cast<size_t>(i) * M + j] = h;
      m.gamma_.push_back(std::move(gamma));
    }
  return m;
}

std::vector<BraidTerm> braiding(const YDModule& m, int i, int p, int j, int q) {
  int M = m.class_size(), d = m.vdim();
  if (i < 0 || i >= M || j < 0 || j >= M || p < 0 || p >= d || q < 0 || q >= d)
    throw spec_error("braiding: basis index out of range");
  int h = m.h_index(i, j);
  const CycloMatrix& mat = m.rho().at(m.gamma(i, j));
  std::vector<BraidTerm> out;
  for (int pp = 0; pp < d; ++pp) {
    const CycloNumber& c = mat.at(pp, q);
    if (c.is_zero()) continue;
    out.push_back(BraidTerm{h, pp, i, p, c});
  }
  return out;
}

// ------------------------------------------------------- abelian subracks

namespace {

// Bron-Kerbosch with pivoting over the commuting graph.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out, size_t guard) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    if (out.size() > guard) throw budget_error("maximal clique enumeration exceeded its guard");
    return;
  }
  int pivot = -1;
  size_t best = 0;
  for (const auto& cand : {P, X})
    for (int u : cand) {
      size_t cnt = 0;
      for (int v : P)
        if (adj[u][v]) ++cnt;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  std::vector<int> ext;
  for (int v : P)
    if (pivot < 0 || !adj[pivot][v]) ext.push_back(v);
  for (int v : ext) {
    std::vector<int> P2, X2;
    for (int u : P)
      if (adj[v][u]) P2.push_back(u);
    for (int u : X)
      if (adj[v][u]) X2.push_back(u);
    R.push_back(v);
    bron_kerbosch(adj, R, std::move(P2), std::move(X2), out, guard);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

void all_cliques(const std::vector<std::vector<char>>& adj, std::vector<int>& R, int from,
                 std::vector<std::vector<int>>& out, size_t guard) {
  if (!R.empty()) {
    out.push_back(R);
    if (out.size() > guard) throw budget_error("clique enumeration exceeded its guard");
  }
  for (int v = from; v < static_cast<int>(adj.size()); ++v) {
    bool ok = true;
    for (int u : R)
      if (!adj[u][v]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    R.push_back(v);
    all_cliques(adj, R, v + 1, out, guard);
    R.pop_back();
  }
}

}  // namespace

std::vector<Subrack> abelian_subracks(const ConjugacyClass& O, bool max_only, int bound) {
  int M = O.size();
  if (M > bound)
    throw budget_error("abelian subrack search bound exceeded: class size " +
                       std::to_string(M) + " > " + std::to_string(bound));
  const FiniteGroup& G = O.group;
  std::vector<std::vector<char>> adj(M, std::vector<char>(M, 0));
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j)
      adj[i][j] = adj[j][i] = G.commute(O.elems[i], O.elems[j]) ? 1 : 0;

  std::vector<std::vector<int>> cliques;
  std::vector<int> R;
  constexpr size_t kCliqueGuard = 200000;
  if (max_only) {
    std::vector<int> P(M), X;
    for (int i = 0; i < M; ++i) P[i] = i;
    bron_kerbosch(adj, R, std::move(P), std::move(X), cliques, kCliqueGuard);
  } else {
    all_cliques(adj, R, 0, cliques, kCliqueGuard);
  }
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());

  std::vector<Subrack> out;
  for (auto& c : cliques) {
    Subrack s;
    s.indices = std::move(c);
    s.abelian = true;
    // pairwise-commuting subsets are closed: x |> y = y
    s.maximal = max_only;
    out.push_back(std::move(s));
  }
  if (!max_only) {
    // mark maximality by extension test
    for (auto& s : out) {
      bool extendable = false;
      for (int v = 0; v < M && !extendable; ++v) {
        if (std::binary_search(s.indices.begin(), s.indices.end(), v)) continue;
        bool all = true;
        for (int u : s.indices)
          if (!adj[u][v]) {
            all = false;
            break;
          }
        extendable = all;
      }
      s.maximal = !extendable;
    }
  }
  return out;
}

// --------------------------------------------------- diagonal subspaces

std::vector<QMatrix> diagonal_subspaces(const YDModule& m, const Subrack& s) {
  const ConjugacyClass& O = m.cls();
  const FiniteGroup& G = O.group;
  int theta = static_cast<int>(s.indices.size());
  for (int a = 0; a < theta; ++a)
    for (int b = 0; b < theta; ++b)
      if (!G.commute(O.elems[s.indices[a]], O.elems[s.indices[b]]))
        throw spec_error("diagonal_subspaces requires an abelian subrack");

  // distinct gamma values across the subrack
  std::vector<GroupElement> gammas;
  std::vector<std::vector<int>> which(theta, std::vector<int>(theta));
  for (int a = 0; a < theta; ++a)
    for (int b = 0; b < theta; ++b) {
      const GroupElement& g = m.gamma(s.indices[a], s.indices[b]);
      auto it = std::find(gammas.begin(), gammas.end(), g);
      if (it == gammas.end()) {
        which[a][b] = static_cast<int>(gammas.size());
        gammas.push_back(g);
      } else {
        which[a][b] = static_cast<int>(it - gammas.begin());
      }
    }

  if (m.vdim() == 1) {
    QMatrix Q;
    Q.theta = theta;
    Q.subrack = s.indices;
    Q.eigentag = 0;
    Q.eigenvector = {"1"};
    Q.q.resize(static_cast<size_t>(theta) * theta);
    for (int a = 0; a < theta; ++a)
      for (int b = 0; b < theta; ++b) {
        auto q = m.rho().at(gammas[which[a][b]]).at(0, 0).as_root_of_unity();
        if (!q) throw spec_error("character value is not a root of unity");
        Q.at(a, b) = *q;
      }
    return {Q};
  }

  std::vector<CycloMatrix> mats;
  for (const auto& g : gammas) mats.push_back(m.rho().at(g));
  for (size_t i = 0; i < mats.size(); ++i)
    for (size_t j = i + 1; j < mats.size(); ++j)
      if (!(mats[i] * mats[j] == mats[j] * mats[i])) return {};  // no shared eigenbasis

  auto eig = simultaneous_eigenbasis(mats);
  std::vector<QMatrix> out;
  for (size_t tag = 0; tag < eig.size(); ++tag) {
    QMatrix Q;
    Q.theta = theta;
    Q.subrack = s.indices;
    Q.eigentag = static_cast<int>(tag);
    for (const auto& c : eig[tag].vec) Q.eigenvector.push_back(c.str());
    Q.q.resize(static_cast<size_t>(theta) * theta);
    for (int a = 0; a < theta; ++a)
      for (int b = 0; b < theta; ++b) Q.at(a, b) = eig[tag].eigenvalues[which[a][b]];
    out.push_back(std::move(Q));
  }
  return out;
}

bool is_negative_braiding(const YDModule& m, int subrack_bound) {
  auto subracks = abelian_subracks(m.cls(), /*max_only=*/true, subrack_bound);
  for (const auto& s : subracks) {
    auto qs = diagonal_subspaces(m, s);
    if (qs.empty()) return false;  // nothing extractable to certify
    for (const auto& Q : qs) {
      for (int i = 0; i < Q.theta; ++i)
        if (!Q.at(i, i).is_minus_one()) return false;
      for (int i = 0; i < Q.theta; ++i)
        for (int j = i + 1; j < Q.theta; ++j)
          if (!Q.at(i, j).times(Q.at(j, i)).is_one()) return false;
    }
  }
  return true;
}

// --------------------------------------------------- rack decomposition

std::vector<std::vector<int>> rack_decomposition(const ConjugacyClass& O, int d) {
  const FiniteGroup& G = O.group;
  if (G.kind() != GroupKind::Dn) throw spec_error("rack_decomposition expects a dihedral class");
  int n = G.param();
  if (n % 2 == 0 || n % d != 0 || d < 1)
    throw spec_error("rack_decomposition requires odd n and d | n");
  if (O.size() != n || O.base().dihedral().flip != 1)
    throw spec_error("rack_decomposition expects the reflection class");
  int e = n / d;

  // blocks by rotation residue mod e
  std::vector<std::vector<int>> blocks(e);
  for (int i = 0; i < O.size(); ++i) blocks[O.elems[i].dihedral().rot % e].push_back(i);
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end(), [&](int x, int y) {
      return O.elems[x].dihedral().rot < O.elems[y].dihedral().rot;
    });
    if (static_cast<int>(b.size()) != d) throw spec_error("rack block size mismatch");
  }

  // verify closure and the rack isomorphism with the d-gon reflection class
  FiniteGroup Dd = FiniteGroup::dihedral(d);
  for (const auto& b : blocks) {
    std::map<int, int> to_small;  // class index -> 0..d-1
    for (int k = 0; k < d; ++k) to_small[b[k]] = k;
    for (int x : b)
      for (int y : b) {
        GroupElement z = G.conjugate(O.elems[x], O.elems[y]);
        int zi = O.index_of(z);
        if (!to_small.count(zi)) throw spec_error("rack block is not conjugation-closed");
        // image under (rot - r0)/e must match the small rack's table
        GroupElement sx{DihedralElt{1, (O.elems[x].dihedral().rot - O.elems[b[0]].dihedral().rot) / e % d}};
        GroupElement sy{DihedralElt{1, (O.elems[y].dihedral().rot - O.elems[b[0]].dihedral().rot) / e % d}};
        GroupElement sz = Dd.conjugate(sx, sy);
        int want = (O.elems[zi].dihedral().rot - O.elems[b[0]].dihedral().rot) / e % d;
        if (sz.dihedral().rot != want)
          throw spec_error("rack block is not isomorphic to the small reflection rack");
      }
  }
  return blocks;
}

}  // namespace nichols
