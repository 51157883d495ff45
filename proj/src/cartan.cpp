#include "nichols/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace nichols {

CartanMatrix CartanMatrix::make(int theta) {
  CartanMatrix m;
  m.theta = theta;
  m.a.assign(static_cast<size_t>(theta) * theta, 0);
  for (int i = 0; i < theta; ++i) m.at(i, i) = 2;
  return m;
}

std::string CartanMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < theta; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < theta; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

CartanResult cartan_from_q(const QMatrix& Q) {
  CartanResult res;
  int theta = Q.theta;
  for (int i = 0; i < theta; ++i) {
    if (Q.at(i, i).is_one()) {
      res.kind = CartanResult::Kind::InfiniteImmediately;
      res.bad_i = res.bad_j = i;
      return res;
    }
  }
  CartanMatrix A = CartanMatrix::make(theta);
  for (int i = 0; i < theta; ++i) {
    int ni = Q.at(i, i).order();
    for (int j = 0; j < theta; ++j) {
      if (i == j) continue;
      RootOfUnity prod = Q.at(i, j).times(Q.at(j, i));
      bool found = false;
      for (int e = 0; e < ni; ++e) {
        if (Q.at(i, i).pow(-e) == prod) {
          A.at(i, j) = -e;
          found = true;
          break;
        }
      }
      if (!found) {
        res.kind = CartanResult::Kind::NotCartanType;
        res.bad_i = i;
        res.bad_j = j;
        return res;
      }
    }
  }
  res.kind = CartanResult::Kind::Cartan;
  res.matrix = std::move(A);
  return res;
}

// ------------------------------------------------------ finite type test

namespace {

struct Component {
  std::vector<int> verts;
};

std::string classify_component(const CartanMatrix& A, const std::vector<int>& verts) {
  int r = static_cast<int>(verts.size());
  if (r == 1) return "A1";
  // edge list with weights a_ij * a_ji
  struct Edge {
    int u, v, w;
  };
  std::vector<Edge> edges;
  std::vector<int> deg(r, 0);
  for (int x = 0; x < r; ++x)
    for (int y = x + 1; y < r; ++y) {
      int aij = A.at(verts[x], verts[y]);
      int aji = A.at(verts[y], verts[x]);
      if (aij == 0) continue;
      edges.push_back({x, y, aij * aji});
      ++deg[x];
      ++deg[y];
    }
  for (const auto& e : edges)
    if (e.w >= 4) return "";
  if (static_cast<int>(edges.size()) != r - 1) return "";  // cycle
  if (r == 2) {
    int w = edges[0].w;
    if (w == 1) return "A2";
    if (w == 3) return "G2";
    // distinguish transposed forms; rank 2 has B2 = C2
    return "B2";
  }
  int heavy = 0, triple = 0;
  for (const auto& e : edges) {
    if (e.w == 2) ++heavy;
    if (e.w == 3) ++triple;
  }
  if (triple > 0 || heavy > 1) return "";
  int branch = -1;
  for (int x = 0; x < r; ++x) {
    if (deg[x] >= 4) return "";
    if (deg[x] == 3) {
      if (branch >= 0) return "";
      branch = x;
    }
  }
  if (heavy == 1) {
    if (branch >= 0) return "";
    // a path; locate the heavy edge relative to the ends
    const Edge* he = nullptr;
    for (const auto& e : edges)
      if (e.w == 2) he = &e;
    bool at_end = deg[he->u] == 1 || deg[he->v] == 1;
    if (at_end) {
      // B when the endpoint row holds the -1, C when it holds the -2
      int endpoint = deg[he->u] == 1 ? he->u : he->v;
      int other = endpoint == he->u ? he->v : he->u;
      int a_end = A.at(verts[endpoint], verts[other]);
      return (a_end == -1 ? "B" : "C") + std::to_string(r);
    }
    if (r == 4) {
      // middle edge of a 4-path
      if (deg[he->u] == 2 && deg[he->v] == 2) return "F4";
    }
    return "";
  }
  // simply laced
  if (branch < 0) return "A" + std::to_string(r);
  // arm lengths from the branch vertex
  std::vector<std::vector<int>> adj(r);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> arms;
  for (int nb : adj[branch]) {
    int len = 1, prev = branch, cur = nb;
    while (true) {
      int next = -1;
      for (int c : adj[cur])
        if (c != prev) next = c;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return "";
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(r);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
  return "";
}

}  // namespace

FiniteTypeResult is_finite_type(const CartanMatrix& A) {
  FiniteTypeResult res;
  res.finite = true;
  int n = A.theta;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && A.at(i, i) != 2) throw spec_error("Cartan matrix needs 2 on the diagonal");
      if (i != j && A.at(i, j) > 0) throw spec_error("Cartan matrix needs a_ij <= 0 off-diagonal");
      if (i != j && (A.at(i, j) == 0) != (A.at(j, i) == 0)) {
        res.finite = false;
        res.components.push_back("not-gcm(zero-asymmetry at " + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        return res;
      }
    }
  // connected components
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && A.at(u, v) != 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) verts.push_back(i);
    std::string label = classify_component(A, verts);
    if (label.empty()) {
      res.finite = false;
      std::string v;
      for (int x : verts) v += (v.empty() ? "" : ",") + std::to_string(x);
      res.components.push_back("not-finite{" + v + "}");
    } else {
      res.components.push_back(label);
    }
  }
  return res;
}

// ------------------------------------------------------- Hilbert prefix

long long HilbertPrefix::total() const {
  long long t = 0;
  for (long long d : dims) t += d;
  return t;
}

std::string HilbertPrefix::str() const {
  std::string out = "(";
  for (size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + (terminated() ? ")" : ",...)");
}

namespace {

// adjacent-swap word sorting perm to the identity; a reduced word
std::vector<int> bubble_word(std::vector<int> p) {
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i));
        moved = true;
      }
    }
  }
  return word;
}

}  // namespace

HilbertPrefix nichols_hilbert_prefix(const QMatrix& Q, int cap, long long budget) {
  int theta = Q.theta;
  if (theta < 1) throw spec_error("empty braiding matrix");
  long long size_est = 1;
  for (int d = 0; d < cap; ++d) {
    size_est *= theta;
    if (size_est > budget)
      throw budget_error("symmetrizer budget exceeded: theta^cap = " +
                         std::to_string(theta) + "^" + std::to_string(cap) + " > " +
                         std::to_string(budget));
  }
  long long work = 0;
  for (int d = 2, f = 2; d <= cap; ++d, f *= d) {
    long long words = 1;
    for (int k = 0; k < d; ++k) words = std::min<long long>(words * theta, budget);
    work += static_cast<long long>(f) * words;
    if (work > 50'000'000)
      throw budget_error("symmetrizer work estimate exceeds the budget");
  }

  int N = 1;
  for (const auto& q : Q.q) N = static_cast<int>(std::lcm(N, q.order()));
  std::vector<CycloNumber> qc;
  for (const auto& q : Q.q) qc.push_back(CycloNumber::from_rou(q, N));
  auto qat = [&](int i, int j) -> const CycloNumber& {
    return qc[static_cast<size_t>(i) * theta + j];
  };

  HilbertPrefix out;
  out.cap = cap;
  out.dims.push_back(1);
  if (cap >= 1) out.dims.push_back(theta);
  for (int d = 2; d <= cap; ++d) {
    // words grouped by letter multiset; the symmetrizer is block-diagonal
    std::map<std::vector<int>, std::vector<std::vector<int>>> blocks;
    std::vector<int> word(d, 0);
    while (true) {
      std::vector<int> key(theta, 0);
      for (int c : word) ++key[c];
      blocks[key].push_back(word);
      int k = d;
      bool done = false;
      while (k > 0) {
        --k;
        if (++word[k] < theta) break;
        word[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
    // reduced words for all of S_d
    std::vector<std::vector<int>> swords;
    {
      std::vector<int> p(d);
      std::iota(p.begin(), p.end(), 0);
      do {
        swords.push_back(bubble_word(p));
      } while (std::next_permutation(p.begin(), p.end()));
    }
    long long dim_d = 0;
    for (auto& [key, ws] : blocks) {
      int b = static_cast<int>(ws.size());
      std::map<std::vector<int>, int> pos;
      for (int i = 0; i < b; ++i) pos[ws[i]] = i;
      CycloMatrix S = CycloMatrix::zero(N, b, b);
      for (const auto& sw : swords) {
        for (int col = 0; col < b; ++col) {
          std::vector<int> w = ws[col];
          CycloNumber coeff = CycloNumber::one(N);
          for (auto it = sw.rbegin(); it != sw.rend(); ++it) {
            int i = *it;
            coeff = coeff * qat(w[i], w[i + 1]);
            std::swap(w[i], w[i + 1]);
          }
          S.at(pos.at(w), col) += coeff;
        }
      }
      dim_d += rank(std::move(S));
    }
    out.dims.push_back(dim_d);
    if (dim_d == 0) break;  // generated in degree one: stays zero
  }
  return out;
}

}  // namespace nichols
