// Shared test-side oracles. Everything here is deliberately independent of
// the library's own decision paths: the minor oracle and the sparse braid
// walker recompute their answers from first principles.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"

namespace nichols::testing {

inline Irrep rep_by_label(const Subgroup& cent, const std::string& label) {
  for (auto& r : centralizer_irreps(cent))
    if (r.label() == label) return r;
  throw spec_error("no rep " + label);
}

inline YDModule module_for(const FiniteGroup& G, const std::string& cls_spec,
                           const std::string& rep_label) {
  auto s = G.parse(cls_spec);
  auto O = conjugacy_class(G, s);
  return build_yd_module(O, rep_by_label(centralizer(G, s), rep_label));
}

// sign pattern of a braiding matrix: 1, -1 or 0 for anything else
inline std::vector<std::vector<int>> q_signs(const QMatrix& Q) {
  std::vector<std::vector<int>> s(Q.theta, std::vector<int>(Q.theta, 0));
  for (int i = 0; i < Q.theta; ++i)
    for (int j = 0; j < Q.theta; ++j)
      s[i][j] = Q.at(i, j).is_one() ? 1 : (Q.at(i, j).is_minus_one() ? -1 : 0);
  return s;
}

// equality up to a simultaneous permutation of the index set
inline bool perm_equivalent(const std::vector<std::vector<int>>& a,
                            const std::vector<std::vector<int>>& b) {
  int n = static_cast<int>(a.size());
  if (b.size() != a.size()) return false;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j)
        if (a[perm[i]][perm[j]] != b[i][j]) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// exact integer determinant by cofactor expansion (ranks <= 4 here)
inline long long int_det(const std::vector<std::vector<long long>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (int j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    long long term = m[0][c] * int_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// a generalized Cartan matrix is of finite type iff all principal minors
// are positive
inline bool finite_by_minors(const CartanMatrix& A) {
  int n = A.theta;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    std::vector<std::vector<long long>> sub(idx.size(), std::vector<long long>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = A.at(idx[i], idx[j]);
    if (int_det(sub) <= 0) return false;
  }
  return true;
}

// sparse check of (c x id)(id x c)(c x id) = (id x c)(c x id)(id x c) on all
// basis triples
inline bool braid_equation_holds(const YDModule& m) {
  int deg = m.degree(), vd = m.vdim();
  std::vector<std::vector<std::vector<std::tuple<int, int, CycloNumber>>>> table(
      deg, std::vector<std::vector<std::tuple<int, int, CycloNumber>>>(deg));
  for (int i = 0; i < m.class_size(); ++i)
    for (int p = 0; p < vd; ++p)
      for (int j = 0; j < m.class_size(); ++j)
        for (int q = 0; q < vd; ++q)
          for (const auto& t : braiding(m, i, p, j, q))
            table[i * vd + p][j * vd + q].emplace_back(t.first_i * vd + t.first_p,
                                                       t.second_i * vd + t.second_p, t.coeff);
  using Combo = std::map<std::array<int, 3>, CycloNumber>;
  auto apply = [&](const Combo& in, int pos) {
    Combo out;
    for (const auto& [key, v] : in)
      for (const auto& [x2, y2, cf] : table[key[pos]][key[pos + 1]]) {
        std::array<int, 3> nk = key;
        nk[pos] = x2;
        nk[pos + 1] = y2;
        auto it = out.find(nk);
        if (it == out.end()) out.emplace(nk, v * cf);
        else it->second += v * cf;
      }
    return out;
  };
  for (int a = 0; a < deg; ++a)
    for (int b = 0; b < deg; ++b)
      for (int d = 0; d < deg; ++d) {
        Combo start;
        start[{a, b, d}] = CycloNumber::one(m.modulus());
        Combo lhs = apply(apply(apply(start, 0), 1), 0);
        Combo rhs = apply(apply(apply(start, 1), 0), 1);
        for (const auto& [key, v] : rhs) {
          auto it = lhs.find(key);
          if (it == lhs.end()) lhs.emplace(key, -v);
          else it->second -= v;
        }
        for (const auto& [key, v] : lhs)
          if (!v.is_zero()) return false;
      }
  return true;
}

}  // namespace nichols::testing
