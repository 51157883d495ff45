#include "nichols/class_analysis.hpp"

#include <numeric>

namespace nichols {

RealityReport reality_report(const FiniteGroup& G, const GroupElement& s) {
  if (!G.contains(s)) throw spec_error("reality_report: element not in group");
  RealityReport r;
  GroupElement sinv = G.inverse(s);
  for (const auto& g : G.elements()) {
    if (G.conjugate(g, s) != sinv) continue;
    if (!r.is_real) {
      r.is_real = true;
      r.inverting_witness = g;
    }
    if (G.multiply(g, g) == G.identity()) {
      r.is_absolutely_real = true;
      r.involution_witness = g;
      break;
    }
  }
  return r;
}

Perm an_inverting_involution(int j) {
  if (j < 2) throw spec_error("an_inverting_involution requires j >= 2");
  Perm g = Perm::identity(j);
  int k = j / 2;
  // (1 j-1)(2 j-2)...; last factor (k-1 k+1) for even j, (k k+1) for odd j
  int last = (j % 2 == 0) ? k - 1 : k;
  for (int i = 1; i <= last; ++i) std::swap(g.img[i - 1], g.img[j - i - 1]);
  return g;
}

int an_inverting_involution_sign(int j) {
  if (j < 2) throw spec_error("an_inverting_involution_sign requires j >= 2");
  int k = j / 2;
  if (j % 2 == 0) return (k - 1) % 2 == 0 ? 1 : -1;
  return k % 2 == 0 ? 1 : -1;
}

bool type_implies_absolutely_real(const CycleType& t) {
  if (t.counts.size() > 1 && t.counts[1] >= 2) return true;
  int total = 0;
  for (size_t j = 3; j < t.counts.size(); ++j)
    if (j % 4 == 0 || j % 4 == 3) total += t.counts[j];
  return total % 2 == 0;
}

bool an_class_splits(const CycleType& t) {
  if (!t.even()) throw spec_error("an_class_splits requires an even cycle type");
  if (t.counts.size() > 1 && t.counts[1] > 1) return false;
  for (size_t j = 2; j < t.counts.size(); ++j) {
    if (j % 2 == 0 && t.counts[j] != 0) return false;
    if (j % 2 == 1 && t.counts[j] > 1) return false;
  }
  return true;
}

std::vector<PowerWitness> power_witnesses(const FiniteGroup& G, const ConjugacyClass& O) {
  const GroupElement& s = O.base();
  int ord = G.element_order(s);
  std::vector<PowerWitness> out;
  for (int j = 2; j < ord; ++j) {
    if (std::gcd(j, ord) != 1) continue;
    GroupElement sj = G.power(s, j);
    if (!O.contains(sj) || sj == s) continue;
    PowerWitness w;
    w.j = j;
    GroupElement sj2 = G.power(s, static_cast<long long>(j) * j);
    w.square_returns = (sj2 == s);
    w.distinct3 = !w.square_returns && sj2 != sj;
    bool found = false;
    for (const auto& g : G.elements()) {
      if (G.conjugate(g, s) == sj) {
        w.sigma = g;
        found = true;
        break;
      }
    }
    if (!found) throw spec_error("power witness without conjugator (class not closed?)");
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace nichols
