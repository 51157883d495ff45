#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "nichols/reps.hpp"

using namespace nichols;

namespace {

bool orthogonal(const Irrep& a, const Irrep& b) {
  int N = std::lcm(a.modulus(), b.modulus());
  CycloNumber sum = CycloNumber::zero(N);
  for (const auto& g : a.domain().elems)
    sum += a.character(g).lifted_to(N) * b.character(g).lifted_to(N).conj();
  return sum.is_zero();
}

}  // namespace

TEST_CASE("characters of a cyclic centralizer") {
  auto A6 = parse_group("An:6");
  auto pi = A6.parse("(1 2)(3 4 5 6)");
  auto cent = centralizer(A6, pi);
  REQUIRE(cent.label == "Z4");
  auto chars = abelian_irreps(cent);
  REQUIRE(chars.size() == 4);
  // chi_l(pi) = i^l
  for (int l = 0; l < 4; ++l) {
    CHECK(chars[l].label() == "chi:" + std::to_string(l));
    CHECK(schur_scalar(chars[l], pi) == RootOfUnity::zeta(4, l));
  }
}

TEST_CASE("characters of a Klein four centralizer") {
  auto A4 = parse_group("An:4");
  auto pi = A4.parse("(1 2)(3 4)");
  auto cent = centralizer(A4, pi);
  auto chars = abelian_irreps(cent);
  REQUIRE(chars.size() == 4);
  std::set<std::string> labels;
  for (const auto& c : chars) labels.insert(c.label());
  std::set<std::string> want{"eps⊗eps", "eps⊗sgn", "sgn⊗eps", "sgn⊗sgn"};
  CHECK(labels == want);
  for (const auto& c : chars) {
    RootOfUnity q = schur_scalar(c, pi);
    bool sgn_first = c.label().rfind("sgn", 0) == 0;
    CHECK(q == (sgn_first ? RootOfUnity::minus_one() : RootOfUnity::one()));
  }
}

TEST_CASE("trivial group has only the trivial character") {
  auto Z1 = parse_group("Zn:1");
  auto cent = centralizer(Z1, Z1.identity());
  auto chars = abelian_irreps(cent);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].label() == "eps");
  CHECK(schur_scalar(chars[0], Z1.identity()) == RootOfUnity::one());
}

TEST_CASE("built-in table of the order-8 dihedral centralizer") {
  auto A6 = parse_group("An:6");
  auto pi = A6.parse("(1 2)(3 4)");
  auto cent = centralizer(A6, pi);
  REQUIRE(cent.label == "D4");
  auto irreps = builtin_irreps(cent);
  REQUIRE(irreps.size() == 5);
  std::vector<int> degrees;
  for (const auto& r : irreps) degrees.push_back(r.degree());
  CHECK(degrees == std::vector<int>{1, 1, 1, 1, 2});

  auto gens = dihedral_generators(cent);
  REQUIRE(gens.has_value());
  auto [a, b] = *gens;
  // character values on (a, b): (1,1), (-1,1), (1,-1), (-1,-1)
  auto val = [](const Irrep& r, const GroupElement& g) {
    return *r.at(g).at(0, 0).as_root_of_unity();
  };
  CHECK(val(irreps[0], a) == RootOfUnity::one());
  CHECK(val(irreps[0], b) == RootOfUnity::one());
  CHECK(val(irreps[1], a) == RootOfUnity::minus_one());
  CHECK(val(irreps[1], b) == RootOfUnity::one());
  CHECK(val(irreps[2], a) == RootOfUnity::one());
  CHECK(val(irreps[2], b) == RootOfUnity::minus_one());
  CHECK(val(irreps[3], a) == RootOfUnity::minus_one());
  CHECK(val(irreps[3], b) == RootOfUnity::minus_one());

  // the two-dimensional one: rho(a) = [[0,1],[1,0]], rho(b) = diag(i, -i)
  const Irrep& rho5 = irreps[4];
  CHECK(rho5.at(a).at(0, 1).is_one());
  CHECK(rho5.at(a).at(1, 0).is_one());
  CHECK(rho5.at(a).at(0, 0).is_zero());
  CHECK(rho5.at(b).at(0, 0) == CycloNumber::root(4, 1));
  CHECK(rho5.at(b).at(1, 1) == CycloNumber::root(4, 3));

  // pi = b^2 acts by -Id in rho5 and by 1 in every character
  CHECK(schur_scalar(rho5, pi) == RootOfUnity::minus_one());
  for (int k = 0; k < 4; ++k) CHECK(schur_scalar(irreps[k], pi) == RootOfUnity::one());
}

TEST_CASE("dihedral table of the full group, used for central classes") {
  auto D6 = parse_group("Dn:6");
  auto cent = centralizer(D6, D6.parse("y^3"));
  REQUIRE(cent.label == "D6");
  auto irreps = builtin_irreps(cent);
  REQUIRE(irreps.size() == 6);  // 4 characters + 2 two-dimensional
  long long sum_sq = 0;
  for (const auto& r : irreps) sum_sq += static_cast<long long>(r.degree()) * r.degree();
  CHECK(sum_sq == 12);
  // rho(y^3) = -Id exactly for the k = 1 two-dimensional representation
  auto y3 = D6.parse("y^3");
  std::vector<RootOfUnity> scalars;
  for (const auto& r : irreps) scalars.push_back(schur_scalar(r, y3));
  CHECK(scalars[4] == RootOfUnity::minus_one());  // rho:5, k = 1
  CHECK(scalars[5] == RootOfUnity::one());        // rho:6, k = 2
}

TEST_CASE("character orthogonality") {
  auto D8 = parse_group("Dn:8");
  auto cent = centralizer(D8, D8.parse("y"));  // Z8
  auto chars = abelian_irreps(cent);
  for (size_t i = 0; i < chars.size(); ++i)
    for (size_t j = i + 1; j < chars.size(); ++j) CHECK(orthogonal(chars[i], chars[j]));

  auto A6 = parse_group("An:6");
  auto d4 = centralizer(A6, A6.parse("(1 2)(3 4)"));
  auto irreps = builtin_irreps(d4);
  for (size_t i = 0; i < irreps.size(); ++i)
    for (size_t j = i + 1; j < irreps.size(); ++j) CHECK(orthogonal(irreps[i], irreps[j]));
}

TEST_CASE("schur scalar has order dividing the element order") {
  auto D12 = parse_group("Dn:12");
  for (const auto& cls : all_conjugacy_classes(D12)) {
    auto cent = centralizer(D12, cls.base());
    if (!centralizer_irreps_available(cent)) continue;
    for (const auto& rho : centralizer_irreps(cent)) {
      RootOfUnity q = schur_scalar(rho, cls.base());
      int ord = D12.element_order(cls.base());
      CHECK(q.pow(ord) == RootOfUnity::one());
    }
  }
}

TEST_CASE("schur scalar rejects non-central elements") {
  auto A6 = parse_group("An:6");
  auto cent = centralizer(A6, A6.parse("(1 2)(3 4)"));
  auto irreps = builtin_irreps(cent);
  auto gens = dihedral_generators(cent);
  // a is not central in the order-8 dihedral group
  CHECK_THROWS_AS(schur_scalar(irreps[4], gens->first), spec_error);
}

TEST_CASE("conjugating a rotation character by a reflection inverts it") {
  auto D5 = parse_group("Dn:5");
  auto cent = centralizer(D5, D5.parse("y"));  // <y> = Z5
  auto chars = abelian_irreps(cent);
  auto x = D5.parse("x");
  for (int l = 0; l < 5; ++l) {
    Irrep bar = conjugate_rep(chars[l], x);
    // chi_l conjugated by x is chi_{-l}
    CHECK(irreps_isomorphic(bar, chars[(5 - l) % 5]));
  }
}

TEST_CASE("conjugation by an element of the domain is inner") {
  auto A4 = parse_group("An:4");
  auto cent = centralizer(A4, A4.parse("(1 2)(3 4)"));
  auto chars = abelian_irreps(cent);
  for (const auto& c : chars)
    CHECK(irreps_isomorphic(c, conjugate_rep(c, cent.elems[2])));
}

TEST_CASE("conjugating the Klein characters by a 3-cycle permutes them") {
  auto A4 = parse_group("An:4");
  auto cent = centralizer(A4, A4.parse("(1 2)(3 4)"));
  auto chars = abelian_irreps(cent);
  auto g = A4.parse("(1 3 2)");
  // (1 3 2) normalizes the Klein subgroup and permutes t_1, t_2, t_3
  std::set<std::string> before, after;
  for (const auto& c : chars) {
    before.insert(c.label());
    Irrep bar = conjugate_rep(c, g);
    bool found = false;
    for (const auto& d : chars)
      if (irreps_isomorphic(bar, d)) {
        found = true;
        after.insert(d.label());
      }
    CHECK(found);
  }
  CHECK(before == after);
  // sgn(x)eps moves to a different character under this conjugation
  Irrep moved = conjugate_rep(chars[2], g);
  CHECK(!irreps_isomorphic(moved, chars[2]));
}

TEST_CASE("index-2 bookkeeping along the symmetric-group centralizer") {
  auto S5 = parse_group("Sn:5");
  auto pi = S5.parse("(1 2)(3 4)");
  auto centS = centralizer(S5, pi);
  REQUIRE(centS.order() == 8);
  REQUIRE(centS.label == "D4");

  // the even part is the Klein four group, of index 2
  std::vector<GroupElement> even;
  for (const auto& g : centS.elems)
    if (g.perm().even()) even.push_back(g);
  auto centA = subgroup_from_elements(S5, even, pi);
  REQUIRE(centA.order() == 4);

  auto irreps = builtin_irreps(centS);
  // trivial character restricts irreducibly (case i)
  auto d0 = index2_decompose(irreps[0], centA);
  CHECK(d0.tag == Index2Data::Case::RestrictionIrreducible);
  REQUIRE(d0.components.size() == 1);
  CHECK(d0.components[0].degree() == 1);
  for (const auto& h : centA.elems)
    CHECK(d0.components[0].character(h).is_one());

  // the two-dimensional representation restricts as a conjugate pair (case ii)
  auto d5 = index2_decompose(irreps[4], centA);
  CHECK(d5.tag == Index2Data::Case::RestrictionSplits);
  REQUIRE(d5.components.size() == 2);
  CHECK(d5.components[0].degree() + d5.components[1].degree() == irreps[4].degree());
  CHECK(!irreps_isomorphic(d5.components[0], d5.components[1]));

  // every character of the Klein group shows up as promised: a restriction
  // from the big centralizer or a summand of one
  auto klein_chars = abelian_irreps(centA);
  for (const auto& chi : klein_chars) {
    bool found = false;
    for (const auto& eta : irreps) {
      auto d = index2_decompose(eta, centA);
      for (const auto& comp : d.components)
        if (irreps_isomorphic(comp, chi)) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("index-2 split on a dihedral two-dimensional representation") {
  auto D5 = parse_group("Dn:5");
  auto whole = centralizer(D5, D5.identity());
  REQUIRE(whole.label == "D5");
  std::vector<GroupElement> rot;
  for (const auto& g : whole.elems)
    if (g.dihedral().flip == 0) rot.push_back(g);
  auto rotations = subgroup_from_elements(D5, rot);
  auto irreps = builtin_irreps(whole);
  // rho:3 is two-dimensional; its character vanishes off the rotations
  auto d = index2_decompose(irreps[2], rotations);
  CHECK(d.tag == Index2Data::Case::RestrictionSplits);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].degree() == 1);
  // the summands are conjugate under a reflection
  CHECK(irreps_isomorphic(conjugate_rep(d.components[0], D5.parse("x")), d.components[1]));

  // the sign character of the dihedral group restricts irreducibly
  auto dsgn = index2_decompose(irreps[1], rotations);
  CHECK(dsgn.tag == Index2Data::Case::RestrictionIrreducible);
}
