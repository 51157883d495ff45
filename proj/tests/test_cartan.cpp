#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "support.hpp"

using namespace nichols;
using namespace nichols::testing;

namespace {

QMatrix qmat(int theta, std::initializer_list<RootOfUnity> entries) {
  QMatrix Q;
  Q.theta = theta;
  Q.q.assign(entries.begin(), entries.end());
  for (int i = 0; i < theta; ++i) Q.subrack.push_back(i);
  return Q;
}

const RootOfUnity kOne = RootOfUnity::one();
const RootOfUnity kMinus = RootOfUnity::minus_one();

// enumerate all generalized Cartan matrices of the given rank with
// off-diagonal entries in [-3, 0], honoring a_ij = 0 iff a_ji = 0
void for_each_gcm(int theta, const std::function<void(const CartanMatrix&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < theta; ++i)
    for (int j = i + 1; j < theta; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<int, int>> choices;  // (a_ij, a_ji) options
  choices.emplace_back(0, 0);
  for (int a = -3; a <= -1; ++a)
    for (int b = -3; b <= -1; ++b) choices.emplace_back(a, b);
  std::vector<size_t> pick(pairs.size(), 0);
  while (true) {
    CartanMatrix A = CartanMatrix::make(theta);
    for (size_t k = 0; k < pairs.size(); ++k) {
      A.at(pairs[k].first, pairs[k].second) = choices[pick[k]].first;
      A.at(pairs[k].second, pairs[k].first) = choices[pick[k]].second;
    }
    fn(A);
    size_t k = pairs.size();
    bool done = pairs.empty();
    while (k > 0) {
      --k;
      if (++pick[k] < choices.size()) break;
      pick[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
}

}  // namespace

TEST_CASE("exponent search on the worked examples") {
  auto r1 = cartan_from_q(qmat(2, {kMinus, kMinus, kOne, kMinus}));
  REQUIRE(r1.kind == CartanResult::Kind::Cartan);
  CHECK(r1.matrix->at(0, 1) == -1);
  CHECK(r1.matrix->at(1, 0) == -1);
  auto ft1 = is_finite_type(*r1.matrix);
  CHECK(ft1.finite);
  CHECK(ft1.components == std::vector<std::string>{"A2"});

  // the sign pattern of the Klein-class braiding: every off pair multiplies to -1
  auto r2 = cartan_from_q(qmat(3, {kMinus, kMinus, kOne,    //
                                   kOne, kMinus, kMinus,    //
                                   kMinus, kOne, kMinus}));
  REQUIRE(r2.kind == CartanResult::Kind::Cartan);
  CartanMatrix want = CartanMatrix::make(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) want.at(i, j) = -1;
  CHECK(*r2.matrix == want);
  CHECK(!is_finite_type(want).finite);

  auto r3 = cartan_from_q(qmat(1, {kOne}));
  CHECK(r3.kind == CartanResult::Kind::InfiniteImmediately);

  // q_12 q_21 outside the cyclic group of q_11
  auto r4 = cartan_from_q(qmat(2, {kMinus, RootOfUnity::zeta(3, 1), kOne, kMinus}));
  CHECK(r4.kind == CartanResult::Kind::NotCartanType);

  // disconnected pair: exponent 0
  auto r5 = cartan_from_q(qmat(2, {kMinus, kMinus, kMinus, kMinus}));
  REQUIRE(r5.kind == CartanResult::Kind::Cartan);
  CHECK(r5.matrix->at(0, 1) == 0);
  auto ft5 = is_finite_type(*r5.matrix);
  CHECK(ft5.finite);
  CHECK(ft5.components == std::vector<std::string>{"A1", "A1"});
}

TEST_CASE("resubstitution: q_ii^{a_ij} = q_ij q_ji on every returned matrix") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int theta = 2 + static_cast<int>(rng() % 2);
    QMatrix Q;
    Q.theta = theta;
    for (int k = 0; k < theta * theta; ++k)
      Q.q.push_back(RootOfUnity::zeta(1 + rng() % 6, rng() % 6));
    auto r = cartan_from_q(Q);
    if (r.kind != CartanResult::Kind::Cartan) continue;
    for (int i = 0; i < theta; ++i)
      for (int j = 0; j < theta; ++j) {
        if (i == j) continue;
        CHECK(Q.at(i, i).pow(r.matrix->at(i, j)) == Q.at(i, j).times(Q.at(j, i)));
      }
  }
}

TEST_CASE("named finite types recognized") {
  auto path = [](int n, int heavy_at = -1, int heavy_val = -2, bool flip = false) {
    CartanMatrix A = CartanMatrix::make(n);
    for (int i = 0; i + 1 < n; ++i) {
      A.at(i, i + 1) = -1;
      A.at(i + 1, i) = -1;
    }
    if (heavy_at >= 0) {
      if (!flip) A.at(heavy_at, heavy_at + 1) = heavy_val;
      else A.at(heavy_at + 1, heavy_at) = heavy_val;
    }
    return A;
  };
  CHECK(is_finite_type(path(1)).components == std::vector<std::string>{"A1"});
  CHECK(is_finite_type(path(4)).components == std::vector<std::string>{"A4"});
  CHECK(is_finite_type(path(2, 0, -3)).components == std::vector<std::string>{"G2"});
  CHECK(is_finite_type(path(3, 1, -2)).finite);   // B3 or C3
  CHECK(is_finite_type(path(4, 1, -2)).components == std::vector<std::string>{"F4"});
  CHECK(!is_finite_type(path(5, 2, -2)).finite);  // heavy edge strictly inside a 5-path

  // D4: star with three arms
  CartanMatrix D4 = CartanMatrix::make(4);
  for (int leaf : {1, 2, 3}) {
    D4.at(0, leaf) = -1;
    D4.at(leaf, 0) = -1;
  }
  CHECK(is_finite_type(D4).components == std::vector<std::string>{"D4"});

  // the all-(-1) four-point matrix is not of finite type
  CartanMatrix K4 = CartanMatrix::make(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) K4.at(i, j) = -1;
  CHECK(!is_finite_type(K4).finite);
}

TEST_CASE("classifier agrees with the principal-minor oracle, rank <= 3 exhaustive") {
  for (int theta = 1; theta <= 3; ++theta) {
    long long count = 0;
    for_each_gcm(theta, [&](const CartanMatrix& A) {
      ++count;
      CHECK(is_finite_type(A).finite == finite_by_minors(A));
    });
    if (theta == 3) CHECK(count == 1000);
  }
}

TEST_CASE("classifier agrees with the principal-minor oracle, rank 4 randomized") {
  std::mt19937 rng(2024);
  std::vector<std::pair<int, int>> choices;
  choices.emplace_back(0, 0);
  for (int a = -3; a <= -1; ++a)
    for (int b = -3; b <= -1; ++b) choices.emplace_back(a, b);
  for (int trial = 0; trial < 10000; ++trial) {
    CartanMatrix A = CartanMatrix::make(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        auto [a, b] = choices[rng() % choices.size()];
        A.at(i, j) = a;
        A.at(j, i) = b;
      }
    CHECK(is_finite_type(A).finite == finite_by_minors(A));
  }
}

TEST_CASE("symmetrizer ranks of the small braidings") {
  auto h1 = nichols_hilbert_prefix(qmat(1, {kMinus}), 3);
  CHECK(h1.dims == std::vector<long long>{1, 1, 0});
  CHECK(h1.terminated());
  CHECK(h1.total() == 2);

  // rank-2 with q_12 q_21 = 1: the four-dimensional algebra
  auto i = RootOfUnity::zeta(4, 1);
  auto h2 = nichols_hilbert_prefix(qmat(2, {kMinus, i, i.inverse(), kMinus}), 4);
  CHECK(h2.dims == std::vector<long long>{1, 2, 1, 0});
  CHECK(h2.total() == 4);

  // flip braidings give binomial coefficients
  auto h3 = nichols_hilbert_prefix(
      qmat(3, {kMinus, kMinus, kMinus, kMinus, kMinus, kMinus, kMinus, kMinus, kMinus}), 4);
  CHECK(h3.dims == std::vector<long long>{1, 3, 3, 1, 0});
  CHECK(h3.total() == 8);

  // a polynomial point never terminates
  auto h4 = nichols_hilbert_prefix(qmat(1, {kOne}), 5);
  CHECK(h4.dims == std::vector<long long>{1, 1, 1, 1, 1, 1});
  CHECK(!h4.terminated());

  // a point of order three: truncated at height three
  auto h5 = nichols_hilbert_prefix(qmat(1, {RootOfUnity::zeta(3, 1)}), 4);
  CHECK(h5.dims == std::vector<long long>{1, 1, 1, 0});

  // connected rank-2 with q_12 q_21 = q_ii^{-1}: three root vectors of
  // height 2 each, series (1+t)^2 (1+t^2)
  auto h6 = nichols_hilbert_prefix(qmat(2, {kMinus, kMinus, kOne, kMinus}), 5);
  CHECK(h6.dims == std::vector<long long>{1, 2, 2, 2, 1, 0});
  CHECK(h6.total() == 8);
}

TEST_CASE("symmetrizer rank is invariant under permuting the points") {
  auto q = RootOfUnity::zeta(8, 1);
  QMatrix Q = qmat(2, {kMinus, q, q.inverse(), RootOfUnity::zeta(4, 1)});
  QMatrix P = qmat(2, {RootOfUnity::zeta(4, 1), q.inverse(), q, kMinus});
  auto hq = nichols_hilbert_prefix(Q, 4);
  auto hp = nichols_hilbert_prefix(P, 4);
  CHECK(hq.dims == hp.dims);
}

TEST_CASE("symmetrizer budget") {
  QMatrix big = qmat(2, {kMinus, kOne, kOne, kMinus});
  CHECK_THROWS_AS(nichols_hilbert_prefix(big, 20, 1000), budget_error);
}
