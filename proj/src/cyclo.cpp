#include "nichols/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nichols {

// ---------------------------------------------------------- RootOfUnity

RootOfUnity RootOfUnity::zeta(long long n, long long k) {
  if (n < 1) throw spec_error("root of unity needs modulus >= 1");
  k %= n;
  if (k < 0) k += n;
  long long g = std::gcd(k, n);
  if (k == 0) return {0, 1};
  return {k / g, n / g};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
  long long d = std::lcm(den, o.den);
  return zeta(d, num * (d / den) + o.num * (d / o.den));
}

RootOfUnity RootOfUnity::divide(const RootOfUnity& o) const { return times(o.inverse()); }

RootOfUnity RootOfUnity::pow(long long e) const {
  long long r = (num % den) * (e % den) % den;
  return zeta(den, r);
}

RootOfUnity RootOfUnity::inverse() const { return zeta(den, -num); }

std::string RootOfUnity::str() const {
  return "zeta(" + std::to_string(den) + ")^" + std::to_string(num);
}

std::string RootOfUnity::pretty() const {
  if (is_one()) return "1";
  if (is_minus_one()) return "-1";
  if (den == 4 && num == 1) return "i";
  if (den == 4 && num == 3) return "-i";
  return str();
}

int order_of(const RootOfUnity& q) { return q.order(); }

// -------------------------------------------------- cyclotomic polynomials

namespace {

using IPoly = std::vector<long long>;

// quotient of exact division a / b over the integers (b monic)
IPoly ipoly_div_exact(IPoly a, const IPoly& b) {
  IPoly q(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    long long c = a[i + b.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (long long c : a)
    if (c != 0) throw spec_error("inexact cyclotomic division");
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw spec_error("cyclotomic polynomial needs n >= 1");
  static std::map<int, IPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // fill divisors of n in ascending order: Phi_d = (x^d - 1) / prod Phi_e, e|d, e<d
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    IPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) f = ipoly_div_exact(f, cache.at(e));
    cache[d] = std::move(f);
  }
  return cache.at(n);
}

namespace {

// remainder of p modulo the (monic, integer) n-th cyclotomic polynomial
std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> p, int n) {
  const IPoly& phi = cyclotomic_polynomial(n);
  int dphi = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= dphi; --i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (int j = 0; j <= dphi; ++j) p[i - dphi + j] -= c * phi[j];
  }
  p.resize(dphi);
  return p;
}

}  // namespace

// ----------------------------------------------------------- CycloNumber

CycloNumber CycloNumber::zero(int modulus) {
  CycloNumber c;
  c.modulus_ = modulus;
  c.coeff_.assign(modulus, Rational(0));
  return c;
}

CycloNumber CycloNumber::one(int modulus) { return from_rational(modulus, Rational(1)); }

CycloNumber CycloNumber::from_rational(int modulus, const Rational& v) {
  CycloNumber c = zero(modulus);
  c.coeff_[0] = v;
  return c;
}

CycloNumber CycloNumber::root(int modulus, long long k) {
  CycloNumber c = zero(modulus);
  k %= modulus;
  if (k < 0) k += modulus;
  c.coeff_[static_cast<size_t>(k)] = 1;
  return c;
}

CycloNumber CycloNumber::from_rou(const RootOfUnity& q, int modulus) {
  if (modulus % q.den != 0)
    throw spec_error("root of unity " + q.str() + " does not lie in Q(zeta_" +
                     std::to_string(modulus) + ")");
  return root(modulus, q.num * (modulus / q.den));
}

void CycloNumber::check_same_modulus(const CycloNumber& o) const {
  if (modulus_ != o.modulus_)
    throw spec_error("cyclotomic modulus mismatch: " + std::to_string(modulus_) + " vs " +
                     std::to_string(o.modulus_));
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  check_same_modulus(o);
  CycloNumber r = *this;
  for (int i = 0; i < modulus_; ++i) r.coeff_[i] += o.coeff_[i];
  return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
  check_same_modulus(o);
  CycloNumber r = *this;
  for (int i = 0; i < modulus_; ++i) r.coeff_[i] -= o.coeff_[i];
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_same_modulus(o);
  for (int i = 0; i < modulus_; ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_same_modulus(o);
  for (int i = 0; i < modulus_; ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  check_same_modulus(o);
  CycloNumber r = zero(modulus_);
  for (int i = 0; i < modulus_; ++i) {
    if (coeff_[i] == 0) continue;
    for (int j = 0; j < modulus_; ++j) {
      if (o.coeff_[j] == 0) continue;
      int k = i + j;
      if (k >= modulus_) k -= modulus_;
      r.coeff_[k] += coeff_[i] * o.coeff_[j];
    }
  }
  return r;
}

CycloNumber CycloNumber::scaled(const Rational& c) const {
  CycloNumber r = *this;
  for (auto& x : r.coeff_) x *= c;
  return r;
}

CycloNumber CycloNumber::conj() const {
  CycloNumber r = zero(modulus_);
  for (int i = 0; i < modulus_; ++i) r.coeff_[(modulus_ - i) % modulus_] = coeff_[i];
  return r;
}

std::vector<Rational> CycloNumber::reduced() const {
  return reduce_mod_cyclotomic(coeff_, modulus_);
}

bool CycloNumber::is_zero() const {
  for (const auto& c : reduced())
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_one() const { return (*this - one(modulus_)).is_zero(); }

bool operator==(const CycloNumber& a, const CycloNumber& b) { return (a - b).is_zero(); }
bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

namespace {

// extended Euclid over Q[x]: returns (g, u) with u*a + v*phi = g, g a gcd
std::pair<std::vector<Rational>, std::vector<Rational>> poly_half_ext_gcd(
    std::vector<Rational> a, std::vector<Rational> b) {
  auto deg = [](const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  std::vector<Rational> u0{Rational(1)}, u1{};
  while (deg(b) >= 0) {
    int da = deg(a), db = deg(b);
    if (da < db) {
      std::swap(a, b);
      std::swap(u0, u1);
      continue;
    }
    // a -= (lead(a)/lead(b)) x^{da-db} * b ; same on u0
    Rational f = a[da] / b[db];
    int shift = da - db;
    for (int j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    if (u0.size() < u1.size() + shift + 1) u0.resize(u1.size() + shift + 1, Rational(0));
    for (size_t j = 0; j < u1.size(); ++j) u0[shift + j] -= f * u1[j];
    if (deg(a) < deg(b)) {
      std::swap(a, b);
      std::swap(u0, u1);
    }
  }
  return {a, u0};
}

}  // namespace

CycloNumber CycloNumber::inverse() const {
  std::vector<Rational> r = reduced();
  bool zero_ = true;
  for (const auto& c : r)
    if (c != 0) zero_ = false;
  if (zero_) throw spec_error("division by zero in Q(zeta_" + std::to_string(modulus_) + ")");
  const IPoly& phi = cyclotomic_polynomial(modulus_);
  std::vector<Rational> phi_q(phi.begin(), phi.end());
  auto [g, u] = poly_half_ext_gcd(r, phi_q);
  // g = u*r + v*phi must be a nonzero constant
  int dg = -1;
  for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i)
    if (g[i] != 0) {
      dg = i;
      break;
    }
  if (dg != 0) throw spec_error("cyclotomic inverse failed (non-constant gcd)");
  CycloNumber out = zero(modulus_);
  for (size_t i = 0; i < u.size() && i < static_cast<size_t>(modulus_); ++i)
    out.coeff_[i] = u[i] / g[0];
  return out;
}

CycloNumber CycloNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber acc = one(modulus_);
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<Rational> CycloNumber::rational_value() const {
  auto r = reduced();
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r.empty() ? Rational(0) : r[0];
}

std::optional<RootOfUnity> CycloNumber::as_root_of_unity() const {
  for (int k = 0; k < modulus_; ++k)
    if (*this == root(modulus_, k)) return RootOfUnity::zeta(modulus_, k);
  return std::nullopt;
}

CycloNumber CycloNumber::lifted_to(int new_modulus) const {
  if (new_modulus == modulus_) return *this;
  if (new_modulus % modulus_ != 0)
    throw spec_error("cannot lift Q(zeta_" + std::to_string(modulus_) + ") into Q(zeta_" +
                     std::to_string(new_modulus) + ")");
  int f = new_modulus / modulus_;
  CycloNumber out = zero(new_modulus);
  for (int i = 0; i < modulus_; ++i) out.coeff_[static_cast<size_t>(i) * f] = coeff_[i];
  return out;
}

std::string CycloNumber::str() const {
  auto r = reduced();
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (any) os << (r[i] > 0 ? " + " : " - ");
    else if (r[i] < 0) os << "-";
    Rational mag = r[i] > 0 ? r[i] : Rational(-r[i]);
    if (i == 0 || mag != 1) os << mag.str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "zeta(" << modulus_ << ")";
      if (i > 1) os << "^" << i;
    }
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

// ----------------------------------------------------------- CycloMatrix

CycloMatrix CycloMatrix::zero(int modulus, int rows, int cols) {
  CycloMatrix m;
  m.modulus = modulus;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, CycloNumber::zero(modulus));
  return m;
}

CycloMatrix CycloMatrix::identity(int modulus, int n) {
  CycloMatrix m = zero(modulus, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycloNumber::one(modulus);
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols != o.rows || modulus != o.modulus) throw spec_error("matrix product shape mismatch");
  CycloMatrix r = zero(modulus, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
  if (rows != o.rows || cols != o.cols || modulus != o.modulus)
    throw spec_error("matrix sum shape mismatch");
  CycloMatrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
  if (rows != o.rows || cols != o.cols || modulus != o.modulus)
    throw spec_error("matrix difference shape mismatch");
  CycloMatrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

CycloVector CycloMatrix::apply(const CycloVector& v) const {
  if (static_cast<int>(v.size()) != cols) throw spec_error("matrix apply shape mismatch");
  CycloVector r(rows, CycloNumber::zero(modulus));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

CycloMatrix CycloMatrix::lifted_to(int new_modulus) const {
  CycloMatrix r = zero(new_modulus, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i].lifted_to(new_modulus);
  return r;
}

bool CycloMatrix::is_identity() const {
  if (rows != cols) return false;
  return *this == identity(modulus, rows);
}

bool CycloMatrix::is_scalar(CycloNumber* value) const {
  if (rows != cols || rows == 0) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i == j) {
        if (at(i, i) != at(0, 0)) return false;
      } else if (!at(i, j).is_zero()) {
        return false;
      }
    }
  if (value) *value = at(0, 0);
  return true;
}

bool operator==(const CycloMatrix& x, const CycloMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.modulus != y.modulus) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

std::string CycloMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

int matrix_order(const CycloMatrix& m, int guard) {
  if (m.rows != m.cols) throw spec_error("order of a non-square matrix");
  CycloMatrix p = m;
  for (int k = 1; k <= guard; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  throw spec_error("matrix order exceeds guard");
}

// ------------------------------------------------------- linear algebra

namespace {

// Row-reduce in place; returns pivot columns. Augmented columns beyond
// `lead_cols` participate in elimination but never host pivots.
std::vector<int> row_reduce(CycloMatrix& m, int lead_cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < lead_cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    CycloNumber inv = m.at(row, col).inverse();
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      CycloNumber f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

CycloVector normalized(CycloVector v) {
  for (const auto& c : v) {
    if (!c.is_zero()) {
      CycloNumber inv = c.inverse();
      for (auto& x : v) x = x * inv;
      break;
    }
  }
  return v;
}

}  // namespace

int rank(CycloMatrix m) { return static_cast<int>(row_reduce(m, m.cols).size()); }

std::vector<CycloVector> kernel(const CycloMatrix& m_in) {
  CycloMatrix m = m_in;
  std::vector<int> pivots = row_reduce(m, m.cols);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<CycloVector> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    CycloVector v(m.cols, CycloNumber::zero(m.modulus));
    v[free] = CycloNumber::one(m.modulus);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(normalized(std::move(v)));
  }
  return basis;
}

std::vector<std::pair<RootOfUnity, std::vector<CycloVector>>> eigenspaces(const CycloMatrix& m,
                                                                          int order) {
  if (m.rows != m.cols) throw spec_error("eigenspaces of a non-square matrix");
  int L = static_cast<int>(std::lcm(m.modulus, order));
  CycloMatrix ml = m.lifted_to(L);
  {
    CycloMatrix p = CycloMatrix::identity(L, m.rows);
    for (int k = 0; k < order; ++k) p = p * ml;
    if (!p.is_identity())
      throw spec_error("matrix order does not divide " + std::to_string(order));
  }
  std::vector<std::pair<RootOfUnity, std::vector<CycloVector>>> out;
  int total = 0;
  for (int t = 0; t < order; ++t) {
    CycloMatrix shifted = ml;
    CycloNumber ev = CycloNumber::from_rou(RootOfUnity::zeta(order, t), L);
    for (int i = 0; i < m.rows; ++i) shifted.at(i, i) -= ev;
    auto basis = kernel(shifted);
    if (!basis.empty()) {
      total += static_cast<int>(basis.size());
      out.emplace_back(RootOfUnity::zeta(order, t), std::move(basis));
    }
  }
  if (total != m.rows) throw spec_error("eigenspaces do not span (matrix not semisimple?)");
  return out;
}

std::vector<SimultaneousEigenvector> simultaneous_eigenbasis(std::vector<CycloMatrix> mats) {
  if (mats.empty()) throw spec_error("simultaneous_eigenbasis needs at least one matrix");
  int dim = mats[0].rows;
  long long L = 1;
  std::vector<int> orders;
  for (auto& m : mats) {
    if (m.rows != m.cols || m.rows != dim)
      throw spec_error("simultaneous_eigenbasis shape mismatch");
    L = std::lcm(L, static_cast<long long>(m.modulus));
  }
  for (auto& m : mats) m = m.lifted_to(static_cast<int>(L));
  for (auto& m : mats) {
    int o = matrix_order(m);
    orders.push_back(o);
    L = std::lcm(L, static_cast<long long>(o));
  }
  int Li = static_cast<int>(L);
  for (auto& m : mats) m = m.lifted_to(Li);
  for (size_t i = 0; i < mats.size(); ++i)
    for (size_t j = i + 1; j < mats.size(); ++j)
      if (!(mats[i] * mats[j] == mats[j] * mats[i]))
        throw spec_error("simultaneous_eigenbasis requires commuting matrices");

  struct Space {
    std::vector<CycloVector> basis;  // ambient coordinates
    std::vector<RootOfUnity> eigs;
  };
  std::vector<Space> spaces;
  {
    Space full;
    for (int i = 0; i < dim; ++i) {
      CycloVector e(dim, CycloNumber::zero(Li));
      e[i] = CycloNumber::one(Li);
      full.basis.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }

  for (size_t mi = 0; mi < mats.size(); ++mi) {
    const CycloMatrix& M = mats[mi];
    std::vector<Space> next;
    for (auto& sp : spaces) {
      int sdim = static_cast<int>(sp.basis.size());
      // restricted matrix X with M*B = B*X, solved from the row-reduced
      // augmented system [B | M*B]
      CycloMatrix aug = CycloMatrix::zero(Li, dim, 2 * sdim);
      for (int j = 0; j < sdim; ++j) {
        CycloVector mb = M.apply(sp.basis[j]);
        for (int i = 0; i < dim; ++i) {
          aug.at(i, j) = sp.basis[j][i];
          aug.at(i, sdim + j) = mb[i];
        }
      }
      auto pivots = row_reduce(aug, sdim);
      if (static_cast<int>(pivots.size()) != sdim)
        throw spec_error("invariant subspace basis is degenerate");
      CycloMatrix X = CycloMatrix::zero(Li, sdim, sdim);
      for (int i = 0; i < sdim; ++i)
        for (int j = 0; j < sdim; ++j) X.at(i, j) = aug.at(i, sdim + j);
      int total = 0;
      for (int t = 0; t < orders[mi]; ++t) {
        RootOfUnity lambda = RootOfUnity::zeta(orders[mi], t);
        CycloMatrix shifted = X;
        CycloNumber ev = CycloNumber::from_rou(lambda, Li);
        for (int i = 0; i < sdim; ++i) shifted.at(i, i) -= ev;
        auto ker = kernel(shifted);
        if (ker.empty()) continue;
        total += static_cast<int>(ker.size());
        Space child;
        child.eigs = sp.eigs;
        child.eigs.push_back(lambda);
        for (const auto& kv : ker) {
          CycloVector lifted(dim, CycloNumber::zero(Li));
          for (int j = 0; j < sdim; ++j)
            for (int i = 0; i < dim; ++i) lifted[i] += sp.basis[j][i] * kv[j];
          child.basis.push_back(normalized(std::move(lifted)));
        }
        next.push_back(std::move(child));
      }
      if (total != sdim)
        throw spec_error("commuting family is not simultaneously diagonalizable");
    }
    spaces = std::move(next);
  }

  std::vector<SimultaneousEigenvector> out;
  for (auto& sp : spaces)
    for (auto& v : sp.basis) out.push_back({std::move(v), sp.eigs});
  return out;
}

}  // namespace nichols
