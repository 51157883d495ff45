#include "nichols/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>

namespace nichols {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

int mod_pos(long long v, int m) {
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

}  // namespace

// ---------------------------------------------------------------- Perm

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool Perm::even() const {
  // parity from cycle decomposition
  int n = degree();
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Perm Perm::compose(const Perm& rhs) const {
  assert(degree() == rhs.degree());
  Perm out;
  out.img.resize(degree());
  for (int i = 0; i < degree(); ++i) out.img[i] = img[rhs.img[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img.resize(degree());
  for (int i = 0; i < degree(); ++i) out.img[img[i]] = i;
  return out;
}

Perm Perm::conjugated_by(const Perm& g) const {
  // (g p g^{-1})(g(i)) = g(p(i))
  Perm out;
  out.img.resize(degree());
  for (int i = 0; i < degree(); ++i) out.img[g.img[i]] = g.img[img[i]];
  return out;
}

// ---------------------------------------------------------- GroupElement

const Perm& GroupElement::perm() const { return std::get<Perm>(value); }
const DihedralElt& GroupElement::dihedral() const { return std::get<DihedralElt>(value); }
const CyclicElt& GroupElement::cyclic() const { return std::get<CyclicElt>(value); }
const ProductElt& GroupElement::product() const { return std::get<ProductElt>(value); }

int compare(const GroupElement& a, const GroupElement& b) {
  if (a.value.index() != b.value.index())
    return a.value.index() < b.value.index() ? -1 : 1;
  switch (a.value.index()) {
    case 0: {
      const auto& x = std::get<Perm>(a.value).img;
      const auto& y = std::get<Perm>(b.value).img;
      if (x == y) return 0;
      return x < y ? -1 : 1;
    }
    case 1: {
      const auto& x = std::get<DihedralElt>(a.value);
      const auto& y = std::get<DihedralElt>(b.value);
      if (x == y) return 0;
      return x < y ? -1 : 1;
    }
    case 2: {
      const auto& x = std::get<CyclicElt>(a.value);
      const auto& y = std::get<CyclicElt>(b.value);
      if (x == y) return 0;
      return x < y ? -1 : 1;
    }
    default: {
      const auto& x = std::get<ProductElt>(a.value).parts;
      const auto& y = std::get<ProductElt>(b.value).parts;
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (size_t i = 0; i < x.size(); ++i) {
        int c = compare(x[i], y[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
}

bool operator==(const GroupElement& a, const GroupElement& b) { return compare(a, b) == 0; }
bool operator!=(const GroupElement& a, const GroupElement& b) { return compare(a, b) != 0; }
bool operator<(const GroupElement& a, const GroupElement& b) { return compare(a, b) < 0; }

// ------------------------------------------------------------ FiniteGroup

struct FiniteGroup::Impl {
  GroupKind kind;
  int n = 0;
  std::vector<FiniteGroup> factors;
  std::string name;
  std::vector<GroupElement> elements;
  std::vector<GroupElement> generators;
  std::map<GroupElement, int> index;
};

const FiniteGroup::Impl& FiniteGroup::impl() const {
  if (!impl_) throw spec_error("uninitialized group");
  return *impl_;
}

GroupKind FiniteGroup::kind() const { return impl().kind; }
int FiniteGroup::param() const { return impl().n; }
const std::vector<FiniteGroup>& FiniteGroup::factors() const { return impl().factors; }
long long FiniteGroup::order() const { return static_cast<long long>(impl().elements.size()); }
const std::vector<GroupElement>& FiniteGroup::elements() const { return impl().elements; }
const std::vector<GroupElement>& FiniteGroup::generators() const { return impl().generators; }
const std::string& FiniteGroup::name() const { return impl().name; }

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_order_bound(long long order, long long max_order, const std::string& name) {
  if (order > max_order)
    throw budget_error("group " + name + " exceeds the enumeration bound (" +
                       std::to_string(order) + " > " + std::to_string(max_order) + ")");
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n, long long max_order) {
  if (n < 1) throw spec_error("Sn requires n >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::Sn;
  impl->n = n;
  impl->name = "Sn:" + std::to_string(n);
  check_order_bound(factorial(n), max_order, impl->name);
  Perm p = Perm::identity(n);
  do {
    impl->elements.push_back(GroupElement{p});
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  // transposition and n-cycle
  if (n >= 2) {
    Perm t = Perm::identity(n);
    std::swap(t.img[0], t.img[1]);
    impl->generators.push_back(GroupElement{t});
  }
  if (n >= 3) {
    Perm c = Perm::identity(n);
    for (int i = 0; i < n; ++i) c.img[i] = (i + 1) % n;
    impl->generators.push_back(GroupElement{c});
  }
  for (size_t i = 0; i < impl->elements.size(); ++i) impl->index[impl->elements[i]] = (int)i;
  FiniteGroup g;
  g.impl_ = impl;
  return g;
}

FiniteGroup FiniteGroup::alternating(int n, long long max_order) {
  if (n < 1) throw spec_error("An requires n >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::An;
  impl->n = n;
  impl->name = "An:" + std::to_string(n);
  check_order_bound(n >= 2 ? factorial(n) / 2 : 1, max_order, impl->name);
  Perm p = Perm::identity(n);
  do {
    if (p.even()) impl->elements.push_back(GroupElement{p});
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  if (n >= 3) {
    Perm a = Perm::identity(n);  // (1 2 3)
    a.img[0] = 1; a.img[1] = 2; a.img[2] = 0;
    impl->generators.push_back(GroupElement{a});
  }
  if (n >= 4) {
    Perm b = Perm::identity(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) b.img[i] = (i + 1) % n;  // (1 2 ... n)
    } else {
      for (int i = 1; i < n; ++i) b.img[i] = 1 + (i % (n - 1));  // (2 3 ... n)
    }
    impl->generators.push_back(GroupElement{b});
  }
  for (size_t i = 0; i < impl->elements.size(); ++i) impl->index[impl->elements[i]] = (int)i;
  FiniteGroup g;
  g.impl_ = impl;
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n, long long max_order) {
  if (n < 1) throw spec_error("Dn requires n >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::Dn;
  impl->n = n;
  impl->name = "Dn:" + std::to_string(n);
  check_order_bound(2LL * n, max_order, impl->name);
  for (int f = 0; f <= 1; ++f)
    for (int r = 0; r < n; ++r) impl->elements.push_back(GroupElement{DihedralElt{f, r}});
  impl->generators.push_back(GroupElement{DihedralElt{0, 1 % n}});  // y
  impl->generators.push_back(GroupElement{DihedralElt{1, 0}});      // x
  for (size_t i = 0; i < impl->elements.size(); ++i) impl->index[impl->elements[i]] = (int)i;
  FiniteGroup g;
  g.impl_ = impl;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n, long long max_order) {
  if (n < 1) throw spec_error("Zn requires n >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::Zn;
  impl->n = n;
  impl->name = "Zn:" + std::to_string(n);
  check_order_bound(n, max_order, impl->name);
  for (int r = 0; r < n; ++r) impl->elements.push_back(GroupElement{CyclicElt{r}});
  impl->generators.push_back(GroupElement{CyclicElt{1 % n}});
  for (size_t i = 0; i < impl->elements.size(); ++i) impl->index[impl->elements[i]] = (int)i;
  FiniteGroup g;
  g.impl_ = impl;
  return g;
}

FiniteGroup FiniteGroup::product(std::vector<FiniteGroup> factors, long long max_order) {
  if (factors.size() < 2) throw spec_error("product requires at least two factors");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::Product;
  impl->factors = std::move(factors);
  long long total = 1;
  std::string name;
  for (const auto& f : impl->factors) {
    total *= f.order();
    if (!name.empty()) name += "x";
    name += "(" + f.name() + ")";
  }
  impl->name = name;
  check_order_bound(total, max_order, impl->name);
  // nested enumeration, first factor outermost
  std::vector<size_t> idx(impl->factors.size(), 0);
  while (true) {
    ProductElt e;
    for (size_t k = 0; k < impl->factors.size(); ++k)
      e.parts.push_back(impl->factors[k].elements()[idx[k]]);
    impl->elements.push_back(GroupElement{std::move(e)});
    size_t k = impl->factors.size();
    while (k > 0) {
      --k;
      if (++idx[k] < impl->factors[k].elements().size()) break;
      idx[k] = 0;
      if (k == 0) goto done;
    }
  }
done:
  for (size_t k = 0; k < impl->factors.size(); ++k) {
    for (const auto& gen : impl->factors[k].generators()) {
      ProductElt e;
      for (size_t j = 0; j < impl->factors.size(); ++j)
        e.parts.push_back(j == k ? gen : impl->factors[j].identity());
      impl->generators.push_back(GroupElement{std::move(e)});
    }
  }
  for (size_t i = 0; i < impl->elements.size(); ++i) impl->index[impl->elements[i]] = (int)i;
  FiniteGroup g;
  g.impl_ = impl;
  return g;
}

GroupElement FiniteGroup::identity() const {
  const Impl& im = impl();
  switch (im.kind) {
    case GroupKind::Sn:
    case GroupKind::An:
      return GroupElement{Perm::identity(im.n)};
    case GroupKind::Dn:
      return GroupElement{DihedralElt{0, 0}};
    case GroupKind::Zn:
      return GroupElement{CyclicElt{0}};
    case GroupKind::Product: {
      ProductElt e;
      for (const auto& f : im.factors) e.parts.push_back(f.identity());
      return GroupElement{std::move(e)};
    }
  }
  throw spec_error("bad group kind");
}

GroupElement FiniteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  const Impl& im = impl();
  switch (im.kind) {
    case GroupKind::Sn:
    case GroupKind::An:
      return GroupElement{a.perm().compose(b.perm())};
    case GroupKind::Dn: {
      const auto& x = a.dihedral();
      const auto& y = b.dihedral();
      // (a1,b1)(a2,b2) = (a1+a2, (-1)^{a2} b1 + b2)
      int flip = (x.flip + y.flip) % 2;
      int rot = mod_pos((y.flip ? -x.rot : x.rot) + y.rot, im.n);
      return GroupElement{DihedralElt{flip, rot}};
    }
    case GroupKind::Zn:
      return GroupElement{CyclicElt{mod_pos(a.cyclic().r + b.cyclic().r, im.n)}};
    case GroupKind::Product: {
      ProductElt e;
      for (size_t k = 0; k < im.factors.size(); ++k)
        e.parts.push_back(im.factors[k].multiply(a.product().parts[k], b.product().parts[k]));
      return GroupElement{std::move(e)};
    }
  }
  throw spec_error("bad group kind");
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  const Impl& im = impl();
  switch (im.kind) {
    case GroupKind::Sn:
    case GroupKind::An:
      return GroupElement{a.perm().inverse()};
    case GroupKind::Dn: {
      const auto& x = a.dihedral();
      // (f, r)^{-1} = (f, (-1)^{f+1} r)
      return GroupElement{DihedralElt{x.flip, x.flip ? x.rot : mod_pos(-x.rot, im.n)}};
    }
    case GroupKind::Zn:
      return GroupElement{CyclicElt{mod_pos(-a.cyclic().r, im.n)}};
    case GroupKind::Product: {
      ProductElt e;
      for (size_t k = 0; k < im.factors.size(); ++k)
        e.parts.push_back(im.factors[k].inverse(a.product().parts[k]));
      return GroupElement{std::move(e)};
    }
  }
  throw spec_error("bad group kind");
}

GroupElement FiniteGroup::conjugate(const GroupElement& g, const GroupElement& h) const {
  const Impl& im = impl();
  if (im.kind == GroupKind::Sn || im.kind == GroupKind::An)
    return GroupElement{h.perm().conjugated_by(g.perm())};
  return multiply(multiply(g, h), inverse(g));
}

GroupElement FiniteGroup::power(const GroupElement& a, long long e) const {
  int ord = element_order(a);
  e %= ord;
  if (e < 0) e += ord;
  GroupElement acc = identity();
  GroupElement base = a;
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

bool FiniteGroup::commute(const GroupElement& a, const GroupElement& b) const {
  return multiply(a, b) == multiply(b, a);
}

bool FiniteGroup::contains(const GroupElement& e) const {
  const Impl& im = impl();
  switch (im.kind) {
    case GroupKind::Sn:
    case GroupKind::An: {
      if (!std::holds_alternative<Perm>(e.value)) return false;
      const Perm& p = std::get<Perm>(e.value);
      if (p.degree() != im.n) return false;
      std::vector<char> seen(im.n, 0);
      for (int v : p.img) {
        if (v < 0 || v >= im.n || seen[v]) return false;
        seen[v] = 1;
      }
      return im.kind == GroupKind::Sn || p.even();
    }
    case GroupKind::Dn: {
      if (!std::holds_alternative<DihedralElt>(e.value)) return false;
      const auto& d = std::get<DihedralElt>(e.value);
      return (d.flip == 0 || d.flip == 1) && d.rot >= 0 && d.rot < im.n;
    }
    case GroupKind::Zn: {
      if (!std::holds_alternative<CyclicElt>(e.value)) return false;
      const auto& c = std::get<CyclicElt>(e.value);
      return c.r >= 0 && c.r < im.n;
    }
    case GroupKind::Product: {
      if (!std::holds_alternative<ProductElt>(e.value)) return false;
      const auto& p = std::get<ProductElt>(e.value);
      if (p.parts.size() != im.factors.size()) return false;
      for (size_t k = 0; k < im.factors.size(); ++k)
        if (!im.factors[k].contains(p.parts[k])) return false;
      return true;
    }
  }
  return false;
}

bool FiniteGroup::is_identity(const GroupElement& e) const { return e == identity(); }

int FiniteGroup::element_order(const GroupElement& e) const {
  const Impl& im = impl();
  switch (im.kind) {
    case GroupKind::Sn:
    case GroupKind::An:
      return cycle_type(e.perm()).element_order();
    case GroupKind::Dn: {
      const auto& d = e.dihedral();
      if (d.flip) return 2;
      return d.rot == 0 ? 1 : im.n / std::gcd(im.n, d.rot);
    }
    case GroupKind::Zn:
      return e.cyclic().r == 0 ? 1 : im.n / std::gcd(im.n, e.cyclic().r);
    case GroupKind::Product: {
      long long o = 1;
      for (size_t k = 0; k < im.factors.size(); ++k)
        o = lcm_ll(o, im.factors[k].element_order(e.product().parts[k]));
      return static_cast<int>(o);
    }
  }
  throw spec_error("bad group kind");
}

int FiniteGroup::index_of(const GroupElement& e) const {
  const Impl& im = impl();
  auto it = im.index.find(e);
  return it == im.index.end() ? -1 : it->second;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (const auto& g : elements()) e = lcm_ll(e, element_order(g));
  return e;
}

int element_order(const FiniteGroup& G, const GroupElement& g) {
  if (!G.contains(g)) throw spec_error("element not in group " + G.name());
  return G.element_order(g);
}

// ------------------------------------------------------------- parsing

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// split "(G1)x(G2)x(G3)" into factor specs; empty result if not that shape
std::vector<std::string> split_product(const std::string& s) {
  std::vector<std::string> parts;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') return {};
    int depth = 0;
    size_t j = i;
    for (; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')' && --depth == 0) break;
    }
    if (j == s.size()) return {};
    parts.push_back(s.substr(i + 1, j - i - 1));
    i = j + 1;
    if (i == s.size()) break;
    if (s[i] != 'x' && s[i] != 'X') return {};
    ++i;
  }
  return parts.size() >= 2 ? parts : std::vector<std::string>{};
}

}  // namespace

FiniteGroup parse_group(const std::string& spec, long long max_order) {
  std::string s = trim(spec);
  if (s.empty()) throw spec_error("empty group spec");
  if (s.front() == '(') {
    auto parts = split_product(s);
    if (parts.empty()) throw spec_error("malformed group spec: " + spec);
    std::vector<FiniteGroup> factors;
    for (const auto& p : parts) factors.push_back(parse_group(p, max_order));
    return FiniteGroup::product(std::move(factors), max_order);
  }
  auto colon = s.find(':');
  if (colon == std::string::npos) throw spec_error("malformed group spec: " + spec);
  std::string head = s.substr(0, colon);
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw spec_error("malformed group spec: " + spec);
  }
  if (head == "Sn") return FiniteGroup::symmetric(n, max_order);
  if (head == "An") return FiniteGroup::alternating(n, max_order);
  if (head == "Dn") return FiniteGroup::dihedral(n, max_order);
  if (head == "Zn") return FiniteGroup::cyclic(n, max_order);
  throw spec_error("malformed group spec: " + spec);
}

// ------------------------------------------------------------ rendering

namespace {

std::string render_perm(const Perm& p) {
  int n = p.degree();
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p.img[i] == i) continue;
    out += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = p.img[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Perm parse_perm(const std::string& text, int n) {
  std::string s = trim(text);
  Perm p = Perm::identity(n);
  if (s == "e" || s == "()" || s.empty()) return p;
  std::vector<char> used(n, 0);
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '*')) ++i;
    if (i == s.size()) break;
    if (s[i] != '(') throw spec_error("malformed permutation: " + text);
    size_t j = s.find(')', i);
    if (j == std::string::npos) throw spec_error("malformed permutation: " + text);
    std::string body = s.substr(i + 1, j - i - 1);
    for (auto& ch : body)
      if (ch == ',') ch = ' ';
    std::istringstream is(body);
    std::vector<int> cyc;
    int v;
    while (is >> v) {
      if (v < 1 || v > n) throw spec_error("symbol out of range in permutation: " + text);
      if (used[v - 1]) throw spec_error("repeated symbol in permutation: " + text);
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    if (cyc.size() >= 2)
      for (size_t k = 0; k < cyc.size(); ++k) p.img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    i = j + 1;
  }
  return p;
}

DihedralElt parse_dihedral(const std::string& text, int n) {
  std::string s = trim(text);
  if (s == "e") return DihedralElt{0, 0};
  int flip = 0;
  long long rot = 0;
  size_t i = 0;
  auto read_exp = [&](long long dflt) -> long long {
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool neg = false;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
      size_t start = i;
      while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
      if (start == i) throw spec_error("malformed dihedral element: " + text);
      long long v = std::stoll(s.substr(start, i - start));
      return neg ? -v : v;
    }
    return dflt;
  };
  if (i < s.size() && s[i] == 'x') {
    ++i;
    flip = mod_pos(read_exp(1), 2);
    if (i < s.size() && s[i] == '*') ++i;
  }
  if (i < s.size() && s[i] == 'y') {
    ++i;
    rot = read_exp(1);
  }
  if (i != s.size()) throw spec_error("malformed dihedral element: " + text);
  return DihedralElt{flip, mod_pos(rot, n)};
}

std::vector<std::string> split_top_level_commas(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::string FiniteGroup::render(const GroupElement& e) const {
  const Impl& im = impl();
  switch (im.kind) {
    case GroupKind::Sn:
    case GroupKind::An:
      return render_perm(e.perm());
    case GroupKind::Dn: {
      const auto& d = e.dihedral();
      return "x^" + std::to_string(d.flip) + "*y^" + std::to_string(d.rot);
    }
    case GroupKind::Zn:
      return std::to_string(e.cyclic().r);
    case GroupKind::Product: {
      std::string out = "(";
      for (size_t k = 0; k < im.factors.size(); ++k) {
        if (k) out += ", ";
        out += im.factors[k].render(e.product().parts[k]);
      }
      return out + ")";
    }
  }
  throw spec_error("bad group kind");
}

GroupElement FiniteGroup::parse(const std::string& text) const {
  const Impl& im = impl();
  switch (im.kind) {
    case GroupKind::Sn:
    case GroupKind::An: {
      GroupElement e{parse_perm(text, im.n)};
      if (!contains(e)) throw spec_error("element not in " + im.name + ": " + text);
      return e;
    }
    case GroupKind::Dn:
      return GroupElement{parse_dihedral(text, im.n)};
    case GroupKind::Zn: {
      std::string s = trim(text);
      if (s == "e") return identity();
      try {
        return GroupElement{CyclicElt{mod_pos(std::stoll(s), im.n)}};
      } catch (const std::exception&) {
        throw spec_error("malformed cyclic element: " + text);
      }
    }
    case GroupKind::Product: {
      std::string s = trim(text);
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw spec_error("malformed product element: " + text);
      auto parts = split_top_level_commas(s.substr(1, s.size() - 2));
      if (parts.size() != im.factors.size())
        throw spec_error("product element arity mismatch: " + text);
      ProductElt e;
      for (size_t k = 0; k < im.factors.size(); ++k)
        e.parts.push_back(im.factors[k].parse(parts[k]));
      return GroupElement{std::move(e)};
    }
  }
  throw spec_error("bad group kind");
}

// ------------------------------------------------------------ CycleType

int CycleType::n() const {
  int total = 0;
  for (size_t j = 1; j < counts.size(); ++j) total += static_cast<int>(j) * counts[j];
  return total;
}

bool CycleType::even() const {
  int s = 0;
  for (size_t j = 2; j < counts.size(); j += 2) s += counts[j];
  return s % 2 == 0;
}

int CycleType::element_order() const {
  long long o = 1;
  for (size_t j = 1; j < counts.size(); ++j)
    if (counts[j] > 0) o = lcm_ll(o, static_cast<long long>(j));
  return static_cast<int>(o);
}

std::string CycleType::str() const {
  std::string out = "(";
  bool first = true;
  for (size_t j = 1; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    if (!first) out += ",";
    out += std::to_string(j);
    if (counts[j] > 1) out += "^" + std::to_string(counts[j]);
    first = false;
  }
  return out + ")";
}

CycleType cycle_type(const Perm& p) {
  int n = p.degree();
  CycleType t;
  t.counts.assign(n + 1, 0);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p.img[j]) {
      seen[j] = 1;
      ++len;
    }
    ++t.counts[len];
  }
  return t;
}

// ------------------------------------------------------- ConjugacyClass

int ConjugacyClass::index_of(const GroupElement& e) const {
  auto it = index.find(e);
  return it == index.end() ? -1 : it->second;
}

ConjugacyClass conjugacy_class(const FiniteGroup& G, const GroupElement& s) {
  if (!G.contains(s)) throw spec_error("class base point not in group");
  ConjugacyClass cls;
  cls.group = G;
  cls.elems.push_back(s);
  cls.reps.push_back(G.identity());
  cls.index[s] = 0;
  std::deque<int> queue{0};
  const auto& gens = G.generators();
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    GroupElement t = cls.elems[at];
    GroupElement g = cls.reps[at];
    for (const auto& h : gens) {
      GroupElement u = G.conjugate(h, t);
      if (cls.index.count(u)) continue;
      cls.index[u] = static_cast<int>(cls.elems.size());
      cls.elems.push_back(u);
      cls.reps.push_back(G.multiply(h, g));
      queue.push_back(static_cast<int>(cls.elems.size()) - 1);
    }
  }
  for (size_t i = 0; i < cls.elems.size(); ++i) {
    if (G.conjugate(cls.reps[i], s) != cls.elems[i])
      throw spec_error("class numeration invariant failed");
  }
  return cls;
}

std::vector<ConjugacyClass> all_conjugacy_classes(const FiniteGroup& G) {
  std::vector<ConjugacyClass> out;
  std::map<GroupElement, char> seen;
  for (const auto& e : G.elements()) {
    if (seen.count(e)) continue;
    out.push_back(conjugacy_class(G, e));
    for (const auto& t : out.back().elems) seen[t] = 1;
  }
  return out;
}

// ------------------------------------------------------------- Subgroup

int Subgroup::index_of(const GroupElement& e) const {
  auto it = index.find(e);
  return it == index.end() ? -1 : it->second;
}

bool Subgroup::is_abelian() const {
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!ambient.commute(elems[i], elems[j])) return false;
  return true;
}

long long Subgroup::exponent() const {
  long long e = 1;
  for (const auto& g : elems) e = lcm_ll(e, ambient.element_order(g));
  return e;
}

namespace {

// elements of <g> within the ambient group
std::vector<GroupElement> cyclic_span(const FiniteGroup& G, const GroupElement& g) {
  std::vector<GroupElement> out{G.identity()};
  GroupElement cur = g;
  while (cur != G.identity()) {
    out.push_back(cur);
    cur = G.multiply(cur, g);
  }
  return out;
}

std::string structure_label(const FiniteGroup& G, const Subgroup& H);

}  // namespace

Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<GroupElement> elems,
                                std::optional<GroupElement> base) {
  Subgroup H;
  H.ambient = G;
  H.elems = std::move(elems);
  H.base = std::move(base);
  for (size_t i = 0; i < H.elems.size(); ++i) H.index[H.elems[i]] = (int)i;
  if (!H.contains(G.identity())) throw spec_error("subgroup must contain the identity");
  for (const auto& a : H.elems) {
    if (!H.contains(G.inverse(a))) throw spec_error("subgroup not closed under inverse");
  }
  H.label = structure_label(G, H);
  return H;
}

Subgroup centralizer(const FiniteGroup& G, const GroupElement& s) {
  if (!G.contains(s)) throw spec_error("centralizer base point not in group");
  std::vector<GroupElement> elems;
  for (const auto& g : G.elements())
    if (G.commute(g, s)) elems.push_back(g);
  return subgroup_from_elements(G, std::move(elems), s);
}

std::vector<GroupElement> abelian_cyclic_generators(const Subgroup& H) {
  const FiniteGroup& G = H.ambient;
  if (!H.is_abelian()) throw spec_error("abelian decomposition of a nonabelian subgroup");
  std::vector<GroupElement> gens;
  std::map<GroupElement, char> span;
  span[G.identity()] = 1;
  while (static_cast<long long>(span.size()) < H.order()) {
    int best_order = 0;
    for (const auto& g : H.elems) best_order = std::max(best_order, G.element_order(g));
    // restrict to elements whose cyclic span meets the current span trivially
    auto admissible = [&](const GroupElement& g) {
      if (G.element_order(g) != best_order) return false;
      GroupElement cur = g;
      while (cur != G.identity()) {
        if (span.count(cur)) return false;
        cur = G.multiply(cur, g);
      }
      return true;
    };
    // shrink best_order until an admissible element exists
    GroupElement pick = G.identity();
    bool found = false;
    for (; best_order >= 2 && !found; /* decremented below */) {
      if (H.base && admissible(*H.base)) {
        pick = *H.base;
        found = true;
        break;
      }
      for (const auto& g : H.elems) {
        if (admissible(g)) {
          pick = g;
          found = true;
          break;
        }
      }
      if (!found) {
        int next = 0;
        for (const auto& g : H.elems) {
          int o = G.element_order(g);
          if (o < best_order) next = std::max(next, o);
        }
        best_order = next;
      }
    }
    if (!found) throw spec_error("abelian decomposition failed for subgroup of order " +
                                 std::to_string(H.order()));
    gens.push_back(pick);
    // span := span * <pick>
    std::vector<GroupElement> old;
    for (const auto& [e, _] : span) old.push_back(e);
    for (const auto& e : old) {
      GroupElement cur = pick;
      while (cur != G.identity()) {
        span[G.multiply(e, cur)] = 1;
        cur = G.multiply(cur, pick);
      }
    }
  }
  long long prod = 1;
  for (const auto& g : gens) prod *= G.element_order(g);
  if (prod != H.order()) throw spec_error("abelian decomposition is not direct");
  return gens;
}

std::optional<std::pair<GroupElement, GroupElement>> dihedral_generators(const Subgroup& H) {
  const FiniteGroup& G = H.ambient;
  long long n2 = H.order() / 2;
  if (H.order() % 2 != 0 || n2 < 1) return {};
  for (const auto& b : H.elems) {
    if (G.element_order(b) != n2) continue;
    auto span = cyclic_span(G, b);
    std::map<GroupElement, char> in_span;
    for (const auto& e : span) in_span[e] = 1;
    for (const auto& a : H.elems) {
      if (G.element_order(a) != 2 || in_span.count(a)) continue;
      if (G.conjugate(a, b) == G.inverse(b)) return std::make_pair(a, b);
    }
  }
  return {};
}

namespace {

std::string structure_label(const FiniteGroup& G, const Subgroup& H) {
  long long n = H.order();
  if (n == 1) return "Z1";
  if (n == G.order() && G.kind() != GroupKind::Dn && G.kind() != GroupKind::Zn) return G.name();
  if (H.is_abelian()) {
    if (n == 4) {
      bool cyclic = false;
      for (const auto& g : H.elems)
        if (G.element_order(g) == 4) cyclic = true;
      if (!cyclic) return "Z2xZ2";
    }
    auto gens = abelian_cyclic_generators(H);
    std::string out;
    for (const auto& g : gens) {
      if (!out.empty()) out += "x";
      out += "Z" + std::to_string(G.element_order(g));
    }
    return out;
  }
  if (dihedral_generators(H)) return "D" + std::to_string(n / 2);
  return "unknown(order=" + std::to_string(n) + ")";
}

}  // namespace

}  // namespace nichols
