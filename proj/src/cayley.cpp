#include "spinfold/cayley.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinfold {

int popcount8(unsigned m) { return __builtin_popcount(m & 0xffu); }

int wedge_sign(unsigned a, unsigned b) {
  int inversions = 0;
  for (int y = 0; y < 8; ++y)
    if (b >> y & 1u) inversions += popcount8(a >> (y + 1));
  return inversions % 2 ? -1 : 1;
}

template <class S>
Form<S> Form<S>::basis(std::vector<int> idx, S c) {
  Form f(static_cast<int>(idx.size()));
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > 8) throw std::invalid_argument("form index out of range");
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return f;
      if (idx[i] > idx[j]) sign = -sign;
    }
  }
  unsigned mask = 0;
  for (int i : idx) mask |= 1u << (i - 1);
  f.add(mask, sign > 0 ? c : S() - c);
  return f;
}

template <class S>
S Form<S>::coefficient(const std::vector<int>& idx) const {
  unsigned mask = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i && idx[i] <= idx[i - 1]) throw std::invalid_argument("indices must be strictly increasing");
    mask |= 1u << (idx[i] - 1);
  }
  auto it = terms_.find(mask);
  return it == terms_.end() ? S() : it->second;
}

template <class S>
void Form<S>::add(unsigned mask, const S& c) {
  if (popcount8(mask) != degree_) throw std::invalid_argument("term degree does not match form degree");
  S& slot = terms_[mask];
  slot += c;
  if (slot == S()) terms_.erase(mask);
}

template <class S>
Form<S>& Form<S>::operator+=(const Form& o) {
  if (o.degree_ != degree_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("adding forms of different degree");
  if (is_zero()) degree_ = o.degree_;
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

template <class S>
Form<S>& Form<S>::operator-=(const Form& o) {
  Form neg = o;
  neg *= S() - S(1);
  return *this += neg;
}

template <class S>
Form<S>& Form<S>::operator*=(const S& c) {
  if (c == S()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  if (a.degree() + b.degree() > 8) throw std::invalid_argument("wedge degree exceeds 8");
  Form<S> r(a.degree() + b.degree());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      S c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = S() - c;
      r.add(ma | mb, c);
    }
  return r;
}

template <class S>
Form<S> substitute(const Form<S>& f, const std::array<Form<S>, 8>& images) {
  Form<S> r(f.degree());
  for (auto& [m, c] : f.terms()) {
    Form<S> acc(0);
    acc.add(0, c);
    for (int j = 0; j < 8; ++j)
      if (m >> j & 1u) acc = wedge(acc, images[j]);
    r += acc;
  }
  return r;
}

template class Form<Rational>;
template class Form<Cyclotomic>;
template MultiForm wedge(const MultiForm&, const MultiForm&);
template ComplexForm wedge(const ComplexForm&, const ComplexForm&);
template MultiForm substitute(const MultiForm&, const std::array<MultiForm, 8>&);
template ComplexForm substitute(const ComplexForm&, const std::array<ComplexForm, 8>&);

ComplexForm complexify(const MultiForm& f) {
  ComplexForm r(f.degree());
  for (auto& [m, c] : f.terms()) r.add(m, Cyclotomic(c));
  return r;
}

MultiForm realify(const ComplexForm& f) {
  MultiForm r(f.degree());
  for (auto& [m, c] : f.terms()) r.add(m, c.rational());
  return r;
}

std::string to_string(const MultiForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : f.terms()) {
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    Rational a = c < 0 ? -c : c;
    if (a != 1) os << to_string(a) << "*";
    os << "dx";
    for (int j = 0; j < 8; ++j)
      if (m >> j & 1u) os << j + 1;
    first = false;
  }
  return os.str();
}

CoordinatePairing CoordinatePairing::z_coordinates() {
  return {{{{1, 1}, {3, 1}, {5, 1}, {7, 1}}}, {{{2, 1}, {4, 1}, {6, 1}, {8, 1}}}};
}

CoordinatePairing CoordinatePairing::w_coordinates() {
  return {{{{1, -1}, {2, 1}, {5, -1}, {6, 1}}}, {{{3, 1}, {4, 1}, {7, 1}, {8, 1}}}};
}

void CoordinatePairing::validate() const {
  std::array<int, 9> seen{};
  for (int k = 0; k < 4; ++k)
    for (const Axis& a : {re[k], im[k]}) {
      if (a.index < 1 || a.index > 8 || (a.sign != 1 && a.sign != -1))
        throw std::invalid_argument("bad axis in coordinate pairing");
      if (seen[a.index]++) throw std::invalid_argument("coordinate pairing reuses an axis");
    }
}

CoordinatePairing CoordinatePairing::rotated(int k) const {
  CoordinatePairing p = *this;
  p.re[k] = {im[k].index, -im[k].sign};
  p.im[k] = re[k];
  return p;
}

MultiForm cayley_form() {
  static const std::vector<std::pair<int, int>> table = {
      {1234, 1},  {1256, 1},  {1278, 1},  {1357, 1},  {1368, -1}, {1458, -1}, {1467, -1},
      {2358, -1}, {2367, -1}, {2457, -1}, {2468, 1},  {3456, 1},  {3478, 1},  {5678, 1}};
  MultiForm f(4);
  for (auto [digits, sign] : table) {
    std::vector<int> idx;
    for (int d = digits; d; d /= 10) idx.insert(idx.begin(), d % 10);
    f += MultiForm::basis(idx, Rational(sign));
  }
  return f;
}

MultiForm kahler_form(const CoordinatePairing& p) {
  p.validate();
  MultiForm w(2);
  for (int k = 0; k < 4; ++k)
    w += MultiForm::basis({p.re[k].index, p.im[k].index}, Rational(p.re[k].sign * p.im[k].sign));
  return w;
}

namespace {

ComplexForm dz_real(const CoordinatePairing& p, int k, bool bar) {
  ComplexForm f(1);
  f.add(1u << (p.re[k].index - 1), Cyclotomic(p.re[k].sign));
  Cyclotomic i = Cyclotomic::imag_unit() * Cyclotomic(p.im[k].sign);
  f.add(1u << (p.im[k].index - 1), bar ? -i : i);
  return f;
}

} // namespace

ComplexForm holomorphic_volume(const CoordinatePairing& p) {
  p.validate();
  ComplexForm t(0);
  t.add(0, Cyclotomic(1));
  for (int k = 0; k < 4; ++k) t = wedge(t, dz_real(p, k, false));
  return t;
}

MultiForm su4_induced_form(const CoordinatePairing& p, int quarter_turns) {
  MultiForm w = kahler_form(p);
  MultiForm r = wedge(w, w) * Rational(1, 2);
  ComplexForm theta = holomorphic_volume(p) * Cyclotomic::root(Rational(quarter_turns, 4));
  MultiForm re(4);
  for (auto& [m, c] : theta.terms()) re.add(m, c.real_part());
  return r + re;
}

PhaseMatrix PhaseMatrix::identity(int n) {
  PhaseMatrix g;
  g.n = n;
  return g;
}

PhaseMatrix PhaseMatrix::lifted(int m) const {
  if (m % n) throw std::invalid_argument("phase matrix lift to a non-multiple modulus");
  PhaseMatrix g = *this;
  for (auto& x : g.phase) x *= m / n;
  g.n = m;
  return g.normalized();
}

PhaseMatrix PhaseMatrix::normalized() const {
  PhaseMatrix g = *this;
  for (auto& x : g.phase) x = ((x % n) + n) % n;
  return g;
}

PhaseMatrix PhaseMatrix::operator*(const PhaseMatrix& h) const {
  int m = static_cast<int>(lcm64(n, h.n));
  PhaseMatrix a = lifted(m), b = h.lifted(m), r;
  r.n = m;
  for (int i = 0; i < 4; ++i) {
    r.perm[i] = b.perm[a.perm[i]];
    r.phase[i] = a.phase[i] + (a.conjugates ? -1 : 1) * b.phase[a.perm[i]];
  }
  r.conjugates = a.conjugates != b.conjugates;
  return r.normalized();
}

bool operator==(const PhaseMatrix& a, const PhaseMatrix& b) {
  int m = static_cast<int>(lcm64(a.n, b.n));
  PhaseMatrix x = a.lifted(m), y = b.lifted(m);
  return x.perm == y.perm && x.phase == y.phase && x.conjugates == y.conjugates;
}

bool PhaseMatrix::is_identity() const { return *this == identity(1); }

std::array<Cyclotomic, 4> PhaseMatrix::apply(const std::array<Cyclotomic, 4>& v) const {
  std::array<Cyclotomic, 4> out;
  for (int i = 0; i < 4; ++i) {
    const Cyclotomic& x = v[perm[i]];
    out[i] = Cyclotomic::root(Rational(phase[i], n)) * (conjugates ? x.conj() : x);
  }
  return out;
}

std::string PhaseMatrix::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 4; ++i) {
    if (i) os << ", ";
    Cyclotomic c = Cyclotomic::root(Rational(phase[i], n));
    std::string f = c.str();
    if (f == "1") f = "";
    else if (f == "-1") f = "-";
    else f += "*";
    os << f << (conjugates ? "conj(z" : "z") << perm[i] + 1 << (conjugates ? ")" : "");
  }
  os << ")";
  return os.str();
}

PhaseMatrix alpha_g() { return {{0, 1, 2, 3}, {1, 1, 1, 1}, false, 4}; }
PhaseMatrix beta_g() { return {{1, 0, 3, 2}, {0, 2, 0, 2}, true, 4}; }
PhaseMatrix alpha_gn(int n) { return PhaseMatrix{{0, 1, 2, 3}, {4, -4, 4, -4}, false, 4 * n}.normalized(); }
PhaseMatrix beta_gn(int n) { return {{0, 1, 2, 3}, {n, n, n, n}, false, 4 * n}; }
PhaseMatrix gamma_gn(int n) { return {{1, 0, 3, 2}, {0, 2 * n, 0, 2 * n}, true, 4 * n}; }

ComplexForm pullback(const PhaseMatrix& g, const ComplexForm& f, const CoordinatePairing& p) {
  p.validate();
  Cyclotomic i = Cyclotomic::imag_unit();
  std::array<ComplexForm, 8> to_complex, act, to_real;
  for (auto& x : to_complex) x = ComplexForm(1);
  for (auto& x : act) x = ComplexForm(1);
  for (int k = 0; k < 4; ++k) {
    int a = p.re[k].index - 1, b = p.im[k].index - 1;
    Rational s(p.re[k].sign, 2), t(p.im[k].sign, 2);
    to_complex[a].add(1u << k, Cyclotomic(s));
    to_complex[a].add(1u << (4 + k), Cyclotomic(s));
    to_complex[b].add(1u << k, -i * Cyclotomic(t));
    to_complex[b].add(1u << (4 + k), i * Cyclotomic(t));
    to_real[k] = dz_real(p, k, false);
    to_real[4 + k] = dz_real(p, k, true);
  }
  for (int k = 0; k < 4; ++k) {
    Cyclotomic z = Cyclotomic::root(Rational(g.phase[k], g.n));
    int src = g.perm[k];
    act[k].add(1u << (g.conjugates ? 4 + src : src), z);
    act[4 + k].add(1u << (g.conjugates ? src : 4 + src), z.conj());
  }
  return substitute(substitute(substitute(f, to_complex), act), to_real);
}

MultiForm pullback(const PhaseMatrix& g, const MultiForm& f, const CoordinatePairing& p) {
  return realify(pullback(g, complexify(f), p));
}

namespace {

using RealVec = std::array<Rational, 8>;

std::array<Cyclotomic, 4> to_complex_coords(const RealVec& x, const CoordinatePairing& p) {
  std::array<Cyclotomic, 4> z;
  for (int k = 0; k < 4; ++k)
    z[k] = Cyclotomic(x[p.re[k].index - 1] * p.re[k].sign) +
           Cyclotomic::imag_unit() * Cyclotomic(x[p.im[k].index - 1] * p.im[k].sign);
  return z;
}

RealVec to_real_coords(const std::array<Cyclotomic, 4>& z, const CoordinatePairing& p) {
  RealVec x{};
  for (int k = 0; k < 4; ++k) {
    x[p.re[k].index - 1] = z[k].real_part() * p.re[k].sign;
    x[p.im[k].index - 1] = (-Cyclotomic::imag_unit() * z[k]).real_part() * p.im[k].sign;
  }
  return x;
}

} // namespace

std::optional<PhaseMatrix> rewrite(const PhaseMatrix& g, const CoordinatePairing& from,
                                   const CoordinatePairing& to) {
  if (4 % g.n) throw std::invalid_argument("rewrite needs phases that are powers of i");
  std::array<RealVec, 8> images;
  for (int j = 0; j < 8; ++j) {
    RealVec e{};
    e[j] = 1;
    images[j] = to_real_coords(g.apply(to_complex_coords(e, from)), from);
  }
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    for (int code = 0; code < 512; ++code) {
      PhaseMatrix h{perm, {code & 3, code >> 2 & 3, code >> 4 & 3, code >> 6 & 3}, (code >> 8) != 0, 4};
      bool ok = true;
      for (int j = 0; j < 8 && ok; ++j) {
        RealVec e{};
        e[j] = 1;
        ok = to_real_coords(h.apply(to_complex_coords(e, to)), to) == images[j];
      }
      if (ok) return h;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

std::array<int, 9> key_of(const PhaseMatrix& g) {
  return {g.perm[0], g.perm[1], g.perm[2], g.perm[3], g.phase[0], g.phase[1], g.phase[2], g.phase[3],
          g.conjugates ? 1 : 0};
}

} // namespace

int GroupTable::find(const PhaseMatrix& g) const {
  if (elements.empty()) return -1;
  auto it = index.find(key_of(g.lifted(elements[0].n)));
  return it == index.end() ? -1 : it->second;
}

int GroupTable::identity() const { return find(PhaseMatrix::identity()); }

int GroupTable::inverse(int i) const {
  int e = identity();
  for (int j = 0; j < order(); ++j)
    if (mult[i][j] == e) return j;
  throw std::logic_error("element without inverse");
}

PhaseMatrix GroupTable::evaluate(const std::string& word) const {
  PhaseMatrix r = PhaseMatrix::identity(elements.empty() ? 1 : elements[0].n);
  for (char ch : word) {
    int k = ch - 'a';
    if (k < 0 || k >= static_cast<int>(generators.size()))
      throw std::invalid_argument(std::string("unknown generator letter '") + ch + "'");
    r = r * generators[k];
  }
  return r;
}

bool GroupTable::relation_holds(const std::string& lhs, const std::string& rhs) const {
  return evaluate(lhs) == evaluate(rhs);
}

bool GroupTable::is_cyclic() const {
  int e = identity();
  for (int i = 0; i < order(); ++i) {
    int ord = 1;
    for (int x = i; x != e; x = mult[x][i]) ++ord;
    if (ord == order()) return true;
  }
  return false;
}

GroupTable generate_group(const std::vector<PhaseMatrix>& gens,
                          const std::vector<std::pair<std::string, std::string>>& relations, int cap) {
  int n = 1;
  for (auto& g : gens) n = static_cast<int>(lcm64(n, g.n));
  GroupTable t;
  for (auto& g : gens) t.generators.push_back(g.lifted(n));
  auto insert = [&](const PhaseMatrix& g) {
    auto [it, fresh] = t.index.emplace(key_of(g), static_cast<int>(t.elements.size()));
    if (fresh) {
      if (static_cast<int>(t.elements.size()) >= cap)
        throw std::runtime_error("group exceeds the cap of " + std::to_string(cap) + " elements");
      t.elements.push_back(g);
    }
    return fresh;
  };
  insert(PhaseMatrix::identity(n));
  for (std::size_t head = 0; head < t.elements.size(); ++head)
    for (auto& g : t.generators) insert(t.elements[head] * g);
  int m = t.order();
  t.mult.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t.mult[i][j] = t.index.at(key_of(t.elements[i] * t.elements[j]));
  for (auto& r : relations) {
    if (!t.relation_holds(r.first, r.second))
      throw std::runtime_error("relation " + r.first + " = " + r.second + " fails");
    t.relations.push_back(r);
  }
  return t;
}

namespace {

bool is_zero_vec(const std::array<Cyclotomic, 4>& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

std::array<Cyclotomic, 4> add_vec(const std::array<Cyclotomic, 4>& a, const std::array<Cyclotomic, 4>& b) {
  std::array<Cyclotomic, 4> r;
  for (int k = 0; k < 4; ++k) r[k] = a[k] + b[k];
  return r;
}

std::array<Cyclotomic, 4> scale_vec(const std::array<Cyclotomic, 4>& a, const Cyclotomic& c) {
  std::array<Cyclotomic, 4> r;
  for (int k = 0; k < 4; ++k) r[k] = a[k] * c;
  return r;
}

std::optional<std::array<Cyclotomic, 4>> averaged(const PhaseMatrix& g, const std::array<Cyclotomic, 4>& w) {
  for (const Cyclotomic& c : {Cyclotomic(1), Cyclotomic::imag_unit()}) {
    auto u = scale_vec(w, c);
    auto v = add_vec(u, g.apply(u));
    if (!is_zero_vec(v)) return v;
  }
  return std::nullopt;
}

} // namespace

FreenessReport element_fixed_vector(const PhaseMatrix& g) {
  FreenessReport r;
  if (!g.conjugates) {
    std::array<bool, 4> seen{};
    for (int i0 = 0; i0 < 4; ++i0) {
      if (seen[i0]) continue;
      int total = 0;
      for (int i = i0; !seen[i]; i = g.perm[i]) {
        seen[i] = true;
        total += g.phase[i];
      }
      if (total % g.n) continue;
      r.free = false;
      for (auto& c : r.witness) c = Cyclotomic();
      r.witness[i0] = Cyclotomic(1);
      for (int i = i0; g.perm[i] != i0; i = g.perm[i])
        r.witness[g.perm[i]] = r.witness[i] * Cyclotomic::root(Rational(-g.phase[i], g.n));
      return r;
    }
    return r;
  }
  PhaseMatrix g2 = g * g;
  if (g2.is_identity()) {
    for (int k = 0; k < 4; ++k) {
      std::array<Cyclotomic, 4> e{};
      e[k] = Cyclotomic(1);
      if (auto v = averaged(g, e)) {
        r.free = false;
        r.witness = *v;
        return r;
      }
    }
    throw std::logic_error("antilinear involution without fixed vectors");
  }
  FreenessReport inner = element_fixed_vector(g2);
  if (inner.free) return r;
  auto v = averaged(g, inner.witness);
  if (!v) throw std::logic_error("failed to average a fixed vector");
  r.free = false;
  r.witness = *v;
  return r;
}

FreenessReport acts_freely(const GroupTable& t) {
  int e = t.identity();
  for (int i = 0; i < t.order(); ++i) {
    if (i == e) continue;
    FreenessReport r = element_fixed_vector(t.elements[i]);
    if (!r.free) {
      r.element = i;
      return r;
    }
  }
  return {};
}

} // namespace spinfold
