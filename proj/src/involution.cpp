#include "spinfold/involution.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace spinfold {

// ---------------------------------------------------------------- templates

namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, static_cast<int>(i) + 1); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  bool word(const std::string& w) {
    skip();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected an index");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  }
  Rational turn() {
    skip();
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    try {
      Rational r = parse_rational(s.substr(i, j - i));
      i = j;
      return r;
    } catch (const std::invalid_argument&) {
      fail("expected a phase in rational turns");
    }
  }
};

std::vector<int> sorted_support(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

InvolutionSpec InvolutionSpec::parse(const std::string& text) {
  Scanner c{text};
  InvolutionSpec spec;
  while (!c.done()) {
    InvolutionBlock b;
    if (c.word("pair")) {
      b.pair = true;
      c.expect('(');
      b.j = c.integer();
      c.expect(',');
      b.l = c.integer();
      if (c.peek() == ';') {
        ++c.i;
        c.skip();
        std::size_t save = c.i;
        if (c.peek() == '-' && (c.i + 1 >= text.size() || text[c.i + 1] == ')' || std::isspace(static_cast<unsigned char>(text[c.i + 1])))) {
          ++c.i;
          b.eps = 0;
          b.eps2 = Rational(1, 2);
        } else {
          c.i = save;
          b.eps = c.turn();
          c.expect(',');
          b.eps2 = c.turn();
        }
      }
      c.expect(')');
    } else if (c.word("conj")) {
      c.expect('(');
      b.j = b.l = c.integer();
      if (c.peek() == ';') {
        ++c.i;
        b.eps = c.turn();
      }
      c.expect(')');
    } else {
      c.fail("expected pair(...) or conj(...)");
    }
    spec.blocks.push_back(b);
    if (c.peek() == ',') ++c.i;
  }
  if (spec.blocks.empty()) throw ParseError("empty involution", 1);
  return spec;
}

std::string InvolutionSpec::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    if (k) os << " ";
    if (b.pair) {
      os << "pair(" << b.j << "," << b.l;
      if (b.eps == 0 && b.eps2 == Rational(1, 2)) os << "; -";
      else if (b.eps != 0 || b.eps2 != 0) os << "; " << to_string(b.eps) << ", " << to_string(b.eps2);
      os << ")";
    } else {
      os << "conj(" << b.j;
      if (b.eps != 0) os << "; " << to_string(b.eps);
      os << ")";
    }
  }
  return os.str();
}

AntiholomorphicMap to_map(const InvolutionSpec& s, int n) {
  AntiholomorphicMap m;
  m.perm.assign(n, -1);
  m.phase.assign(n, Rational(0));
  auto set = [&](int i, int target, Rational ph) {
    if (i < 0 || i >= n) throw std::invalid_argument("involution index " + std::to_string(i) + " out of range");
    if (m.perm[i] >= 0) throw std::invalid_argument("index " + std::to_string(i) + " appears in two blocks");
    m.perm[i] = target;
    m.phase[i] = frac(ph);
  };
  for (auto& b : s.blocks) {
    if (b.pair) {
      if (b.j == b.l) throw std::invalid_argument("pair block needs two distinct indices");
      set(b.j, b.l, b.eps);
      set(b.l, b.j, b.eps2);
    } else {
      set(b.j, b.j, b.eps);
    }
  }
  for (int i = 0; i < n; ++i)
    if (m.perm[i] < 0) throw std::invalid_argument("index " + std::to_string(i) + " is in no block");
  return m;
}

WpsPoint AntiholomorphicMap::apply(const WeightSystem& w, const WpsPoint& p) const {
  std::map<int, std::size_t> at;
  for (std::size_t k = 0; k < p.support.size(); ++k) at[p.support[k]] = k;
  std::vector<int> sup;
  std::vector<Rational> mod, ph;
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    auto it = at.find(perm[i]);
    if (it == at.end()) continue;
    sup.push_back(i);
    mod.push_back(p.modulus[it->second]);
    ph.push_back(phase[i] - p.phase[it->second]);
  }
  return canonical_point(w, sup, mod, ph, p.D);
}

AntiholomorphicMap AntiholomorphicMap::after(const std::vector<Rational>& psi, int m) const {
  AntiholomorphicMap r = *this;
  for (std::size_t i = 0; i < perm.size(); ++i) r.phase[i] = frac(phase[i] - Rational(m) * psi[perm[i]]);
  return r;
}

unsigned AntiholomorphicMap::forced_zero() const {
  unsigned f = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int l = perm[i];
    if (l != static_cast<int>(i) && frac(phase[i] - phase[l]) != 0) f |= 1u << i;
  }
  return f;
}

InvolutionValidation validate_involution(const InvolutionSpec& s, const WeightSystem& w) {
  AntiholomorphicMap m = to_map(s, w.size());
  for (auto& b : s.blocks)
    if (b.pair && w[b.j] != w[b.l])
      throw std::invalid_argument("pair(" + std::to_string(b.j) + "," + std::to_string(b.l) + ") joins weights " +
                                  std::to_string(w[b.j]) + " and " + std::to_string(w[b.l]));
  InvolutionValidation v;
  for (int i = 0; i < w.size(); ++i) v.square_phases.push_back(frac(m.phase[i] - m.phase[m.perm[i]]));
  for (int n0 = 0; n0 < w[0]; ++n0) {
    Rational t = frac((v.square_phases[0] + n0) / w[0]);
    bool ok = true;
    for (int i = 0; i < w.size() && ok; ++i) ok = frac(t * w[i] - v.square_phases[i]) == 0;
    if (ok) {
      v.t = t;
      return v;
    }
  }
  std::ostringstream os;
  os << "sigma^2 multiplies coordinates by e(";
  for (int i = 0; i < w.size(); ++i) os << (i ? "," : "") << to_string(v.square_phases[i]);
  os << "), which is not a weighted scalar";
  throw std::invalid_argument(os.str());
}

bool preserves_variety(const InvolutionSpec& s, const FermatTower& t) {
  AntiholomorphicMap m = to_map(s, t.ambient.size());
  auto image = [&](const FermatEquation& e) {
    FermatEquation r;
    for (auto& term : e.terms) {
      Term x = term;
      x.var = m.perm[term.var];
      x.coeff = term.coeff.conj() * Cyclotomic::root(-m.phase[term.var] * term.exp);
      r.terms.push_back(x);
    }
    for (auto& b : e.blocks) {
      GenericBlock x = b;
      for (auto& v : x.vars) v = m.perm[v];
      std::sort(x.vars.begin(), x.vars.end());
      r.blocks.push_back(x);
    }
    std::sort(r.terms.begin(), r.terms.end(), [](auto& a, auto& b) { return a.var < b.var; });
    return r;
  };
  auto shape = [](const FermatEquation& e) {
    std::set<std::tuple<int, int, bool>> terms;
    for (auto& x : e.terms) terms.insert({x.var, x.exp, x.generic});
    std::set<std::pair<std::string, std::vector<int>>> blocks;
    for (auto& b : e.blocks) blocks.insert({b.name, sorted_support(b.vars)});
    return std::make_pair(terms, blocks);
  };
  auto plain_row = [](const FermatEquation& e) {
    std::map<int, Cyclotomic> r;
    for (auto& x : e.terms)
      if (!x.generic) r[x.var] = x.coeff;
    return r;
  };
  std::vector<std::map<int, Cyclotomic>> plain_rows;
  std::map<int, int> exps;
  for (auto& e : t.equations) {
    for (auto& x : e.terms) exps[x.var] = x.exp;
    if (!e.has_generic()) plain_rows.push_back(plain_row(e));
  }
  std::size_t base_rank = rref(plain_rows).size();
  for (auto& e : t.equations) {
    FermatEquation img = image(e);
    for (auto& x : img.terms) {
      auto it = exps.find(x.var);
      if (it == exps.end() || it->second != x.exp) return false;
    }
    if (e.has_generic()) {
      auto sh = shape(img);
      bool found = false;
      for (auto& target : t.equations) {
        if (shape(target) != sh) continue;
        auto a = plain_row(img), b = plain_row(target);
        if (a.empty()) {
          found = true;
          break;
        }
        Cyclotomic ratio = a.begin()->second / b.at(a.begin()->first);
        bool ok = true;
        for (auto& [v, c] : a) ok = ok && c == ratio * b.at(v);
        if (ok) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    } else {
      auto rows = plain_rows;
      rows.push_back(plain_row(img));
      if (rref(rows).size() != base_rank) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- fixed points

WpsPoint HolomorphicAction::apply(const WeightSystem& w, const WpsPoint& p) const {
  std::vector<Rational> ph = p.phase;
  for (std::size_t k = 0; k < ph.size(); ++k) ph[k] += psi[p.support[k]];
  return canonical_point(w, p.support, p.modulus, ph, p.D);
}

WpsPoint HolomorphicAction::orbit_rep(const WeightSystem& w, const WpsPoint& p) const {
  WpsPoint q = apply(w, p);
  return q < p ? q : p;
}

namespace {

std::string support_str(unsigned mask) {
  std::ostringstream os;
  os << "{";
  auto s = support_of(mask);
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

bool invariant(const AntiholomorphicMap& m, unsigned mask) {
  for (int i : support_of(mask))
    if (!(mask >> m.perm[i] & 1u)) return false;
  return true;
}

std::vector<WpsPoint> enumerate_fixed(const AntiholomorphicMap& m, const FermatSystem& s) {
  WeightSystem w(s.weights);
  unsigned allowed = s.full_mask() & ~m.forced_zero();
  std::vector<WpsPoint> out;
  for (unsigned S = allowed; S; S = (S - 1) & allowed) {
    if (!invariant(m, S)) continue;
    SupportReduction red = reduce_support(s, S);
    if (!red.nonempty || red.mask != S) continue;
    if (red.dimension() > 0)
      throw UnsupportedStratum("stratum " + support_str(S) + " is sigma-invariant and meets the variety in dimension " +
                               std::to_string(red.dimension()));
    for (auto& p : stratum_points(s, S))
      if (m.apply(w, p) == p) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<std::pair<WpsPoint, SingularityClass>> isolated_singular_points(const FermatTower& t) {
  if (t.has_generic_blocks()) throw std::domain_error("singular points of a tower with generic blocks cannot be enumerated");
  FermatSystem s = system_of(t);
  std::vector<std::pair<WpsPoint, SingularityClass>> out;
  for (auto& rec : singular_locus(t)) {
    if (rec.intersection_dimension != 0) continue;
    auto pts = stratum_points(s, rec.stratum.mask());
    if (rec.point_count && static_cast<std::int64_t>(pts.size()) != *rec.point_count)
      throw std::logic_error("point enumeration disagrees with the stratum count on " + rec.stratum.str());
    for (auto& p : pts) out.push_back({p, rec.cls});
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

FixedPointSet fixed_points(const InvolutionSpec& spec, const FermatTower& t) {
  if (t.has_generic_blocks()) throw std::domain_error("fixed points of a tower with generic blocks must be supplied as data");
  AntiholomorphicMap m = to_map(spec, t.ambient.size());
  FermatSystem s = system_of(t);
  FixedPointSet r;
  r.forced_zero = m.forced_zero();
  r.points = enumerate_fixed(m, s);
  r.count = static_cast<std::int64_t>(r.points.size());
  auto sing = isolated_singular_points(t);
  std::set<WpsPoint> all;
  for (auto& [p, c] : sing) all.insert(p);
  for (auto& [p, c] : sing) {
    WpsPoint q = m.apply(t.ambient, p);
    if (q == p) r.fixed_singular.push_back(p);
    else if (!all.count(q)) throw std::logic_error("sigma maps a singular point to a smooth point");
    else if (p < q) r.swapped.push_back({p, q});
  }
  return r;
}

TransverseType transverse_type(const WeightSystem& w, const std::vector<int>& support,
                               const std::vector<std::vector<Rational>>& extra) {
  std::vector<int> normal;
  unsigned mask = mask_of(support);
  for (int i = 0; i < w.size(); ++i)
    if (!(mask >> i & 1u)) normal.push_back(i);
  std::vector<int> sw;
  for (int i : support) sw.push_back(w[i]);
  int l = hcf(sw);
  using Elt = std::vector<Rational>;
  std::vector<Elt> gens;
  Elt g1;
  for (int i : normal) g1.push_back(frac(Rational(w[i], l)));
  gens.push_back(g1);
  for (auto& e : extra) {
    Elt g;
    for (int i : normal) g.push_back(frac(e[i]));
    gens.push_back(g);
  }
  std::set<Elt> group{Elt(normal.size(), Rational(0))};
  std::vector<Elt> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<Elt> next;
    for (auto& x : frontier)
      for (auto& g : gens) {
        Elt y(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) y[k] = frac(x[k] + g[k]);
        if (group.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  TransverseType tt;
  tt.dim = static_cast<int>(normal.size());
  tt.order = static_cast<int>(group.size());
  tt.scalar = std::all_of(group.begin(), group.end(), [](const Elt& e) {
    return std::all_of(e.begin(), e.end(), [&](const Rational& r) { return r == e[0]; });
  });
  bool cyclic = false;
  for (auto& e : group) {
    std::int64_t ord = 1;
    for (auto& r : e) ord = lcm64(ord, r.denominator());
    if (ord == tt.order) cyclic = true;
  }
  tt.label = "C" + std::to_string(tt.dim) + "/" + (cyclic ? "Z" : "G") + std::to_string(tt.order);
  if (tt.dim == 4 && tt.order == 4 && tt.scalar) tt.cls = SingularityClass::Z4_SCALAR;
  else if (tt.dim == 4 && tt.order == 2 && tt.scalar) tt.cls = SingularityClass::Z2_NEG;
  return tt;
}

namespace {

std::optional<Rational> weighted_scalar(const WeightSystem& w, const std::vector<Rational>& phases) {
  for (int n0 = 0; n0 < w[0]; ++n0) {
    Rational t = frac((phases[0] + n0) / w[0]);
    bool ok = true;
    for (int i = 0; i < w.size() && ok; ++i) ok = frac(t * w[i] - phases[i]) == 0;
    if (ok) return t;
  }
  return std::nullopt;
}

} // namespace

HolomorphicQuotient analyze_holomorphic(const FermatTower& t, const HolomorphicAction& beta, ChiMemo* memo) {
  const WeightSystem& w = t.ambient;
  if (static_cast<int>(beta.psi.size()) != w.size()) throw std::invalid_argument("quotient phases need one entry per coordinate");
  if (weighted_scalar(w, beta.psi)) throw std::invalid_argument("the quotient map is trivial on the weighted projective space");
  std::vector<Rational> sq;
  for (auto& p : beta.psi) sq.push_back(frac(2 * p));
  auto t2 = weighted_scalar(w, sq);
  if (!t2) throw std::invalid_argument("only quotients of order 2 are supported");
  HolomorphicQuotient q;
  q.t = *t2;
  // tau values at which beta agrees with the weighted scalar on some coordinates
  std::map<unsigned, std::vector<Rational>> taus;
  for (int i = 0; i < w.size(); ++i)
    for (int n0 = 0; n0 < w[i]; ++n0) {
      Rational tau = frac((beta.psi[i] + n0) / w[i]);
      unsigned J = 0;
      for (int j = 0; j < w.size(); ++j)
        if (frac(tau * w[j] - beta.psi[j]) == 0) J |= 1u << j;
      auto& v = taus[J];
      if (std::find(v.begin(), v.end(), tau) == v.end()) v.push_back(tau);
    }
  std::vector<unsigned> maximal;
  for (auto& [J, v] : taus) {
    bool dominated = false;
    for (auto& [K, u] : taus)
      if (K != J && (J & K) == J) dominated = true;
    if (!dominated) maximal.push_back(J);
  }
  FermatSystem s = system_of(t);
  EulerEngine engine(memo);
  auto closed_chi = [&](unsigned mask) -> std::int64_t { return mask ? engine.closed(s, mask) : 0; };
  for (std::size_t F = 1; F < (std::size_t(1) << maximal.size()); ++F) {
    unsigned inter = s.full_mask();
    int bits = 0;
    for (std::size_t k = 0; k < maximal.size(); ++k)
      if (F >> k & 1u) {
        inter &= maximal[k];
        ++bits;
      }
    q.fix_chi += (bits % 2 ? 1 : -1) * closed_chi(inter);
  }
  for (unsigned J : maximal) {
    SupportReduction red = reduce_support(s, J);
    if (!red.nonempty) continue;
    FixedComponent c;
    c.support = support_of(red.mask);
    c.dimension = red.dimension();
    c.chi = closed_chi(J);
    std::vector<std::vector<Rational>> extra;
    for (auto& [K, v] : taus)
      if ((K & red.mask) == red.mask)
        for (auto& tau : v) {
          std::vector<Rational> g;
          for (int i = 0; i < w.size(); ++i) g.push_back(beta.psi[i] - tau * w[i]);
          extra.push_back(g);
        }
    c.type = transverse_type(w, c.support, extra);
    if (c.dimension == 0)
      for (unsigned M = red.mask; M; M = (M - 1) & red.mask) {
        SupportReduction rm = reduce_support(s, M);
        if (!rm.nonempty || rm.mask != M || rm.dimension() != 0) continue;
        for (auto& p : stratum_points(s, M)) c.points.push_back(p);
      }
    q.components.push_back(c);
  }
  return q;
}

bool normalizes(const InvolutionSpec& spec, const HolomorphicAction& beta, const WeightSystem& w) {
  AntiholomorphicMap m = to_map(spec, w.size());
  std::vector<Rational> ph;
  for (int i = 0; i < w.size(); ++i) ph.push_back(frac(-beta.psi[m.perm[i]] - beta.psi[i]));
  return weighted_scalar(w, ph).has_value();
}

FixedPointSet fixed_points_mod(const InvolutionSpec& spec, const FermatTower& t, const HolomorphicAction& beta,
                               const std::vector<WpsPoint>& singular) {
  const WeightSystem& w = t.ambient;
  if (!normalizes(spec, beta, w)) throw std::invalid_argument("sigma does not normalize the quotient group");
  AntiholomorphicMap m = to_map(spec, w.size());
  FermatSystem s = system_of(t);
  std::set<WpsPoint> reps;
  for (int k = 0; k < 2; ++k)
    for (auto& p : enumerate_fixed(m.after(beta.psi, k), s)) reps.insert(beta.orbit_rep(w, p));
  FixedPointSet r;
  r.forced_zero = m.forced_zero() & m.after(beta.psi, 1).forced_zero();
  r.points.assign(reps.begin(), reps.end());
  r.count = static_cast<std::int64_t>(r.points.size());
  std::set<WpsPoint> sing;
  for (auto& p : singular) sing.insert(beta.orbit_rep(w, p));
  for (auto& p : sing) {
    WpsPoint q = beta.orbit_rep(w, m.apply(w, p));
    if (q == p) r.fixed_singular.push_back(p);
    else if (!sing.count(q)) throw std::logic_error("sigma maps a singular point to a smooth point");
    else if (p < q) r.swapped.push_back({p, q});
  }
  return r;
}

// ---------------------------------------------------------------- condition

std::string ConditionReport::str() const {
  std::ostringstream os;
  os << "(i) isolated C4/Z4 singularities: " << (isolated_z4 ? "PASS" : "FAIL") << "\n";
  os << "(ii) fixed set equals singular set: " << (fixed_is_singular ? "PASS" : "FAIL") << "\n";
  os << "(iii) " << topology << "\n";
  for (auto& n : notes) os << "  note: " << n << "\n";
  os << "verdict: " << (pass() ? "PASS" : "FAIL");
  return os.str();
}

ConditionReport evaluate_condition(const std::vector<std::pair<WpsPoint, SingularityClass>>& singular,
                                   int unresolved_loci, const std::vector<WpsPoint>& fixed,
                                   const ResolutionDeclarations& d, bool lefschetz) {
  ConditionReport r;
  std::set<WpsPoint> resolved(d.points.begin(), d.points.end());
  std::set<WpsPoint> remaining;
  for (auto& [p, c] : singular) {
    if (resolved.count(p)) continue;
    remaining.insert(p);
    if (c != SingularityClass::Z4_SCALAR) {
      r.isolated_z4 = false;
      r.notes.push_back("unresolved singular point of class " + to_string(c));
    }
  }
  if (unresolved_loci > 0) {
    r.isolated_z4 = false;
    r.notes.push_back(std::to_string(unresolved_loci) + " positive-dimensional singular locus left unresolved");
  }
  std::set<WpsPoint> fx(fixed.begin(), fixed.end());
  if (fx != remaining) {
    r.fixed_is_singular = false;
    std::size_t extra = 0, missing = 0;
    for (auto& p : fx)
      if (!remaining.count(p)) ++extra;
    for (auto& p : remaining)
      if (!fx.count(p)) ++missing;
    r.notes.push_back(std::to_string(extra) + " fixed point(s) off the singular set, " + std::to_string(missing) +
                      " singular point(s) not fixed");
  }
  r.topology_granted = lefschetz;
  r.topology = lefschetz ? "simple connectivity and h20 = 0 granted by the Lefschetz hyperplane theorem"
                         : "simple connectivity and h20 = 0 taken as assumptions";
  return r;
}

ConditionReport check_condition(const FermatTower& t, const InvolutionSpec& s, const ResolutionDeclarations& d) {
  auto singular = isolated_singular_points(t);
  int loci = 0;
  for (auto& rec : singular_locus(t)) {
    if (rec.intersection_dimension < 1) continue;
    bool declared = std::any_of(d.loci.begin(), d.loci.end(),
                                [&](auto& l) { return sorted_support(l) == rec.stratum.support; });
    if (!declared) ++loci;
  }
  FixedPointSet f = fixed_points(s, t);
  return evaluate_condition(singular, loci, f.points, d, true);
}

// ---------------------------------------------------------------- C4/{+-1} points

std::string to_string(Z2PointClass c) { return c == Z2PointClass::RESOLVABLE ? "RESOLVABLE" : "OBSTRUCTED"; }

Z2PointReport classify_z2_point(const PhaseMatrix& g0) {
  if (4 % g0.n) throw std::invalid_argument("unrecognized normal form: phases are not powers of i");
  PhaseMatrix g = g0.lifted(4);
  FreenessReport fr = element_fixed_vector(g);
  if (!fr.free) throw std::invalid_argument("not a free Z4 action: the generator has a fixed vector");
  PhaseMatrix minus{{0, 1, 2, 3}, {2, 2, 2, 2}, false, 4};
  if (!((g * g).lifted(4) == minus)) throw std::invalid_argument("unrecognized normal form: the square is not -1");
  static const MultiForm omega = cayley_form();
  std::optional<Z2PointReport> mixed;
  for (const CoordinatePairing& base : {CoordinatePairing::w_coordinates(), CoordinatePairing::z_coordinates()})
    for (int code = 0; code < 16; ++code) {
      // conjugating a coordinate is the only change that alters the diagonal type
      CoordinatePairing p = base;
      for (int k = 0; k < 4; ++k)
        if (code >> k & 1) p.im[k].sign = -p.im[k].sign;
      auto h = rewrite(g, CoordinatePairing::z_coordinates(), p);
      if (!h || h->conjugates) continue;
      PhaseMatrix d = h->lifted(4);
      if (d.perm != std::array<int, 4>{0, 1, 2, 3}) continue;
      if (std::any_of(d.phase.begin(), d.phase.end(), [](int x) { return x % 2 == 0; })) continue;
      bool compatible = false;
      for (int q = 0; q < 4 && !compatible; ++q) compatible = su4_induced_form(p, q) == omega;
      if (!compatible) continue;
      bool scalar = std::all_of(d.phase.begin(), d.phase.end(), [&](int x) { return x == d.phase[0]; });
      if (scalar) return {Z2PointClass::RESOLVABLE, d, p};
      if (!mixed) mixed = Z2PointReport{Z2PointClass::OBSTRUCTED, d, p};
    }
  if (mixed) return *mixed;
  throw std::invalid_argument("unrecognized normal form: no Cayley-compatible pairing diagonalizes the action");
}

} // namespace spinfold
