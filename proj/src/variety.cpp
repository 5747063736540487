#include "spinfold/variety.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinfold {

// ---------------------------------------------------------------- tower

const Term* FermatEquation::term_of(int v) const {
  for (auto& t : terms)
    if (t.var == v) return &t;
  return nullptr;
}

bool FermatEquation::mentions(int v) const {
  if (term_of(v)) return true;
  for (auto& b : blocks)
    if (std::find(b.vars.begin(), b.vars.end(), v) != b.vars.end()) return true;
  return false;
}

bool FermatEquation::has_generic() const {
  if (!blocks.empty()) return true;
  return std::any_of(terms.begin(), terms.end(), [](const Term& t) { return t.generic; });
}

std::string FermatEquation::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms) {
    std::string c = t.coeff.str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (t.generic) os << "~";
    if (c != "1") os << (c.find_first_of("+-") != std::string::npos ? "(" + c + ")" : c) << "*";
    os << "z" << t.var;
    if (t.exp != 1) os << "^" << t.exp;
    first = false;
  }
  for (auto& b : blocks) {
    os << (first ? "~" : " + ~") << b.name << "(";
    for (std::size_t i = 0; i < b.vars.size(); ++i) os << (i ? "," : "") << "z" << b.vars[i];
    os << ")";
    first = false;
  }
  return first ? "0" : os.str();
}

bool FermatTower::has_generic_blocks() const {
  return std::any_of(equations.begin(), equations.end(), [](auto& e) { return !e.blocks.empty(); });
}

bool FermatTower::has_generic_terms() const {
  return std::any_of(equations.begin(), equations.end(), [](auto& e) { return e.has_generic(); });
}

FermatTower FermatTower::restricted(const std::vector<int>& support) const {
  unsigned m = mask_of(support);
  FermatTower r = *this;
  for (auto& e : r.equations) {
    std::erase_if(e.terms, [&](const Term& t) { return !(m >> t.var & 1u); });
    for (auto& b : e.blocks) std::erase_if(b.vars, [&](int v) { return !(m >> v & 1u); });
    std::erase_if(e.blocks, [](const GenericBlock& b) { return b.vars.empty(); });
  }
  return r;
}

namespace {

struct Cursor {
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
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, static_cast<int>(i) + 1); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  int integer() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected a number");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  }
  Rational rational() {
    int p = integer();
    if (i < s.size() && s[i] == '/') {
      ++i;
      int q = integer();
      if (!q) fail("zero denominator");
      return Rational(p, q);
    }
    return Rational(p);
  }
  int variable() {
    if (peek() != 'z') fail("expected a variable z<n>");
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected a variable index");
    return integer();
  }
};

} // namespace

FermatEquation parse_equation(const std::string& text) {
  Cursor c{text};
  FermatEquation eq;
  if (c.done()) c.fail("empty equation");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    bool generic = false;
    if (c.peek() == '~') {
      generic = true;
      ++c.i;
      c.skip();
      bool is_var = c.peek() == 'z' && c.i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i + 1]));
      if (!is_var && std::isalpha(static_cast<unsigned char>(c.peek()))) {
        GenericBlock b;
        while (c.i < text.size() && std::isalnum(static_cast<unsigned char>(text[c.i]))) b.name += text[c.i++];
        c.expect('(');
        b.vars.push_back(c.variable());
        while (c.peek() == ',') {
          ++c.i;
          b.vars.push_back(c.variable());
        }
        c.expect(')');
        eq.blocks.push_back(b);
        continue;
      }
    }
    Term t;
    t.generic = generic;
    Cyclotomic coeff(sign);
    bool have_var = false;
    while (true) {
      std::size_t at = c.i;
      char f = c.peek();
      if (f == 'z') {
        if (have_var) c.fail("a term may contain only one variable");
        t.var = c.variable();
        if (c.peek() == '^') {
          ++c.i;
          t.exp = c.integer();
          if (t.exp < 1) c.fail("exponents must be positive");
        }
        have_var = true;
      } else if (f == 'i') {
        ++c.i;
        coeff *= Cyclotomic::imag_unit();
      } else if (f == 'e' && c.i + 1 < text.size() && text[c.i + 1] == '(') {
        c.i += 2;
        bool neg = c.peek() == '-';
        if (neg) ++c.i;
        Rational t0 = c.rational();
        coeff *= Cyclotomic::root(neg ? -t0 : t0);
        c.expect(')');
      } else if (std::isdigit(static_cast<unsigned char>(f))) {
        Rational q = c.rational();
        if (q == 0) c.fail("zero coefficient");
        coeff *= Cyclotomic(q);
        if (c.i < text.size() && text[c.i] == 'i') {
          ++c.i;
          coeff *= Cyclotomic::imag_unit();
        }
      } else {
        c.fail("unexpected character");
      }
      (void)at;
      if (c.peek() == '*') {
        ++c.i;
        continue;
      }
      break;
    }
    if (!have_var) c.fail("term without a variable");
    if (eq.term_of(t.var)) c.fail("variable z" + std::to_string(t.var) + " used twice");
    t.coeff = coeff;
    eq.terms.push_back(t);
  }
  std::sort(eq.terms.begin(), eq.terms.end(), [](auto& a, auto& b) { return a.var < b.var; });
  return eq;
}

FermatTower fermat_hypersurface(const WeightSystem& w, const std::vector<int>& exponents) {
  FermatTower t;
  t.ambient = w;
  FermatEquation e;
  for (int j = 0; j < w.size(); ++j) e.terms.push_back({j, exponents[j], Cyclotomic(1), false});
  t.equations.push_back(e);
  return t;
}

FermatTower fermat_hypersurface(const WeightSystem& w) {
  int d = w.sum();
  std::vector<int> k;
  for (int a : w.weights) {
    if (d % a) throw std::invalid_argument("weight " + std::to_string(a) + " does not divide " + std::to_string(d));
    k.push_back(d / a);
  }
  return fermat_hypersurface(w, k);
}

// ---------------------------------------------------------------- validation

int equation_degree(const FermatTower& t, int e) {
  const FermatEquation& eq = t.equations.at(e);
  if (eq.terms.empty()) throw std::invalid_argument("equation " + std::to_string(e + 1) + " has no pure-power term to fix its degree");
  return t.ambient[eq.terms[0].var] * eq.terms[0].exp;
}

namespace {

std::string zname(int v) { return "z" + std::to_string(v); }

struct Labeled {
  std::string label;
  std::map<int, Cyclotomic> row;
};

} // namespace

ValidationReport validate_tower(const FermatTower& t) {
  ValidationReport rep;
  if (t.equations.empty()) throw std::invalid_argument("no equations");
  if (!t.ambient.normalized()) rep.notes.push_back("weights are not normalized (hcf > 1)");
  for (std::size_t e = 0; e < t.equations.size(); ++e) {
    const FermatEquation& eq = t.equations[e];
    std::string name = "equation " + std::to_string(e + 1);
    std::set<int> used;
    auto use = [&](int v) {
      if (v < 0 || v >= t.ambient.size()) throw std::invalid_argument(name + ": variable " + zname(v) + " out of range");
      if (!used.insert(v).second) throw std::invalid_argument(name + ": variable " + zname(v) + " reused");
    };
    for (auto& term : eq.terms) use(term.var);
    for (auto& b : eq.blocks)
      for (int v : b.vars) use(v);
    int d = equation_degree(t, static_cast<int>(e));
    for (auto& term : eq.terms) {
      int dj = t.ambient[term.var] * term.exp;
      if (dj != d)
        throw std::invalid_argument(name + ": term degrees " + std::to_string(d) + " vs " + std::to_string(dj) + " differ");
    }
    for (auto& b : eq.blocks) {
      std::vector<int> bw;
      for (int v : b.vars) bw.push_back(t.ambient[v]);
      if (count_monomials(WeightSystem(bw.size() > 1 ? bw : std::vector<int>{bw[0], bw[0]}), d) == 0)
        throw std::invalid_argument(name + ": block " + b.name + " has no monomial of degree " + std::to_string(d));
    }
    rep.degrees.push_back(d);
  }
  std::vector<PlanStep> plan = t.plan;
  if (!plan.empty()) {
    std::set<int> retired;
    for (std::size_t i = 0; i < plan.size(); ++i) {
      const PlanStep& st = plan[i];
      if (st.equation < 0 || st.equation >= static_cast<int>(t.equations.size()))
        throw std::invalid_argument("plan step " + std::to_string(i + 1) + ": no such equation");
      if (!retired.insert(st.equation).second)
        throw std::invalid_argument("plan retires equation " + std::to_string(st.equation + 1) + " twice");
      if (!t.equations[st.equation].term_of(st.variable))
        throw std::invalid_argument("plan step " + std::to_string(i + 1) + ": " + zname(st.variable) +
                                    " is not a pure-power term of equation " + std::to_string(st.equation + 1));
      for (std::size_t j = i + 1; j < plan.size(); ++j)
        if (t.equations[plan[j].equation].mentions(st.variable) && !st.eliminate)
          throw std::invalid_argument("broken triangularity: " + zname(st.variable) + " (private to equation " +
                                      std::to_string(st.equation + 1) + ") appears in equation " +
                                      std::to_string(plan[j].equation + 1) + ", retired later");
    }
    if (retired.size() != t.equations.size()) throw std::invalid_argument("plan does not retire every equation");
  }
  if (t.has_generic_blocks()) {
    rep.notes.push_back("generic blocks present: recombination dry run skipped");
    return rep;
  }
  // dry run along the main branch of the projection chain
  FermatSystem s = system_of(t);
  std::vector<Labeled> rows;
  for (std::size_t e = 0; e < s.rows.size(); ++e) rows.push_back({"eq" + std::to_string(e + 1), s.rows[e]});
  unsigned mask = s.full_mask();
  std::vector<int> order;
  for (auto& st : plan) order.push_back(st.variable);
  auto equal_weights = [&](unsigned m) {
    auto sup = support_of(m);
    return std::all_of(sup.begin(), sup.end(), [&](int x) { return s.weights[x] == s.weights[sup[0]]; });
  };
  std::size_t step = 0;
  while (!rows.empty() && mask && (step < plan.size() || !equal_weights(mask))) {
    ++step;
    int v = -1;
    for (int x : order)
      if ((mask >> x & 1u) && v < 0) v = x;
    if (v < 0) v = 31 - __builtin_clz(mask);
    mask &= ~(1u << v);
    int p = -1;
    for (std::size_t i = 0; i < rows.size() && p < 0; ++i)
      if (rows[i].row.count(v)) p = static_cast<int>(i);
    if (p < 0) continue;
    std::vector<Labeled> next;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == p) continue;
      Labeled r = rows[i];
      auto it = r.row.find(v);
      if (it != r.row.end()) {
        Cyclotomic f = it->second / rows[p].row.at(v);
        for (auto& [w, c] : rows[p].row) r.row[w] -= f * c;
        std::erase_if(r.row, [](auto& kv) { return kv.second.is_zero(); });
        rep.recombinations.push_back(r.label + " -= (" + f.str() + ")*" + rows[p].label + " to clear " + zname(v));
        r.label += "'";
      }
      next.push_back(r);
    }
    Labeled rest = rows[p];
    rest.row.erase(v);
    rest.label += "|" + zname(v) + "=0";
    next.push_back(rest);
    rows.clear();
    for (auto& r : next)
      if (!r.row.empty()) rows.push_back(r);
  }
  return rep;
}

bool chern_class_zero(const FermatTower& t) {
  int total = 0;
  for (std::size_t e = 0; e < t.equations.size(); ++e) total += equation_degree(t, static_cast<int>(e));
  return total == t.ambient.sum();
}

// ---------------------------------------------------------------- linear algebra on pure powers

std::vector<std::map<int, Cyclotomic>> rref(std::vector<std::map<int, Cyclotomic>> rows) {
  std::vector<std::map<int, Cyclotomic>> done;
  while (!rows.empty()) {
    std::erase_if(rows, [](auto& r) {
      std::erase_if(r, [](auto& kv) { return kv.second.is_zero(); });
      return r.empty();
    });
    if (rows.empty()) break;
    // pivot on the smallest variable present
    int v = 1 << 30;
    std::size_t p = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].begin()->first < v) v = rows[i].begin()->first, p = i;
    auto piv = rows[p];
    rows.erase(rows.begin() + static_cast<long>(p));
    Cyclotomic lead = piv.at(v);
    for (auto& [w, c] : piv) c /= lead;
    for (auto& r : rows) {
      auto it = r.find(v);
      if (it == r.end()) continue;
      Cyclotomic f = it->second;
      for (auto& [w, c] : piv) r[w] -= f * c;
    }
    for (auto& r : done) {
      auto it = r.find(v);
      if (it == r.end()) continue;
      Cyclotomic f = it->second;
      for (auto& [w, c] : piv) r[w] -= f * c;
      std::erase_if(r, [](auto& kv) { return kv.second.is_zero(); });
    }
    done.push_back(piv);
  }
  return done;
}

SupportReduction reduce_support(const FermatSystem& s, unsigned mask) {
  std::vector<std::map<int, Cyclotomic>> rows;
  for (auto& r : s.rows) {
    std::map<int, Cyclotomic> x;
    for (auto& [v, c] : r)
      if (mask >> v & 1u) x[v] = c;
    rows.push_back(x);
  }
  auto red = rref(rows);
  SupportReduction out;
  out.mask = mask;
  int forced = 0;
  for (auto& r : red)
    if (r.size() == 1) {
      out.mask &= ~(1u << r.begin()->first);
      ++forced;
    }
  out.rank = static_cast<int>(red.size()) - forced;
  out.nonempty = out.mask && out.dimension() >= 0;
  return out;
}

TransversalityReport transversality_check(const FermatTower& t) {
  TransversalityReport rep;
  for (int v = 0; v < t.ambient.size(); ++v) {
    bool seen = std::any_of(t.equations.begin(), t.equations.end(), [&](auto& e) { return e.mentions(v); });
    if (!seen) {
      rep.transverse = false;
      rep.note = zname(v) + " appears in no equation: df and f share zeros on the " + zname(v) + " axis";
      return rep;
    }
  }
  if (t.has_generic_terms()) {
    rep.assumed = true;
    rep.note = "transversality by declared genericity of the marked coefficients (assumption)";
    return rep;
  }
  FermatSystem s = system_of(t);
  int r = static_cast<int>(s.rows.size());
  for (unsigned m = 1; m <= s.full_mask(); ++m) {
    std::vector<std::map<int, Cyclotomic>> rows;
    for (auto& row : s.rows) {
      std::map<int, Cyclotomic> x;
      for (auto& [v, c] : row)
        if (m >> v & 1u) x[v] = c;
      rows.push_back(x);
    }
    auto red = rref(rows);
    bool forced = std::any_of(red.begin(), red.end(), [](auto& x) { return x.size() == 1; });
    int rank = static_cast<int>(red.size());
    if (!forced && __builtin_popcount(m) > rank && rank < r) {
      rep.transverse = false;
      std::ostringstream os;
      os << "Jacobian drops rank on the stratum {";
      auto sup = support_of(m);
      for (std::size_t i = 0; i < sup.size(); ++i) os << (i ? "," : "") << sup[i];
      os << "}";
      rep.note = os.str();
      return rep;
    }
  }
  rep.note = t.equations.size() == 1 ? "Fermat equation in every variable" : "Jacobian has full rank on every stratum met";
  return rep;
}

// ---------------------------------------------------------------- singular locus

std::string to_string(SingularityClass c) {
  switch (c) {
  case SingularityClass::Z4_SCALAR: return "Z4_SCALAR";
  case SingularityClass::Z2_NEG: return "Z2_NEG";
  case SingularityClass::NONISOLATED: return "NONISOLATED";
  case SingularityClass::OTHER: return "OTHER";
  }
  return "?";
}

SingularityClass classify_singularity(int k, int dimension, const std::vector<int>& residues) {
  if (dimension >= 1) return SingularityClass::NONISOLATED;
  if (k == 4 && !residues.empty()) {
    bool ones = std::all_of(residues.begin(), residues.end(), [](int r) { return r % 4 == 1; });
    bool threes = std::all_of(residues.begin(), residues.end(), [](int r) { return r % 4 == 3; });
    if (ones || threes) return SingularityClass::Z4_SCALAR;
  }
  if (k == 2) return SingularityClass::Z2_NEG;
  return SingularityClass::OTHER;
}

std::string SingularityRecord::str() const {
  std::ostringstream os;
  os << stratum.str() << " k=" << stratum.k << " dim=" << intersection_dimension << " points=";
  if (point_count) os << *point_count;
  else os << "NOT_FINITE";
  os << " residues=(";
  for (std::size_t i = 0; i < transverse_residues.size(); ++i) os << (i ? "," : "") << transverse_residues[i];
  os << ") " << to_string(cls);
  if (deeper) os << " (deeper stratum)";
  return os.str();
}

namespace {

std::vector<int> residues_outside(const WeightSystem& w, unsigned mask, int k) {
  std::vector<int> r;
  for (int i = 0; i < w.size(); ++i)
    if (!(mask >> i & 1u)) r.push_back(w[i] % k);
  return r;
}

} // namespace

std::vector<SingularityRecord> singular_locus(const FermatTower& t, ChiMemo* memo) {
  TransversalityReport tr = transversality_check(t);
  if (!tr.transverse) throw std::domain_error("non-transverse input: " + tr.note);
  std::vector<SingularityRecord> out;
  for (const Stratum& st : singular_strata(t.ambient)) {
    FermatTower sub = t.restricted(st.support);
    bool blocks = sub.has_generic_blocks();
    if (blocks) {
      int eqs = 0;
      std::vector<int> degs;
      for (std::size_t e = 0; e < sub.equations.size(); ++e)
        if (!sub.equations[e].empty()) {
          ++eqs;
          degs.push_back(equation_degree(t, static_cast<int>(e)));
        }
      int dim = static_cast<int>(st.support.size()) - 1 - eqs;
      if (dim < 0) continue;
      SingularityRecord rec;
      rec.stratum = st;
      rec.intersection_dimension = dim;
      rec.transverse_residues = residues_outside(t.ambient, st.mask(), st.k);
      rec.cls = classify_singularity(st.k, dim, rec.transverse_residues);
      rec.sub_tower = sub;
      if (dim == 0) {
        int a = t.ambient[st.support[0]];
        for (int i : st.support)
          if (t.ambient[i] != a) throw std::domain_error("point count on a stratum with unequal weights and generic blocks is unsupported");
        std::vector<int> reduced;
        for (int d : degs) reduced.push_back(d / a);
        std::int64_t pts = 1;
        for (int d : reduced) pts *= d;
        rec.point_count = pts;
      }
      out.push_back(rec);
      continue;
    }
    FermatSystem s = system_of(sub);
    SupportReduction red = reduce_support(s, st.mask());
    if (!red.nonempty) continue;
    Stratum where = stratum_of(t.ambient, support_of(red.mask));
    SingularityRecord rec;
    rec.stratum = where;
    rec.intersection_dimension = red.dimension();
    rec.transverse_residues = residues_outside(t.ambient, red.mask, where.k);
    rec.cls = classify_singularity(where.k, rec.intersection_dimension, rec.transverse_residues);
    rec.sub_tower = t.restricted(where.support);
    if (rec.intersection_dimension == 0) rec.point_count = EulerEngine(memo).closed(s, red.mask);
    out.push_back(rec);
    for (unsigned j = (red.mask - 1) & red.mask; j; j = (j - 1) & red.mask) {
      Stratum deep = stratum_of(t.ambient, support_of(j));
      if (deep.k <= where.k) continue;
      SupportReduction rj = reduce_support(s, j);
      if (!rj.nonempty || rj.mask != j) continue;
      SingularityRecord d;
      d.stratum = deep;
      d.deeper = true;
      d.intersection_dimension = rj.dimension();
      d.transverse_residues = residues_outside(t.ambient, j, deep.k);
      d.cls = classify_singularity(deep.k, d.intersection_dimension, d.transverse_residues);
      d.sub_tower = t.restricted(deep.support);
      if (d.intersection_dimension == 0) d.point_count = EulerEngine(memo).open(s, j);
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.stratum.support < b.stratum.support; });
  out.erase(std::unique(out.begin(), out.end(), [](auto& a, auto& b) { return a.stratum.support == b.stratum.support; }),
            out.end());
  return out;
}

ClassicalInvariants classical_curve_invariants(ClassicalKind kind, const std::vector<int>& degrees, int ambient_dim) {
  ClassicalInvariants r;
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("degrees must be positive");
  if (kind == ClassicalKind::POINTS) {
    if (static_cast<int>(degrees.size()) != ambient_dim)
      throw std::invalid_argument("a point count needs as many hypersurfaces as the ambient dimension");
    std::int64_t p = 1;
    for (int d : degrees) p *= d;
    r.points = p;
    return r;
  }
  if (ambient_dim == 2 && degrees.size() == 1) {
    r.genus = static_cast<std::int64_t>(degrees[0] - 1) * (degrees[0] - 2) / 2;
    return r;
  }
  if (ambient_dim == 3 && degrees.size() == 2) {
    std::int64_t d1 = degrees[0], d2 = degrees[1];
    r.genus = d1 * d2 * (d1 + d2 - 4) / 2 + 1;
    return r;
  }
  throw std::invalid_argument("unsupported ambient dimension or codimension for classical invariants");
}

// ---------------------------------------------------------------- exact points

std::vector<WpsPoint> stratum_points(const FermatSystem& s, unsigned mask) {
  SupportReduction red = reduce_support(s, mask);
  if (!red.nonempty || red.mask != mask) return {};
  if (red.dimension() != 0) throw std::domain_error("stratum intersection is not zero-dimensional");
  std::vector<int> sup = support_of(mask);
  int d = -1;
  for (int v : sup) {
    if (!s.exponents[v]) throw std::domain_error("variable without a pure-power term on a zero-dimensional stratum");
    int dv = s.weights[v] * s.exponents[v];
    if (d >= 0 && d != dv) throw std::domain_error("unequal row degrees on a zero-dimensional stratum");
    d = dv;
  }
  std::vector<std::map<int, Cyclotomic>> rows;
  for (auto& r : s.rows) {
    std::map<int, Cyclotomic> x;
    for (auto& [v, c] : r)
      if (mask >> v & 1u) x[v] = c;
    rows.push_back(x);
  }
  auto red_rows = rref(rows);
  std::set<int> pivots;
  for (auto& r : red_rows) pivots.insert(r.begin()->first);
  int free_var = -1;
  for (int v : sup)
    if (!pivots.count(v)) free_var = v;
  std::map<int, Cyclotomic> u;
  u[free_var] = Cyclotomic(1);
  for (auto& r : red_rows) {
    int p = r.begin()->first;
    auto it = r.find(free_var);
    u[p] = it == r.end() ? Cyclotomic() : -it->second;
  }
  Cyclotomic base = u[sup[0]];
  WeightSystem w(s.weights);
  std::vector<std::pair<Rational, Rational>> polar;
  for (int v : sup) {
    auto sr = (u[v] / base).as_scaled_root();
    if (!sr) throw std::domain_error("unsupported stratum: coefficient of z" + std::to_string(v) +
                                     " is not a rational multiple of a root of unity");
    polar.push_back(*sr);
  }
  std::set<WpsPoint> pts;
  std::vector<int> idx(sup.size(), 0);
  while (true) {
    std::vector<Rational> mod, ph;
    for (std::size_t i = 0; i < sup.size(); ++i) {
      mod.push_back(polar[i].first);
      ph.push_back((polar[i].second + idx[i]) / s.exponents[sup[i]]);
    }
    pts.insert(canonical_point(w, sup, mod, ph, d));
    std::size_t i = 0;
    while (i < sup.size() && ++idx[i] == s.exponents[sup[i]]) idx[i++] = 0;
    if (i == sup.size()) break;
  }
  return {pts.begin(), pts.end()};
}

} // namespace spinfold
