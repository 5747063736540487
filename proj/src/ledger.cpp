#include "spinfold/ledger.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace spinfold {

bool BettiVector::consistent() const {
  for (auto x : b)
    if (x < 0) return false;
  if (chi != chi_from_betti()) return false;
  if (b4_plus && b4_minus && *b4_plus + *b4_minus != b[4]) return false;
  return true;
}

std::string BettiVector::str() const {
  std::ostringstream os;
  os << "b0=" << b[0] << " b1=" << b[1] << " b2=" << b[2] << " b3=" << b[3] << " b4=" << b[4] << " chi=" << chi;
  if (b4_plus) os << " b4+=" << *b4_plus;
  if (b4_minus) os << " b4-=" << *b4_minus;
  return os.str();
}

std::string to_string(ClassTag t) {
  switch (t) {
  case ClassTag::KAHLER: return "KAHLER";
  case ClassTag::EXC_POINT: return "EXC_POINT";
  case ClassTag::EXC_LOCUS: return "EXC_LOCUS";
  }
  return "?";
}

std::string to_string(ClassAction a) {
  switch (a) {
  case ClassAction::MINUS: return "MINUS";
  case ClassAction::PLUS: return "PLUS";
  case ClassAction::SWAPPED: return "SWAPPED";
  }
  return "?";
}

std::string to_string(Stage s) {
  switch (s) {
  case Stage::Y: return "Y";
  case Stage::Z: return "Z";
  case Stage::M: return "M";
  }
  return "?";
}

int ClassLedger::invariant_count() const {
  int n = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.action == ClassAction::PLUS) ++n;
    else if (e.action == ClassAction::SWAPPED && static_cast<int>(i) < e.partner) ++n;
  }
  return n;
}

bool ClassLedger::valid() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.action != ClassAction::SWAPPED) continue;
    if (e.partner < 0 || e.partner >= static_cast<int>(entries.size()) || e.partner == static_cast<int>(i)) return false;
    const auto& f = entries[e.partner];
    if (f.action != ClassAction::SWAPPED || f.partner != static_cast<int>(i)) return false;
  }
  return true;
}

std::string ClassLedger::str() const {
  std::map<std::string, int> counts;
  for (auto& e : entries) counts[to_string(e.tag) + ":" + to_string(e.action)]++;
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : counts) {
    os << (first ? "" : " ") << k << "x" << v;
    first = false;
  }
  return first ? "empty" : os.str();
}

std::optional<FiberData> fiber_constant(const std::string& label) {
  static const std::map<std::string, FiberData> table{
      {"C3/Z5", {"C3/Z5", 2, 2, 5}},
      {"C3/Z3", {"C3/Z3", 1, 1, 3}},
      {"C2/Z2", {"C2/Z2", 1, 0, 2}},
  };
  auto it = table.find(label);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::int64_t LocusBetti::chi() const {
  std::int64_t c = 0;
  for (std::size_t k = 0; k < b.size(); ++k) c += (k % 2 ? -1 : 1) * b[k];
  return c;
}

LocusBetti LocusBetti::from_low(int complex_dim, std::int64_t b0, std::int64_t b1, std::int64_t b2) {
  if (complex_dim == 1) {
    if (b2 != b0) throw std::invalid_argument("a compact curve has b2 = b0");
    return {{b0, b1, b2}};
  }
  if (complex_dim == 2) return {{b0, b1, b2, b1, b0}};
  throw std::invalid_argument("loci of complex dimension 1 or 2 only");
}

std::string LocusBetti::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
  os << ") chi=" << chi();
  return os.str();
}

namespace {

void refresh_b4(BettiVector& v) { v.b[4] = v.chi - 2 * v.b[0] + 2 * v.b[1] - 2 * v.b[2] + 2 * v.b[3]; }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

} // namespace

SpaceState lefschetz_seed(const WeightSystem& ambient, int codimension, std::int64_t chi) {
  if (codimension < 1 || codimension > 2) throw std::invalid_argument("codimension must be 1 or 2");
  if (ambient.m() - codimension != 4) throw std::invalid_argument("the variety must have complex dimension 4");
  SpaceState s;
  s.betti.b = {1, 0, 1, 0, 0};
  s.betti.chi = chi;
  refresh_b4(s.betti);
  s.classes.entries.push_back({ClassTag::KAHLER, 0, ClassAction::MINUS, -1});
  s.pi1 = "1";
  return s;
}

SpaceState quotient_holomorphic(const SpaceState& s, std::int64_t fix_chi, bool kahler_invariant) {
  require(s.stage == Stage::Y, "holomorphic quotient needs a Y-stage space");
  require((s.betti.chi + fix_chi) % 2 == 0, "chi + fixed-locus chi is odd");
  SpaceState r = s;
  r.betti.chi = (s.betti.chi + fix_chi) / 2;
  if (!kahler_invariant) {
    std::erase_if(r.classes.entries, [](auto& e) { return e.tag == ClassTag::KAHLER; });
    r.betti.b[2] = static_cast<std::int64_t>(r.classes.entries.size());
  }
  refresh_b4(r.betti);
  return r;
}

SpaceState blowup_points(const SpaceState& s, const PointOrbits& orbits, SingularityClass cls) {
  require(s.stage == Stage::Y, "blow-ups need a Y-stage space");
  if (cls != SingularityClass::Z4_SCALAR)
    throw std::domain_error("no crepant point resolution for points of class " + to_string(cls));
  require(orbits.fixed >= 0 && orbits.swapped_pairs >= 0, "negative point count");
  require(orbits.count() <= s.singular_points, "more points blown up than singular points present");
  SpaceState r = s;
  int n = orbits.count();
  r.betti.b[2] += n;
  r.betti.b[4] += n;
  r.betti.chi += 3 * n;
  r.singular_points -= n;
  int id = 0;
  for (auto& e : r.classes.entries)
    if (e.tag == ClassTag::EXC_POINT) id = std::max(id, e.id + 1);
  for (int i = 0; i < orbits.fixed; ++i) r.classes.entries.push_back({ClassTag::EXC_POINT, id++, ClassAction::MINUS, -1});
  for (int i = 0; i < orbits.swapped_pairs; ++i) {
    int a = static_cast<int>(r.classes.entries.size());
    r.classes.entries.push_back({ClassTag::EXC_POINT, id++, ClassAction::SWAPPED, a + 1});
    r.classes.entries.push_back({ClassTag::EXC_POINT, id++, ClassAction::SWAPPED, a});
  }
  return r;
}

SpaceState blowup_locus(const SpaceState& s, const LocusBetti& locus, const std::optional<FiberData>& fiber) {
  require(s.stage == Stage::Y, "blow-ups need a Y-stage space");
  if (!fiber) throw std::domain_error("missing fiber data for the locus resolution");
  SpaceState r = s;
  auto lb = [&](int k) -> std::int64_t { return k >= 0 && k < static_cast<int>(locus.b.size()) ? locus.b[k] : 0; };
  for (int k = 0; k <= 4; ++k) r.betti.b[k] += fiber->b2 * lb(k - 2) + fiber->b4 * lb(k - 4);
  r.betti.chi += locus.chi() * (fiber->chi - 1);
  int id = 0;
  for (auto& e : r.classes.entries)
    if (e.tag == ClassTag::EXC_LOCUS) id = std::max(id, e.id + 1);
  for (std::int64_t i = 0; i < fiber->b2 * lb(0); ++i)
    r.classes.entries.push_back({ClassTag::EXC_LOCUS, id, ClassAction::MINUS, -1});
  return r;
}

SpaceState quotient_antiholomorphic(const SpaceState& s, std::int64_t k_fixed) {
  require(s.stage == Stage::Y, "the antiholomorphic quotient needs a Y-stage space");
  require(s.betti.b[3] % 2 == 0, "b3 is odd");
  require((s.betti.chi + k_fixed) % 2 == 0, "chi + k is odd");
  require(s.classes.valid() && static_cast<std::int64_t>(s.classes.entries.size()) == s.betti.b[2],
          "class ledger does not match b2");
  SpaceState r = s;
  r.stage = Stage::Z;
  r.betti.chi = (s.betti.chi + k_fixed) / 2;
  r.betti.b[2] = s.classes.invariant_count();
  r.betti.b[3] = s.betti.b[3] / 2;
  refresh_b4(r.betti);
  r.classes.entries.clear();
  for (std::size_t i = 0; i < s.classes.entries.size(); ++i) {
    const auto& e = s.classes.entries[i];
    if (e.action == ClassAction::PLUS || (e.action == ClassAction::SWAPPED && static_cast<int>(i) < e.partner))
      r.classes.entries.push_back({e.tag, e.id, ClassAction::PLUS, -1});
  }
  r.singular_points = static_cast<int>(k_fixed);
  r.pi1 = "unknown";
  return r;
}

SpaceState glue_ale(const SpaceState& s, const std::vector<int>& n) {
  require(s.stage == Stage::Z, "ALE gluing needs a Z-stage space");
  require(static_cast<int>(n.size()) == s.singular_points, "one resolution choice is needed per singular point (" +
                                                                 std::to_string(s.singular_points) + ")");
  for (int x : n) require(x == 1 || x == 2, "resolution choices are 1 or 2");
  SpaceState r = s;
  r.stage = Stage::M;
  std::int64_t k = static_cast<std::int64_t>(n.size());
  r.betti.b[4] += k;
  r.betti.chi += k;
  const auto& b = r.betti.b;
  std::int64_t plus3 = b[2] - b[3] + 2 * b[4] + 25;
  std::int64_t minus3 = -b[2] + b[3] + b[4] - 25;
  require(plus3 % 3 == 0 && minus3 % 3 == 0, "b4+ and b4- are not integral");
  r.betti.b4_plus = plus3 / 3;
  r.betti.b4_minus = minus3 / 3;
  bool all_one = std::all_of(n.begin(), n.end(), [](int x) { return x == 1; });
  r.pi1 = all_one ? "Z2" : "1";
  r.holonomy = all_one ? "Z2 x| SU(4)" : "Spin(7)";
  r.moduli = 1 + *r.betti.b4_minus;
  r.singular_points = 0;
  return r;
}

bool ahat_check(const SpaceState& m) {
  if (!m.betti.b4_plus || !m.betti.b4_minus) return false;
  const auto& b = m.betti.b;
  return 24 == -1 + b[1] - b[2] + b[3] + *m.betti.b4_plus - 2 * *m.betti.b4_minus;
}

std::string H31Report::str() const {
  std::ostringstream os;
  if (!supported) {
    os << "h31 crosscheck: UNSUPPORTED (" << reason << ")";
    return os.str();
  }
  os << "h31 crosscheck (advisory): monomials=" << monomials << " aut=" << aut << " h31=" << h31
     << " predicted b4-=" << predicted_b4_minus;
  if (ledger_b4_minus) os << " ledger b4-=" << *ledger_b4_minus << " " << (match() ? "MATCH" : "MISMATCH");
  return os.str();
}

H31Report h31_crosscheck(const WeightSystem& ambient, int degree, std::int64_t b2_y, std::int64_t b2_z,
                         std::int64_t k, std::optional<std::int64_t> ledger_b4_minus, bool plain_pipeline) {
  H31Report r;
  r.ledger_b4_minus = ledger_b4_minus;
  if (!plain_pipeline) {
    r.reason = "quotients or partial resolutions precede sigma";
    return r;
  }
  if (ambient.size() != 6) {
    r.reason = "hypersurfaces in a 5-dimensional weighted projective space only";
    return r;
  }
  r.supported = true;
  r.monomials = count_monomials(ambient, degree);
  r.aut = aut_dimension(ambient);
  r.h31 = (r.monomials - 1) - r.aut;
  r.predicted_b4_minus = r.h31 + b2_y - b2_z - 1 + k;
  return r;
}

} // namespace spinfold
