#include "spinfold/shell.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#ifndef SPINFOLD_SCENARIO_DIR
#define SPINFOLD_SCENARIO_DIR "scenarios"
#endif

namespace spinfold {

namespace {

std::string support_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

std::vector<int> sorted(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::string state_str(const SpaceState& s) {
  std::ostringstream os;
  os << s.betti.str() << " | H2: " << s.classes.str();
  if (s.stage != Stage::M) os << " | C4/Z4 points: " << s.singular_points;
  if (s.stage == Stage::M) os << " | pi1=" << s.pi1 << " holonomy=" << s.holonomy;
  return os.str();
}

struct Runner {
  Runner(const Scenario& s, ChiMemo* memo, Report& r) : s(s), memo(memo), r(r) {}

  const Scenario& s;
  ChiMemo* memo;
  Report& r;
  std::string where = "setup";

  FermatTower t;
  bool generic = false;
  std::vector<SingularityRecord> recs;
  std::vector<std::pair<WpsPoint, SingularityClass>> sing;
  std::vector<std::vector<int>> unresolved;
  std::vector<FixedComponent> loci; // positive-dimensional components of a quotient
  std::optional<HolomorphicAction> beta;
  std::optional<FixedPointSet> fs;
  SpaceState state;
  SpaceState seed;
  SpaceState last_y;
  std::optional<SpaceState> z_state;
  std::int64_t k_fixed = 0;
  bool plain = true;
  bool bookkeeping = true;

  void check(const std::string& name, bool pass, const std::string& detail = "", bool hard = true) {
    r.checks.push_back({name, pass, hard, detail});
  }

  void stage(const std::string& label) {
    r.stages.push_back({label, state});
    if (!state.betti.consistent()) bookkeeping = false;
  }

  int z4_count() const {
    return static_cast<int>(std::count_if(sing.begin(), sing.end(),
                                          [](auto& p) { return p.second == SingularityClass::Z4_SCALAR; }));
  }

  void compare_published(const std::string& stage_name) {
    for (auto& [key, d] : s.published) {
      if (key.rfind(stage_name + " ", 0) != 0) continue;
      std::string q = key.substr(stage_name.size() + 1);
      std::optional<std::int64_t> got;
      const auto& b = state.betti;
      if (q == "b2") got = b.b[2];
      else if (q == "b3") got = b.b[3];
      else if (q == "b4") got = b.b[4];
      else if (q == "chi") got = b.chi;
      if (!got) throw std::invalid_argument("unknown published quantity '" + q + "'");
      std::ostringstream os;
      if (*got == d.value) os << "published " << d.value << " agrees";
      else
        os << "DISCREPANCY: published " << d.value << ", derived " << *got << " (line " << d.line << ": "
           << d.provenance << ")";
      check("published " + key, *got == d.value, os.str(), false);
    }
  }

  const FixedPointSet& fixed_set() {
    if (!fs) {
      if (beta) {
        std::vector<WpsPoint> pts;
        for (auto& [p, c] : sing) pts.push_back(p);
        fs = fixed_points_mod(*s.involution, t, *beta, pts);
      } else {
        fs = fixed_points(*s.involution, t);
      }
    }
    return *fs;
  }

  void setup() {
    t = s.tower();
    where = "validation";
    ValidationReport v = validate_tower(t);
    r.inventory.push_back("ambient: CP" + t.ambient.str());
    for (std::size_t e = 0; e < t.equations.size(); ++e)
      r.inventory.push_back("equation " + std::to_string(e + 1) + ": " + t.equations[e].str() + " (degree " +
                            std::to_string(v.degrees[e]) + ")");
    for (auto& x : v.recombinations) r.inventory.push_back("recombination: " + x);
    for (auto& x : v.notes) r.inventory.push_back("note: " + x);
    check("vanishing first Chern class", chern_class_zero(t), "degree sum equals weight sum");
    TransversalityReport tr = transversality_check(t);
    check("transversality", tr.transverse, (tr.assumed ? "assumed: " : "") + tr.note);

    where = "euler characteristic";
    generic = t.has_generic_blocks();
    std::int64_t chi = 0;
    if (generic) {
      if (!s.chi_w) throw std::invalid_argument("chi of a tower with generic blocks must be supplied as data");
      chi = s.chi_w->value;
      r.inventory.push_back("chi: " + std::to_string(chi) + " from data (line " + std::to_string(s.chi_w->line) +
                            ": " + s.chi_w->provenance + ")");
    } else {
      chi = chi_tower(t, memo);
      r.inventory.push_back("chi: " + std::to_string(chi));
      if (s.chi_w)
        check("chi data cross-check", chi == s.chi_w->value,
              "computed " + std::to_string(chi) + ", data " + std::to_string(s.chi_w->value));
    }

    where = "singular locus";
    recs = singular_locus(t, memo);
    if (recs.empty()) r.inventory.push_back("singular locus: empty");
    for (auto& rec : recs) {
      r.inventory.push_back("singular: " + rec.str());
      if (rec.intersection_dimension > 0) unresolved.push_back(rec.stratum.support);
    }
    int z4 = 0;
    if (generic) {
      for (auto& rec : recs)
        if (rec.intersection_dimension == 0 && rec.cls == SingularityClass::Z4_SCALAR && rec.point_count)
          z4 += static_cast<int>(*rec.point_count);
    } else {
      sing = isolated_singular_points(t);
      z4 = z4_count();
    }

    where = "Lefschetz seed";
    state = lefschetz_seed(t.ambient, static_cast<int>(t.equations.size()), chi);
    state.singular_points = z4;
    seed = state;
    stage("Y");

    if (s.involution) {
      where = "involution";
      InvolutionValidation iv = validate_involution(*s.involution, t.ambient);
      std::ostringstream os;
      os << "sigma: " << s.involution->str() << " (sigma^2 = e(" << iv.t << ") as a weighted scalar)";
      r.inventory.push_back(os.str());
      check("sigma preserves the variety", preserves_variety(*s.involution, t));
    }
  }

  void quotient(const ScenarioStep& st) {
    plain = false;
    if (static_cast<int>(st.phases.size()) != t.ambient.size())
      throw std::invalid_argument("one phase per coordinate is needed");
    beta = HolomorphicAction{st.phases};
    HolomorphicQuotient hq = analyze_holomorphic(t, *beta, memo);
    std::ostringstream os;
    os << "quotient: beta^2 = e(" << hq.t << "), fixed locus chi " << hq.fix_chi;
    r.inventory.push_back(os.str());
    std::set<WpsPoint> in_components;
    std::vector<std::pair<WpsPoint, SingularityClass>> next;
    const WeightSystem& w = t.ambient;
    for (auto& c : hq.components) {
      r.inventory.push_back("  fixed component " + support_str(c.support) + ": dim " + std::to_string(c.dimension) +
                            ", chi " + std::to_string(c.chi) + ", transverse " + c.type.label + " " +
                            to_string(c.type.cls));
      if (c.dimension > 0) {
        loci.push_back(c);
        unresolved.push_back(c.support);
      }
      for (auto& p : c.points) {
        WpsPoint q = beta->orbit_rep(w, p);
        if (in_components.insert(q).second) next.push_back({q, c.type.cls});
      }
    }
    for (auto& [p, cls] : sing) {
      WpsPoint q = beta->orbit_rep(w, p);
      if (in_components.insert(q).second) next.push_back({q, cls});
    }
    std::sort(next.begin(), next.end(), [](auto& a, auto& b) { return a.first < b.first; });
    sing = next;
    if (s.involution) check("sigma normalizes the quotient group", normalizes(*s.involution, *beta, w));
    state = quotient_holomorphic(state, hq.fix_chi);
    state.singular_points = z4_count();
    stage("Y/beta");
  }

  void blowup_locus_step(const ScenarioStep& st) {
    plain = false;
    std::vector<int> sup = sorted(st.support);
    int dim = 0;
    std::int64_t chi = 0;
    std::string label;
    auto comp = std::find_if(loci.begin(), loci.end(), [&](auto& c) { return sorted(c.support) == sup; });
    auto rec = std::find_if(recs.begin(), recs.end(), [&](auto& x) {
      return x.intersection_dimension > 0 && sorted(x.stratum.support) == sup;
    });
    if (comp != loci.end()) {
      dim = comp->dimension;
      chi = comp->chi;
      label = comp->type.label;
    } else if (rec != recs.end()) {
      dim = rec->intersection_dimension;
      chi = chi_on_closed_stratum(t, sup, memo);
      label = transverse_type(t.ambient, sup).label;
    } else {
      throw std::invalid_argument("no positive-dimensional singular locus on " + support_str(sup));
    }
    auto u = std::find(unresolved.begin(), unresolved.end(), sup);
    if (u == unresolved.end()) throw std::invalid_argument("locus " + support_str(sup) + " blown up twice");
    unresolved.erase(u);
    if (dim > 2) throw std::invalid_argument("loci of complex dimension 1 or 2 only");

    LocusBetti lb;
    auto d = std::find_if(s.loci.begin(), s.loci.end(), [&](auto& x) { return sorted(x.support) == sup; });
    if (d != s.loci.end()) {
      lb = LocusBetti::from_low(dim, d->b0, d->b1, d->b2);
      check("locus chi cross-check on " + support_str(sup), lb.chi() == chi,
            "data " + std::to_string(lb.chi()) + ", computed " + std::to_string(chi));
    } else if (dim == 1) {
      lb = LocusBetti::from_low(1, 1, 2 - chi, 1);
    } else {
      lb = LocusBetti::from_low(2, 1, 0, chi - 2);
    }
    check("fiber type on " + support_str(sup), label == st.fiber, "declared " + st.fiber + ", found " + label);
    std::optional<FiberData> fiber;
    auto f = s.fibers.find(st.fiber);
    if (f != s.fibers.end()) fiber = f->second.fiber;
    else fiber = fiber_constant(st.fiber);
    r.inventory.push_back("blow-up along " + support_str(sup) + ": locus Betti " + lb.str() + ", fiber " + st.fiber);
    state = blowup_locus(state, lb, fiber);
    stage("Y blown up along " + support_str(sup));
  }

  void blowup_swapped() {
    plain = false;
    if (!s.involution) throw std::invalid_argument("swapped points need an involution");
    int pairs = 0;
    if (generic) {
      if (!s.fixed_points) throw std::invalid_argument("fixed points of a tower with generic blocks must be supplied as data");
      std::int64_t rest = state.singular_points - s.fixed_points->value;
      if (rest < 0 || rest % 2) throw std::invalid_argument("singular points not fixed by sigma do not pair up");
      pairs = static_cast<int>(rest / 2);
    } else {
      const FixedPointSet& f = fixed_set();
      pairs = static_cast<int>(f.swapped.size());
      std::set<WpsPoint> gone;
      for (auto& [p, q] : f.swapped) {
        gone.insert(p);
        gone.insert(q);
      }
      std::erase_if(sing, [&](auto& x) { return gone.count(x.first) > 0; });
    }
    r.inventory.push_back("blow-up at " + std::to_string(pairs) + " pair(s) of singular points swapped by sigma");
    state = blowup_points(state, PointOrbits{0, pairs});
    stage("Y blown up at swapped points");
  }

  void sigma() {
    last_y = state;
    ConditionReport cr;
    if (generic) {
      if (!s.fixed_points) throw std::invalid_argument("fixed points of a tower with generic blocks must be supplied as data");
      k_fixed = s.fixed_points->value;
      r.inventory.push_back("fixed points: " + std::to_string(k_fixed) + " from data (line " +
                            std::to_string(s.fixed_points->line) + ": " + s.fixed_points->provenance + ")");
      for (auto& rec : recs)
        if (rec.intersection_dimension == 0 && rec.cls != SingularityClass::Z4_SCALAR) cr.isolated_z4 = false;
      if (!unresolved.empty()) cr.isolated_z4 = false;
      cr.fixed_is_singular = k_fixed == state.singular_points;
      cr.notes.push_back("fixed set compared with the singular set by count only");
      cr.topology = "simple connectivity and h20 = 0 granted by the Lefschetz hyperplane theorem";
    } else {
      const FixedPointSet& f = fixed_set();
      k_fixed = f.count;
      std::ostringstream os;
      os << "fixed points: " << k_fixed;
      for (auto& p : f.points) os << " " << p.str(t.ambient);
      r.inventory.push_back(os.str());
      if (s.fixed_points)
        check("fixed-point data cross-check", k_fixed == s.fixed_points->value,
              "computed " + std::to_string(k_fixed) + ", data " + std::to_string(s.fixed_points->value));
      cr = evaluate_condition(sing, static_cast<int>(unresolved.size()), f.points, {}, !beta);
    }
    std::string notes;
    for (auto& n : cr.notes) notes += (notes.empty() ? "" : "; ") + n;
    check("isolated C4/Z4 singularities", cr.isolated_z4, notes);
    check("fixed set equals singular set", cr.fixed_is_singular, notes);
    check("topology", true, cr.topology, false);
    compare_published("Y");
    if (!cr.pass()) throw std::domain_error("the smoothing condition fails; the sigma quotient is not taken");
    state = quotient_antiholomorphic(state, k_fixed);
    z_state = state;
    stage("Z");
    compare_published("Z");
  }

  void resolve(const ScenarioStep& st) {
    state = glue_ale(state, st.choices);
    stage("M");
    compare_published("M");
    check("A-hat identity", ahat_check(state), "24 = -1 + b1 - b2 + b3 + b4+ - 2 b4-");
    const auto& zb = z_state->betti.b;
    std::int64_t k = static_cast<std::int64_t>(st.choices.size());
    std::int64_t predicted = (last_y.betti.chi + k_fixed) / 2 - 2 - 2 * zb[2] + 2 * zb[3] + k;
    check("b4 bookkeeping identity", predicted == state.betti.b[4],
          "b4(M) = (chi(Y) + k)/2 - 2 - 2 b2(Z) + 2 b3(Z) + k = " + std::to_string(predicted));
    H31Report h = h31_crosscheck(t.ambient, equation_degree(t, 0), seed.betti.b[2], zb[2], k, state.betti.b4_minus,
                                 plain && t.equations.size() == 1);
    check("h31 advisory", !h.supported || h.match(), h.str(), false);
    r.final_state = state;
  }

  void expectations() {
    if (s.expect.empty()) return;
    for (auto& [key, want] : s.expect) {
      std::optional<std::int64_t> got;
      if (key == "chi_Y") got = seed.betti.chi;
      else if (key == "fixed") got = k_fixed;
      else if (r.final_state) {
        const auto& b = r.final_state->betti;
        if (key == "b2") got = b.b[2];
        else if (key == "b3") got = b.b[3];
        else if (key == "b4") got = b.b[4];
        else if (key == "b4+") got = b.b4_plus;
        else if (key == "b4-") got = b.b4_minus;
        else if (key == "moduli") got = r.final_state->moduli;
      }
      check("expect " + key, got && *got == want,
            "expected " + std::to_string(want) + ", got " + (got ? std::to_string(*got) : std::string("nothing")));
    }
  }

  void go() {
    setup();
    for (auto& st : s.steps) {
      switch (st.kind) {
      case StepKind::QUOTIENT: where = "quotient (line " + std::to_string(st.line) + ")"; quotient(st); break;
      case StepKind::BLOWUP_LOCUS: where = "blow-up (line " + std::to_string(st.line) + ")"; blowup_locus_step(st); break;
      case StepKind::BLOWUP_SWAPPED: where = "blow-up (line " + std::to_string(st.line) + ")"; blowup_swapped(); break;
      case StepKind::SIGMA: where = "sigma quotient (line " + std::to_string(st.line) + ")"; sigma(); break;
      case StepKind::RESOLVE: where = "resolution (line " + std::to_string(st.line) + ")"; resolve(st); break;
      }
    }
    check("chi relation at every stage", bookkeeping, "chi = 2b0 - 2b1 + 2b2 - 2b3 + b4");
    expectations();
  }
};

} // namespace

bool Report::ok() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass || !c.hard; });
}

std::string Report::text() const {
  std::ostringstream os;
  os << "scenario: " << name << "\n";
  if (!title.empty()) os << "title: " << title << "\n";
  os << "\n[inventory]\n";
  for (auto& x : inventory) os << "  " << x << "\n";
  os << "\n[stages]\n";
  for (auto& [label, st] : stages) os << "  " << label << ": " << state_str(st) << "\n";
  os << "\n[checks]\n";
  for (auto& c : checks) {
    std::string tag = c.hard ? (c.pass ? "PASS" : "FAIL") : (c.pass ? "NOTE" : "FLAG");
    os << "  " << tag << "  " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (!error.empty()) os << "\n[error]\n  " << error << "\n";
  if (final_state) {
    const auto& b = final_state->betti;
    os << "\n[summary]\n  (b2,b3,b4) = (" << b.b[2] << "," << b.b[3] << "," << b.b[4] << ")  b4+ = " << *b.b4_plus
       << "  b4- = " << *b.b4_minus << "  pi1 = " << final_state->pi1 << "  holonomy " << final_state->holonomy
       << "  moduli dimension " << *final_state->moduli << "\n";
  }
  os << "\nresult: " << (ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

std::string Report::dump() const {
  std::ostringstream os;
  os << "name=" << name << "\n";
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& [label, st] = stages[i];
    std::string p = "stage." + std::to_string(i) + ".";
    os << p << "label=" << label << "\n";
    for (int k = 0; k <= 4; ++k) os << p << "b" << k << "=" << st.betti.b[k] << "\n";
    os << p << "chi=" << st.betti.chi << "\n";
  }
  for (auto& c : checks)
    os << "check." << c.name << "=" << (c.hard ? (c.pass ? "PASS" : "FAIL") : (c.pass ? "NOTE" : "FLAG")) << "\n";
  if (final_state) {
    const auto& b = final_state->betti;
    os << "final.b2=" << b.b[2] << "\nfinal.b3=" << b.b[3] << "\nfinal.b4=" << b.b[4] << "\nfinal.b4+=" << *b.b4_plus
       << "\nfinal.b4-=" << *b.b4_minus << "\nfinal.moduli=" << *final_state->moduli << "\nfinal.pi1="
       << final_state->pi1 << "\nfinal.holonomy=" << final_state->holonomy << "\n";
  }
  if (!error.empty()) os << "error=" << error << "\n";
  os << "ok=" << (ok() ? 1 : 0) << "\n";
  return os.str();
}

Report run(const Scenario& s, ChiMemo* memo) {
  Report r;
  r.name = s.name;
  r.title = s.title;
  Runner x(s, memo, r);
  try {
    x.go();
  } catch (const std::exception& e) {
    r.error = x.where + ": " + e.what();
  }
  return r;
}

std::string scenario_dir() {
  if (const char* d = std::getenv("SPINFOLD_SCENARIOS"); d && *d) return d;
  return SPINFOLD_SCENARIO_DIR;
}

std::vector<TableRow> paper_table(const std::string& dir, int threads) {
  static const std::vector<std::pair<std::string, std::array<std::int64_t, 3>>> table{
      {"cubics_k0", {4, 33, 200}},   {"cubics_k1", {3, 33, 202}},    {"cubics_k2", {2, 33, 204}},
      {"cubics_k3", {1, 33, 206}},   {"cubics_k4", {0, 33, 208}},    {"w22_swapped", {1, 0, 908}},
      {"w22", {0, 0, 910}},          {"octics_swapped", {1, 0, 1292}}, {"octics", {0, 0, 1294}},
      {"y44_swapped", {1, 0, 2444}}, {"y44", {0, 0, 2446}},          {"y5_5_8_20", {0, 6, 3730}},
      {"y48", {0, 0, 4750}},         {"y8_12", {0, 0, 11662}},
  };
  auto one = [&](std::size_t i) {
    TableRow row;
    row.scenario = table[i].first;
    row.expected = table[i].second;
    try {
      Scenario s = load_scenario(dir + "/" + row.scenario + ".scn");
      Report r = run(s, &shared_memo());
      if (!r.ok()) row.error = r.error.empty() ? "hard check failed" : r.error;
      if (r.final_state) {
        const auto& b = r.final_state->betti.b;
        row.got = std::array<std::int64_t, 3>{b[2], b[3], b[4]};
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    return row;
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<TableRow> rows(table.size());
  std::vector<std::future<void>> jobs;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i; (i = next++) < table.size();) rows[i] = one(i);
    }));
  for (auto& j : jobs) j.get();
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
  auto triple = [](const std::array<std::int64_t, 3>& a) {
    return "(" + std::to_string(a[0]) + ", " + std::to_string(a[1]) + ", " + std::to_string(a[2]) + ")";
  };
  std::ostringstream os;
  int diffs = 0;
  for (auto& r : rows) {
    std::string got = r.got ? triple(*r.got) : "-";
    std::string line = r.scenario;
    line.resize(16, ' ');
    std::string e = triple(r.expected);
    e.resize(18, ' ');
    got.resize(18, ' ');
    bool ok = r.match() && r.error.empty();
    if (!ok) ++diffs;
    os << line << e << got << (ok ? "MATCH" : "DIFF");
    if (!r.error.empty()) os << "  " << r.error;
    os << "\n";
  }
  os << rows.size() << " rows, " << diffs << " diff(s)\n";
  return os.str();
}

std::vector<CheckResult> algebra_checks(bool forms, bool groups) {
  std::vector<CheckResult> out;
  if (forms) {
    MultiForm omega = cayley_form();
    for (auto [name, p] : {std::pair{"z", CoordinatePairing::z_coordinates()},
                           std::pair{"w", CoordinatePairing::w_coordinates()}}) {
      int found = -1;
      for (int q = 0; q < 4 && found < 0; ++q)
        if (su4_induced_form(p, q) == omega) found = q;
      out.push_back({std::string("SU(4) form equals the Cayley form in the ") + name + "-pairing", found >= 0, true,
                     found >= 0 ? "theta phase i^" + std::to_string(found) : "no phase matches"});
    }
  }
  if (groups) {
    MultiForm omega = cayley_form();
    auto preserves = [&](const GroupTable& g) {
      return std::all_of(g.elements.begin(), g.elements.end(), [&](auto& e) { return pullback(e, omega) == omega; });
    };
    GroupTable g = generate_group({alpha_g(), beta_g()});
    out.push_back({"G has order 8", g.order() == 8, true, "order " + std::to_string(g.order())});
    bool rel = g.relation_holds("aaaa", "") && g.relation_holds("bbbb", "") && g.relation_holds("aa", "bb") &&
               g.relation_holds("ab", "baaa");
    out.push_back({"G relations a^4 = b^4 = 1, a^2 = b^2, ab = ba^3", rel, true, ""});
    FreenessReport fr = acts_freely(g);
    out.push_back({"G acts freely on R^8 minus 0", fr.free, true,
                   fr.free ? "" : "element " + g.elements[fr.element].str() + " has a fixed vector"});
    out.push_back({"G preserves the Cayley form", preserves(g), true, ""});
    for (int n : {1, 3, 5}) {
      GroupTable h = generate_group({alpha_gn(n), beta_gn(n), gamma_gn(n)});
      std::string tag = "G^" + std::to_string(n);
      out.push_back({tag + " has order " + std::to_string(8 * n), h.order() == 8 * n, true,
                     "order " + std::to_string(h.order())});
      out.push_back({tag + " acts freely", acts_freely(h).free, true, ""});
    }
  }
  return out;
}

} // namespace spinfold
