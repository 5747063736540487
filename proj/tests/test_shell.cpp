#include "spinfold/shell.hpp"

#include <doctest.h>

#include <algorithm>

using namespace spinfold;

namespace {

std::string fixture(const std::string& name) { return scenario_dir() + "/" + name + ".scn"; }

const char* minimal = R"(format: 1
name: t
weights: 1 1 1 1 4 4
equation: z0^12 + z1^12 + z2^12 + z3^12 + z4^3 + z5^3
involution: pair(0,1; -) pair(2,3; -) pair(4,5)
)";

int error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.line;
  }
  return 0;
}

} // namespace

TEST_CASE("shipped fixture parses") {
  Scenario s = load_scenario(fixture("y44"));
  CHECK(s.name == "y44");
  CHECK(s.equations.size() == 1);
  CHECK(s.involution.has_value());
  CHECK(std::count_if(s.steps.begin(), s.steps.end(), [](auto& x) { return x.kind == StepKind::RESOLVE; }) == 1);
  CHECK(s.expect.at("b4") == 2446);
}

TEST_CASE("external data keeps its provenance") {
  Scenario s = load_scenario(fixture("cubics_k1"));
  REQUIRE(s.chi_w);
  CHECK(s.chi_w->value == 389);
  CHECK_FALSE(s.chi_w->provenance.empty());
  REQUIRE(s.fixed_points);
  CHECK(s.fixed_points->value == 3);
  Scenario p = load_scenario(fixture("y8_12"));
  CHECK(p.published.at("Y b4").value == 23231);
}

TEST_CASE("grammar errors carry line numbers") {
  std::string m = minimal;
  CHECK(error_line(m + "resolve: 2 2 2\n") == 6);
  CHECK(error_line(m + "sigma\nblowup: points swapped\n") == 7);
  CHECK(error_line(m + "sigma\nresolve: 2\nresolve: 2\n") == 8);
  CHECK(error_line(m + "sigma\nsigma\n") == 7);
  CHECK(error_line(m + "data: chi_W = 4887\n") == 6);
  CHECK(error_line(m + "data: chi_W = 4887 #\n") == 6);
  CHECK(error_line(m + "frobnicate: 3\n") == 6);
  CHECK(error_line("name: x\nformat: 1\n") == 1);
  CHECK(error_line("format: 2\n") == 1);
  CHECK(error_line("format: 1\nweights: 1 1 1 1 4 4\nequation: z0^12 + + z1\n") == 3);
  CHECK(error_line("format: 1\nweights: 1 1 1 1 4 4\nequation: z0^12\nsigma\n") == 4);
  try {
    parse_scenario(m + "quotient: 1/4 x\n");
  } catch (const ScenarioError& e) {
    CHECK(e.column == 11);
  }
  CHECK_NOTHROW(parse_scenario(m + "data: chi_W = 4887 # engine value\nsigma\nresolve: 2 2 2\n"));
}

TEST_CASE("reports") {
  Report r = run(load_scenario(fixture("y44")));
  CHECK(r.ok());
  REQUIRE(r.final_state);
  CHECK(r.final_state->betti.b[4] == 2446);
  CHECK(*r.final_state->moduli == 808);
  CHECK(r.final_state->holonomy == "Spin(7)");
  CHECK(r.text().find("[summary]") != std::string::npos);
  CHECK(r.dump().find("final.b4=2446") != std::string::npos);

  Report w = run(load_scenario(fixture("w22")));
  CHECK(w.ok());
  CHECK(*w.final_state->moduli == 296);

  Report c = run(load_scenario(fixture("cubics_k4")));
  CHECK(c.ok());
  CHECK(c.final_state->betti.b == std::array<std::int64_t, 5>{1, 0, 0, 33, 208});
}

TEST_CASE("the published-value discrepancy is flagged, not failed") {
  Report r = run(load_scenario(fixture("y8_12")));
  CHECK(r.ok());
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [](auto& c) { return c.name == "published Y b4"; });
  REQUIRE(it != r.checks.end());
  CHECK_FALSE(it->pass);
  CHECK_FALSE(it->hard);
  CHECK(r.stages.front().second.betti.b[4] == 23321);
}

TEST_CASE("a failing smoothing condition is reported") {
  Scenario s = parse_scenario(R"(format: 1
name: bad
weights: 1 1 1 1 4 4
equation: z0^12 + z1^12 + z2^12 + z3^12 + z4^3 + z5^3
involution: pair(0,1; -) pair(2,3; -) conj(4) conj(5)
sigma
resolve: 2
)");
  Report r = run(s);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.final_state.has_value());
  CHECK(r.error.find("smoothing condition") != std::string::npos);
}

TEST_CASE("every final state satisfies the A-hat identity and the chi relation") {
  for (auto& row : paper_table(scenario_dir(), 2)) {
    Report r = run(load_scenario(fixture(row.scenario)));
    REQUIRE(r.final_state);
    CHECK(ahat_check(*r.final_state));
    for (auto& [label, st] : r.stages) CHECK(st.betti.chi == st.betti.chi_from_betti());
  }
}

TEST_CASE("runs are deterministic") {
  for (auto name : {"w22_swapped", "octics_swapped", "y5_5_8_20"}) {
    Scenario s = load_scenario(fixture(name));
    ChiMemo memo;
    std::string a = run(s).text(), b = run(s, &memo).text(), c = run(s, &memo).text();
    CHECK(a == b);
    CHECK(b == c);
  }
  auto one = format_table(paper_table(scenario_dir(), 1));
  auto many = format_table(paper_table(scenario_dir(), 4));
  CHECK(one == many);
}

TEST_CASE("Betti table of the shipped fixtures") {
  auto rows = paper_table(scenario_dir());
  REQUIRE(rows.size() == 14);
  for (auto& r : rows) CHECK_MESSAGE(r.match(), r.scenario);
  CHECK(rows[11].got == std::array<std::int64_t, 3>{0, 6, 3730});
  CHECK(rows[9].got == std::array<std::int64_t, 3>{1, 0, 2444});
  CHECK(rows[13].got == std::array<std::int64_t, 3>{0, 0, 11662});
}

TEST_CASE("enumerator") {
  auto has = [](const std::vector<Candidate>& cs, std::vector<int> w) -> const Candidate* {
    for (auto& c : cs)
      if (c.weights.weights == w) return &c;
    return nullptr;
  };
  EnumFilters z4;
  z4.z4_only = true;
  auto cs = enumerate_candidates(24, z4);
  REQUIRE(has(cs, {1, 1, 1, 1, 4, 4}));
  CHECK(has(cs, {1, 1, 1, 1, 4, 4})->isolated_points == 3);
  REQUIRE(has(cs, {1, 1, 1, 1, 4, 8}));
  CHECK(has(cs, {1, 1, 1, 1, 4, 8})->isolated_points == 2);
  REQUIRE(has(cs, {1, 1, 1, 1, 8, 12}));
  CHECK(has(cs, {1, 1, 1, 1, 8, 12})->isolated_points == 1);

  EnumFilters z2;
  z2.z2_only = true;
  auto zs = enumerate_candidates(8, z2);
  REQUIRE(has(zs, {1, 1, 1, 1, 2, 2}));
  CHECK(has(zs, {1, 1, 1, 1, 2, 2})->isolated_points == 4);

  EnumFilters smooth;
  smooth.smooth = true;
  CHECK(has(enumerate_candidates(12, smooth), {1, 1, 1, 1, 1, 1}));

  EnumFilters pairs;
  pairs.pairs = true;
  pairs.z4_only = true;
  auto ps = enumerate_candidates(24, pairs);
  CHECK(has(ps, {1, 1, 1, 1, 4, 4}));

  CHECK_THROWS(enumerate_candidates(100, z4));
  CHECK(format_table({}).find("0 rows") != std::string::npos);
}

TEST_CASE("algebra checks") {
  auto res = algebra_checks(true, true);
  CHECK(res.size() == 12);
  for (auto& c : res) CHECK_MESSAGE(c.pass, c.name);
}
