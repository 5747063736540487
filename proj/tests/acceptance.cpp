#include "spinfold/shell.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace spinfold;

namespace {

struct Criterion {
  std::string title;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
};

Report load_run(const std::string& name) { return run(load_scenario(scenario_dir() + "/" + name + ".scn"), &shared_memo()); }

void euler(Criterion& c) {
  std::vector<std::int64_t> chain;
  c.equal(chi_fermat(WeightSystem({1, 1, 1, 1, 4, 4}), {12, 12, 12, 12, 3, 3}, &chain), 4887, "chi(1,1,1,1,4,4)");
  c.expect(chain == std::vector<std::int64_t>{12, -108, 1224, -2436, 4887}, "prefix chain 12, -108, 1224, -2436");
  c.equal(chi_fermat(WeightSystem({1, 1, 1, 1, 4, 8}), {16, 16, 16, 16, 4, 2}), 9498, "chi(1,1,1,1,4,8)");
  c.equal(chi_fermat(WeightSystem({1, 1, 1, 1, 8, 12}), {24, 24, 24, 24, 3, 2}), 23325, "chi(1,1,1,1,8,12)");
  c.equal(chi_fermat_uncorrected(WeightSystem({1, 1, 1, 1, 8, 12}), {24, 24, 24, 24, 3, 2}), 23326,
          "uncorrected chi(1,1,1,1,8,12)");
  FermatTower w = fermat_hypersurface(WeightSystem({1, 1, 1, 1, 2, 2}));
  c.equal(chi_tower(w), 2708, "chi(W)");
  c.equal(chi_on_closed_stratum(w, {0, 1, 2, 3}), 304, "chi(S)");
  FermatTower t = load_scenario(scenario_dir() + "/octics.scn").tower();
  c.equal(chi_tower(t), 2580, "chi of the octic intersection");
}

void ledger(Criterion& c) {
  struct Want {
    const char* name;
    std::array<std::int64_t, 3> b;
    std::int64_t plus, minus;
    std::int64_t moduli;
  };
  std::vector<Want> wants{
      {"y44", {0, 0, 2446}, 1639, 807, 808},       {"y44_swapped", {1, 0, 2444}, 1638, 806, 807},
      {"y48", {0, 0, 4750}, 3175, 1575, 1576},     {"y8_12", {0, 0, 11662}, 7783, 3879, 3880},
      {"y5_5_8_20", {0, 6, 3730}, 2493, 1237, 1238}, {"w22", {0, 0, 910}, 615, 295, 296},
      {"w22_swapped", {1, 0, 908}, 614, 294, 295}, {"octics", {0, 0, 1294}, 871, 423, 424},
      {"octics_swapped", {1, 0, 1292}, 870, 422, 423},
  };
  for (int k = 0; k <= 4; ++k)
    wants.push_back({nullptr, {4 - k, 33, 200 + 2 * k}, 132 + k, 68 + k, 69 + k});
  for (std::size_t i = 0; i < wants.size(); ++i) {
    auto& w = wants[i];
    std::string name = w.name ? w.name : "cubics_k" + std::to_string(i - 9);
    Report r = load_run(name);
    if (!r.ok() || !r.final_state) {
      c.expect(false, name + ": " + (r.error.empty() ? "hard check failed" : r.error));
      continue;
    }
    const auto& b = r.final_state->betti;
    c.expect(std::array<std::int64_t, 3>{b.b[2], b.b[3], b.b[4]} == w.b, name + " Betti triple");
    c.equal(*b.b4_plus, w.plus, name + " b4+");
    c.equal(*b.b4_minus, w.minus, name + " b4-");
    c.equal(*r.final_state->moduli, w.moduli, name + " moduli");
  }
}

void table(Criterion& c) {
  auto rows = paper_table(scenario_dir());
  c.equal(rows.size(), 14u, "rows");
  for (auto& r : rows) c.expect(r.match() && r.error.empty(), r.scenario + " " + r.error);
}

void fixed(Criterion& c) {
  auto count = [&](const std::string& name) { return load_scenario(scenario_dir() + "/" + name + ".scn"); };
  for (auto [name, want] : std::vector<std::pair<std::string, int>>{
           {"y44", 3}, {"y44_swapped", 1}, {"y48", 2}, {"y8_12", 1}, {"octics", 4}}) {
    Scenario s = count(name);
    c.equal(fixed_points(*s.involution, s.tower()).count, want, name + " fixed points");
  }
  Scenario s = count("octics_swapped");
  FixedPointSet f = fixed_points(*s.involution, s.tower());
  c.equal(f.count, 2, "octics_swapped fixed points");
  c.equal(f.swapped.size(), 1u, "octics_swapped swapped pairs");
  int family = 0;
  for (int a = 1; a <= 9; a += 2)
    for (int b = a; b <= 9; b += 2)
      for (int e = 2; e <= 24; e += 2) {
        int d = 2 * (a + b + e);
        if (d % a || d % b || d % e || std::gcd(std::gcd(a, b), e) != 1) continue;
        FermatTower y = fermat_hypersurface(WeightSystem({a, a, b, b, e, e}));
        auto sig = InvolutionSpec::parse("pair(0,1; -) pair(2,3; -) pair(4,5)");
        validate_involution(sig, y.ambient);
        c.equal(fixed_points(sig, y).count, d / e, "k5 for " + y.ambient.str());
        ++family;
      }
  c.expect(family >= 4, "parametric family too small");
}

void algebra(Criterion& c) {
  for (auto& r : algebra_checks(true, true)) c.expect(r.pass, r.name + " " + r.detail);
}

void cross(Criterion& c) {
  for (auto& row : paper_table(scenario_dir())) {
    Report r = load_run(row.scenario);
    c.expect(r.final_state && ahat_check(*r.final_state), row.scenario + " A-hat identity");
  }
  H31Report h = h31_crosscheck(WeightSystem({1, 1, 1, 1, 4, 4}), 12, 1, 0, 3, 807);
  c.equal(h.h31, 804, "h31");
  c.equal(h.predicted_b4_minus, 807, "predicted b4-");
  c.expect(h.match(), "h31 prediction matches the ledger");
  Report r = load_run("y8_12");
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [](auto& x) { return x.name == "published Y b4"; });
  c.expect(r.ok(), "discrepancy must not fail the run");
  c.expect(it != r.checks.end() && !it->pass && !it->hard, "published 23231 flagged");
  c.expect(r.stages.front().second.betti.b[4] == 23321, "derived b4(Y) = 23321");
}

void properties(Criterion& c) {
  for (int d = 2; d <= 16; ++d) {
    std::int64_t g = static_cast<std::int64_t>(d - 1) * (d - 2) / 2, dd = d;
    c.equal(chi_fermat(WeightSystem({1, 1, 1}), {d, d, d}), 2 - 2 * g, "plane curve d=" + std::to_string(d));
    c.equal(chi_fermat(WeightSystem({1, 1, 1, 1}), {d, d, d, d}), dd * dd * dd - 4 * dd * dd + 6 * dd,
            "surface d=" + std::to_string(d));
  }
  std::vector<std::vector<int>> ws{{1, 1, 1, 1, 4, 4}, {1, 1, 1, 1, 4, 8}, {1, 1, 1, 1, 8, 12},
                                   {1, 1, 5, 5, 8, 20}, {1, 1, 1, 1, 2, 2}};
  std::mt19937 rng(5);
  for (auto& w : ws) {
    int d = std::accumulate(w.begin(), w.end(), 0);
    std::vector<int> k;
    for (int a : w) k.push_back(d / a);
    FermatSystem s = fermat_system(WeightSystem(w), k);
    c.expect(stratum_table(s, s.full_mask()).mobius_consistent(), "Mobius " + WeightSystem(w).str());
    std::function<std::int64_t(std::size_t, int)> brute = [&](std::size_t i, int left) -> std::int64_t {
      if (i == w.size()) return left == 0;
      std::int64_t n = 0;
      for (int e = 0; e * w[i] <= left; ++e) n += brute(i + 1, left - e * w[i]);
      return n;
    };
    c.equal(count_monomials(WeightSystem(w), d), brute(0, d), "monomials " + WeightSystem(w).str());
    std::int64_t base = chi_fermat(WeightSystem(w), k);
    std::vector<int> p(w.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> pw, pk;
    for (int i : p) {
      pw.push_back(w[i]);
      pk.push_back(k[i]);
    }
    c.equal(chi_fermat(WeightSystem(pw), pk), base, "permuted " + WeightSystem(w).str());
  }
  GroupTable g = generate_group({alpha_g(), beta_g()});
  std::uniform_int_distribution<int> coeff(-3, 3), idx(1, 8);
  for (int trial = 0; trial < 10; ++trial) {
    MultiForm a = MultiForm::basis({idx(rng)}, Rational(coeff(rng))) + MultiForm::basis({idx(rng)}, Rational(coeff(rng)));
    MultiForm b(2);
    for (int t = 0; t < 3; ++t) {
      int i = idx(rng), j = idx(rng);
      if (i != j) b += MultiForm::basis({i, j}, Rational(coeff(rng)));
    }
    for (auto& e : g.elements)
      c.expect(pullback(e, wedge(a, b)) == wedge(pullback(e, a), pullback(e, b)), "pullback homomorphism");
  }
}

void enumerator(Criterion& c) {
  EnumFilters f;
  f.z4_only = true;
  auto cs = enumerate_candidates(24, f);
  for (auto [w, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 1, 1, 1, 4, 4}, 3}, {{1, 1, 1, 1, 4, 8}, 2}, {{1, 1, 1, 1, 8, 12}, 1}}) {
    auto it = std::find_if(cs.begin(), cs.end(), [&](auto& x) { return x.weights.weights == w; });
    c.expect(it != cs.end(), WeightSystem(w).str() + " missing");
    if (it != cs.end()) c.equal(it->isolated_points, n, WeightSystem(w).str() + " points");
  }
}

} // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, std::function<void(Criterion&)>>> all{
      {"Euler engine values", euler},
      {"ledger end-to-end", ledger},
      {"Betti table, 14 rows", table},
      {"fixed-point counts", fixed},
      {"Cayley algebra and groups", algebra},
      {"cross-checks: A-hat, h31, published b4", cross},
      {"property suites", properties},
      {"enumerator with the C4/Z4 filter", enumerator},
  };
  bool ok = true;
  int n = 0;
  for (auto& [title, fn] : all) {
    Criterion c{title, {}};
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    ++n;
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << "  " << n << ". " << title << "\n";
    for (auto& f : c.failures) std::cout << "        " << f << "\n";
    ok = ok && c.failures.empty();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << secs << " s\n";
  return ok ? 0 : 1;
}
