#include "spinfold/shell.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace spinfold;

int main(int argc, char** argv) {
  CLI::App app{"spinfold: Betti numbers of compact Spin(7) quotients of Calabi-Yau 4-orbifolds"};
  app.require_subcommand(1);

  std::string file;
  bool dump = false;
  auto* analyze = app.add_subcommand("analyze", "run a scenario file and print its report");
  analyze->add_option("file", file, "scenario file")->required();
  analyze->add_flag("--dump", dump, "print key=value lines instead of the text report");

  std::vector<int> weights, exponents;
  bool chain = false, no_cache = false;
  auto* chi = app.add_subcommand("chi", "Euler characteristic of a Fermat hypersurface");
  chi->add_option("--weights", weights, "weights a_0..a_m")->required()->delimiter(',');
  chi->add_option("--exponents", exponents, "exponents k_j (default d/a_j)")->delimiter(',');
  chi->add_flag("--chain", chain, "print chi of every prefix hypersurface");
  chi->add_flag("--no-cache", no_cache, "do not share a memo between recursive calls");

  std::string dir = scenario_dir();
  int threads = 0;
  auto* table = app.add_subcommand("paper-table", "run the shipped fixtures and diff the Betti triples");
  table->add_option("--dir", dir, "fixture directory");
  table->add_option("--threads", threads, "worker threads (0 = hardware)");

  int max_d = 0, cap = 64;
  EnumFilters filters;
  auto* en = app.add_subcommand("enumerate", "Fermat weight systems in CP^5 with a_j | d");
  en->add_option("--max-d", max_d, "degree bound")->required();
  en->add_flag("--z4", filters.z4_only, "only isolated C4/Z4 scalar points");
  en->add_flag("--z2", filters.z2_only, "only isolated C4/{+-1} points");
  en->add_flag("--smooth", filters.smooth, "no singular strata");
  en->add_flag("--pairs", filters.pairs, "two pairs of equal weights for an exchanging involution");
  en->add_option("--cap", cap, "largest accepted degree bound");
  en->add_option("--threads", threads, "worker threads (0 = hardware)");

  std::string which = "all";
  auto* alg = app.add_subcommand("algebra", "Cayley form and finite group checks");
  alg->add_option("--check", which, "forms, groups or all")->check(CLI::IsMember({"forms", "groups", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      Report r = run(load_scenario(file), &shared_memo());
      std::cout << (dump ? r.dump() : r.text());
      return r.ok() ? 0 : 1;
    }
    if (*chi) {
      WeightSystem w(weights);
      if (exponents.empty())
        for (int a : weights) {
          if (w.sum() % a) throw std::invalid_argument("a_j must divide the weight sum when exponents are omitted");
          exponents.push_back(w.sum() / a);
        }
      std::vector<std::int64_t> c;
      std::int64_t x = chi_fermat(w, exponents, chain ? &c : nullptr, no_cache ? nullptr : &shared_memo());
      if (chain)
        for (std::size_t j = 0; j < c.size(); ++j) std::cout << "chi(Y_" << j + 1 << ") = " << c[j] << "\n";
      std::cout << "chi = " << x << "\n";
      return 0;
    }
    if (*table) {
      auto rows = paper_table(dir, threads);
      std::cout << format_table(rows);
      bool ok = std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.match() && r.error.empty(); });
      return ok ? 0 : 1;
    }
    if (*en) {
      auto cs = enumerate_candidates(max_d, filters, cap, threads);
      for (auto& c : cs) std::cout << c.str() << "\n";
      std::cout << cs.size() << " candidate(s)\n";
      return 0;
    }
    if (*alg) {
      auto res = algebra_checks(which != "groups", which != "forms");
      bool ok = true;
      for (auto& c : res) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
        ok = ok && c.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const ScenarioError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
