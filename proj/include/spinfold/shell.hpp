#pragma once

#include "spinfold/involution.hpp"
#include "spinfold/ledger.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinfold {

class ScenarioError : public std::runtime_error {
public:
  ScenarioError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line), column(column) {}
  int line;
  int column;
};

struct Provenanced {
  std::string provenance;
  int line = 0;
};

struct LocusDatum : Provenanced {
  std::vector<int> support;
  std::int64_t b0 = 0, b1 = 0, b2 = 0;
};

struct FiberDatum : Provenanced {
  FiberData fiber;
};

struct ScalarDatum : Provenanced {
  std::int64_t value = 0;
};

enum class StepKind { QUOTIENT, BLOWUP_LOCUS, BLOWUP_SWAPPED, SIGMA, RESOLVE };

struct ScenarioStep {
  StepKind kind;
  int line = 0;
  std::vector<Rational> phases;  // QUOTIENT
  std::vector<int> support;      // BLOWUP_LOCUS
  std::string fiber;             // BLOWUP_LOCUS
  std::vector<int> choices;      // RESOLVE
};

struct Scenario {
  int format = 1;
  std::string name;
  std::string title;
  WeightSystem weights;
  std::vector<FermatEquation> equations;
  std::vector<PlanStep> plan;
  std::optional<InvolutionSpec> involution;
  std::optional<ScalarDatum> chi_w;
  std::optional<ScalarDatum> fixed_points;
  std::vector<LocusDatum> loci;
  std::map<std::string, FiberDatum> fibers;
  std::map<std::string, ScalarDatum> published; // e.g. "Y b4"
  std::vector<ScenarioStep> steps;
  std::map<std::string, std::int64_t> expect;

  FermatTower tower() const;
};

/// format 1 grammar; see README
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

struct CheckResult {
  std::string name;
  bool pass = true;
  bool hard = true;
  std::string detail;
};

struct Report {
  std::string name;
  std::string title;
  std::vector<std::string> inventory;
  std::vector<std::pair<std::string, SpaceState>> stages;
  std::vector<CheckResult> checks;
  std::optional<SpaceState> final_state;
  std::string error;

  bool ok() const;
  std::string text() const;
  /// key=value lines
  std::string dump() const;
};

Report run(const Scenario& s, ChiMemo* memo = nullptr);

/// fixture directory: $SPINFOLD_SCENARIOS if set, else the shipped one
std::string scenario_dir();

struct TableRow {
  std::string scenario;
  std::array<std::int64_t, 3> expected{};
  std::optional<std::array<std::int64_t, 3>> got;
  std::string error;
  bool match() const { return got && *got == expected; }
};

std::vector<TableRow> paper_table(const std::string& dir, int threads = 0);
std::string format_table(const std::vector<TableRow>& rows);

struct EnumFilters {
  bool z4_only = false;
  bool z2_only = false;
  bool smooth = false;
  bool pairs = false;
};

struct Candidate {
  WeightSystem weights;
  int degree = 0;
  std::vector<SingularityRecord> records;
  std::int64_t isolated_points = 0;
  std::string str() const;
};

/// nondecreasing 6-tuples with hcf 1, d = sum, every a_j | d; throws past the cap
std::vector<Candidate> enumerate_candidates(int max_degree, const EnumFilters& f, int cap = 64, int threads = 0);

std::vector<CheckResult> algebra_checks(bool forms, bool groups);

} // namespace spinfold
