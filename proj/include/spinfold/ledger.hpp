#pragma once

#include "spinfold/variety.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinfold {

/// chi = 2 b0 - 2 b1 + 2 b2 - 2 b3 + b4 (closed 8-dimensional duality)
struct BettiVector {
  std::array<std::int64_t, 5> b{1, 0, 0, 0, 0};
  std::int64_t chi = 0;
  std::optional<std::int64_t> b4_plus;
  std::optional<std::int64_t> b4_minus;

  std::int64_t chi_from_betti() const { return 2 * b[0] - 2 * b[1] + 2 * b[2] - 2 * b[3] + b[4]; }
  bool consistent() const;
  std::string str() const;
};

enum class ClassTag { KAHLER, EXC_POINT, EXC_LOCUS };
enum class ClassAction { MINUS, PLUS, SWAPPED };
std::string to_string(ClassTag t);
std::string to_string(ClassAction a);

struct ClassEntry {
  ClassTag tag = ClassTag::KAHLER;
  int id = 0;
  ClassAction action = ClassAction::MINUS;
  int partner = -1; // index of the swapped partner
};

struct ClassLedger {
  std::vector<ClassEntry> entries;

  /// swapped pairs and PLUS entries contribute one invariant class each
  int invariant_count() const;
  bool valid() const;
  std::string str() const;
};

enum class Stage { Y, Z, M };
std::string to_string(Stage s);

struct SpaceState {
  BettiVector betti;
  ClassLedger classes;
  Stage stage = Stage::Y;
  int singular_points = 0; // isolated C4/Z4 points still present
  std::string pi1 = "unknown";
  std::string holonomy;
  std::optional<std::int64_t> moduli;
};

struct FiberData {
  std::string label;
  std::int64_t b2 = 0;
  std::int64_t b4 = 0;
  std::int64_t chi = 1;
};

/// crepant resolutions of C3/Z5, C3/Z3, C2/{+-1}
std::optional<FiberData> fiber_constant(const std::string& label);

/// Betti numbers b^0..b^{2c} of a compact complex c-dimensional locus
struct LocusBetti {
  std::vector<std::int64_t> b;
  std::int64_t chi() const;
  /// from (b0, b1, b2) by Poincare duality; complex dimension 1 or 2
  static LocusBetti from_low(int complex_dim, std::int64_t b0, std::int64_t b1, std::int64_t b2);
  std::string str() const;
};

struct PointOrbits {
  int fixed = 0;
  int swapped_pairs = 0;
  int count() const { return fixed + 2 * swapped_pairs; }
};

SpaceState lefschetz_seed(const WeightSystem& ambient, int codimension, std::int64_t chi);
/// throws on a parity failure
SpaceState quotient_holomorphic(const SpaceState& s, std::int64_t fix_chi, bool kahler_invariant = true);
/// throws unless the points carry a crepant point resolution (Z4_SCALAR)
SpaceState blowup_points(const SpaceState& s, const PointOrbits& orbits,
                         SingularityClass cls = SingularityClass::Z4_SCALAR);
SpaceState blowup_locus(const SpaceState& s, const LocusBetti& locus, const std::optional<FiberData>& fiber);
/// throws on odd b3 or odd chi + k
SpaceState quotient_antiholomorphic(const SpaceState& s, std::int64_t k_fixed);
/// one choice in {1, 2} per singular point; throws when the split is not integral
SpaceState glue_ale(const SpaceState& s, const std::vector<int>& n_choices);
bool ahat_check(const SpaceState& m);

struct H31Report {
  bool supported = false;
  std::string reason;
  std::int64_t monomials = 0;
  std::int64_t aut = 0;
  std::int64_t h31 = 0;
  std::int64_t predicted_b4_minus = 0;
  std::optional<std::int64_t> ledger_b4_minus;
  bool match() const { return supported && ledger_b4_minus && *ledger_b4_minus == predicted_b4_minus; }
  std::string str() const;
};

/// advisory: h31 = (monomials of degree d - 1) - dim Aut; plain hypersurface pipelines only
H31Report h31_crosscheck(const WeightSystem& ambient, int degree, std::int64_t b2_y, std::int64_t b2_z,
                         std::int64_t k, std::optional<std::int64_t> ledger_b4_minus, bool plain_pipeline = true);

} // namespace spinfold
