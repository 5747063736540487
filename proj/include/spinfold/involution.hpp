#pragma once

#include "spinfold/cayley.hpp"
#include "spinfold/variety.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinfold {

/// pair: z_j -> e(eps) conj(z_l), z_l -> e(eps2) conj(z_j); conj: z_j -> e(eps) conj(z_j)
struct InvolutionBlock {
  bool pair = false;
  int j = 0;
  int l = 0;
  Rational eps{0};
  Rational eps2{0};
};

struct InvolutionSpec {
  std::vector<InvolutionBlock> blocks;

  /// "pair(0,1; -) pair(2,3; 1/2, 0) conj(4) conj(5; 1/4)"
  static InvolutionSpec parse(const std::string& text);
  std::string str() const;
};

/// sigma(z)_i = e(phase_i) conj(z_{perm_i})
struct AntiholomorphicMap {
  std::vector<int> perm;
  std::vector<Rational> phase;

  WpsPoint apply(const WeightSystem& w, const WpsPoint& p) const;
  /// sigma composed with the diagonal map e(psi)^m applied first
  AntiholomorphicMap after(const std::vector<Rational>& psi, int m) const;
  /// coordinates forced to vanish at fixed points (exchanged pairs with unequal phases)
  unsigned forced_zero() const;
};

AntiholomorphicMap to_map(const InvolutionSpec& s, int n);

struct InvolutionValidation {
  Rational t{0}; // sigma^2 equals the weighted scalar e(t)
  std::vector<Rational> square_phases;
};

/// throws std::invalid_argument on a weight mismatch, bad coverage, or sigma^2 != id
InvolutionValidation validate_involution(const InvolutionSpec& s, const WeightSystem& w);
bool preserves_variety(const InvolutionSpec& s, const FermatTower& t);

class UnsupportedStratum : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Diagonal holomorphic map z_i -> e(psi_i) z_i of projective order 2.
struct HolomorphicAction {
  std::vector<Rational> psi;
  WpsPoint apply(const WeightSystem& w, const WpsPoint& p) const;
  /// least representative of the orbit {p, beta(p)}
  WpsPoint orbit_rep(const WeightSystem& w, const WpsPoint& p) const;
};

struct FixedPointSet {
  std::vector<WpsPoint> points;
  std::int64_t count = 0;
  std::vector<WpsPoint> fixed_singular;
  std::vector<std::pair<WpsPoint, WpsPoint>> swapped; // isolated singular points exchanged by sigma
  unsigned forced_zero = 0;
};

/// exact enumeration; throws UnsupportedStratum for positive-dimensional candidate strata,
/// std::domain_error for towers with generic blocks
FixedPointSet fixed_points(const InvolutionSpec& s, const FermatTower& t);

/// isolated singular points of the tower with their classes
std::vector<std::pair<WpsPoint, SingularityClass>> isolated_singular_points(const FermatTower& t);

struct TransverseType {
  int dim = 0;
  int order = 1;
  bool scalar = false;
  std::string label; // e.g. C4/Z4, C3/Z5
  SingularityClass cls = SingularityClass::OTHER;
};

/// group generated by the stabilizer e(a_i/l) and the extra diagonal generators, on the
/// coordinates outside the support
TransverseType transverse_type(const WeightSystem& w, const std::vector<int>& support,
                               const std::vector<std::vector<Rational>>& extra = {});

struct FixedComponent {
  std::vector<int> support; // closed coordinate subspace CP(J)
  int dimension = 0;
  std::int64_t chi = 0;
  std::vector<WpsPoint> points; // when zero-dimensional
  TransverseType type;
};

struct HolomorphicQuotient {
  Rational t{0};  // beta^2 equals the weighted scalar e(t)
  std::vector<FixedComponent> components;
  std::int64_t fix_chi = 0;
};

/// Fix(beta) as a union of coordinate subspaces met by the variety; chi by inclusion-exclusion
HolomorphicQuotient analyze_holomorphic(const FermatTower& t, const HolomorphicAction& beta, ChiMemo* memo = nullptr);
bool normalizes(const InvolutionSpec& s, const HolomorphicAction& beta, const WeightSystem& w);

/// fixed points of sigma on the quotient by beta, as orbit representatives
FixedPointSet fixed_points_mod(const InvolutionSpec& s, const FermatTower& t, const HolomorphicAction& beta,
                               const std::vector<WpsPoint>& singular);

struct ResolutionDeclarations {
  std::vector<WpsPoint> points;
  std::vector<std::vector<int>> loci;
};

struct ConditionReport {
  bool isolated_z4 = true;   // (i)
  bool fixed_is_singular = true; // (ii)
  std::string topology;      // (iii)
  bool topology_granted = true;
  std::vector<std::string> notes;
  bool pass() const { return isolated_z4 && fixed_is_singular; }
  std::string str() const;
};

ConditionReport check_condition(const FermatTower& t, const InvolutionSpec& s, const ResolutionDeclarations& d);

/// Core check once the inventories are known: singular points with classes, unresolved
/// positive-dimensional loci, and the fixed points of sigma.
ConditionReport evaluate_condition(const std::vector<std::pair<WpsPoint, SingularityClass>>& singular,
                                   int unresolved_loci, const std::vector<WpsPoint>& fixed,
                                   const ResolutionDeclarations& d, bool lefschetz);

enum class Z2PointClass { RESOLVABLE, OBSTRUCTED };
std::string to_string(Z2PointClass c);

struct Z2PointReport {
  Z2PointClass cls;
  PhaseMatrix witness;       // linear diagonal action in the witness pairing
  CoordinatePairing pairing; // pairing compatible with the Cayley form
};

/// g is the antilinear generator at a C^4/{+-1} point, written in z-coordinates;
/// throws std::invalid_argument when g has fixed vectors or is not a recognized form
Z2PointReport classify_z2_point(const PhaseMatrix& g);

} // namespace spinfold
