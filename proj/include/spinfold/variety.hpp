#pragma once

#include "spinfold/euler.hpp"
#include "spinfold/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinfold {

struct ValidationReport {
  std::vector<int> degrees;
  std::vector<std::string> recombinations;
  std::vector<std::string> notes;
};

/// throws std::invalid_argument on inhomogeneity, variable reuse or broken triangularity
ValidationReport validate_tower(const FermatTower& t);
bool chern_class_zero(const FermatTower& t);
int equation_degree(const FermatTower& t, int e);

struct TransversalityReport {
  bool transverse = true;
  bool assumed = false;
  std::string note;
};

TransversalityReport transversality_check(const FermatTower& t);

enum class SingularityClass { Z4_SCALAR, Z2_NEG, NONISOLATED, OTHER };
std::string to_string(SingularityClass c);
SingularityClass classify_singularity(int k, int dimension, const std::vector<int>& residues);

struct SingularityRecord {
  Stratum stratum;
  int intersection_dimension = 0;
  std::optional<std::int64_t> point_count; // empty when not finite
  std::vector<int> transverse_residues;
  SingularityClass cls = SingularityClass::OTHER;
  bool deeper = false; // a sub-stratum with larger stabilizer met by the variety
  FermatTower sub_tower; // equations restricted to the support
  std::string str() const;
};

std::vector<SingularityRecord> singular_locus(const FermatTower& t, ChiMemo* memo = nullptr);

enum class ClassicalKind { POINTS, CURVE };
struct ClassicalInvariants {
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> points;
};
ClassicalInvariants classical_curve_invariants(ClassicalKind kind, const std::vector<int>& degrees, int ambient_dim);

/// Row-reduced linear data of a Fermat tower on a support (rows linear in z_v^{k_v}).
struct SupportReduction {
  unsigned mask = 0;     // support with forced-zero coordinates removed
  int rank = 0;
  bool nonempty = false; // the variety meets the open stratum of `mask`
  int dimension() const { return __builtin_popcount(mask) - 1 - rank; }
};

SupportReduction reduce_support(const FermatSystem& s, unsigned mask);
std::vector<std::map<int, Cyclotomic>> rref(std::vector<std::map<int, Cyclotomic>> rows);

/// Exact points of the variety in the open stratum `mask`; requires a zero-dimensional
/// intersection, equal row degrees, and coefficients that are rational multiples of roots of unity.
std::vector<WpsPoint> stratum_points(const FermatSystem& s, unsigned mask);

} // namespace spinfold
