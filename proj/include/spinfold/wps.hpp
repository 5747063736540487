#pragma once

#include "spinfold/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spinfold {

struct WeightSystem {
  std::vector<int> weights;

  WeightSystem() = default;
  explicit WeightSystem(std::vector<int> w);

  int size() const { return static_cast<int>(weights.size()); }
  int m() const { return size() - 1; }
  int operator[](int i) const { return weights[i]; }
  bool normalized() const;
  int sum() const;
  std::string str() const;
};

unsigned mask_of(const std::vector<int>& support);
std::vector<int> support_of(unsigned mask);

struct Stratum {
  std::vector<int> support;
  int k = 1;

  bool singular() const { return k > 1; }
  int dimension() const { return static_cast<int>(support.size()) - 1; }
  unsigned mask() const { return mask_of(support); }
  std::string str() const;
};

Stratum stratum_of(const WeightSystem& w, const std::vector<int>& support);
/// maximal supports with k > 1, sorted
std::vector<Stratum> singular_strata(const WeightSystem& w);
int chi_wps(const WeightSystem& w);
std::int64_t count_monomials(const WeightSystem& w, int degree);
std::int64_t aut_dimension(const WeightSystem& w);

/// A point of a weighted projective space with exact data: z_v = y_v^{a_v/D} e(theta_v).
/// Canonical form: y of the first support index is 1, phases are the lexicographically
/// least representative under the residual gauge.
struct WpsPoint {
  std::vector<int> support;
  std::vector<Rational> modulus;
  std::vector<Rational> phase;
  int D = 1;

  friend bool operator==(const WpsPoint& a, const WpsPoint& b) {
    return a.support == b.support && a.modulus == b.modulus && a.phase == b.phase && a.D == b.D;
  }
  friend bool operator<(const WpsPoint& a, const WpsPoint& b);
  std::string str(const WeightSystem& w) const;
};

WpsPoint canonical_point(const WeightSystem& w, std::vector<int> support, std::vector<Rational> modulus,
                         std::vector<Rational> phase, int D);

} // namespace spinfold
