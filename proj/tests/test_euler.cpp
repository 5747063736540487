#include "spinfold/euler.hpp"
#include "spinfold/variety.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace spinfold;

namespace {

std::vector<int> fermat_exponents(const std::vector<int>& w) {
  int d = std::accumulate(w.begin(), w.end(), 0);
  std::vector<int> k;
  for (int a : w) k.push_back(d / a);
  return k;
}

} // namespace

TEST_CASE("Fermat Euler characteristics") {
  std::vector<std::int64_t> chain;
  CHECK(chi_fermat(WeightSystem({1, 1, 1, 1, 4, 4}), {12, 12, 12, 12, 3, 3}, &chain) == 4887);
  CHECK(chain == std::vector<std::int64_t>{12, -108, 1224, -2436, 4887});
  CHECK(chi_fermat(WeightSystem({1, 1, 1, 1, 4, 8}), {16, 16, 16, 16, 4, 2}) == 9498);
  CHECK(chi_fermat(WeightSystem({1, 1, 1, 1, 8, 12}), {24, 24, 24, 24, 3, 2}) == 23325);
  CHECK(chi_fermat_uncorrected(WeightSystem({1, 1, 1, 1, 8, 12}), {24, 24, 24, 24, 3, 2}) == 23326);
  CHECK_FALSE(correction_trivial(WeightSystem({1, 1, 1, 1, 8, 12})));
  CHECK(correction_trivial(WeightSystem({1, 1, 1, 1, 4, 4})));
  CHECK(chi_fermat(WeightSystem({1, 1, 1, 1, 2, 2}), {8, 8, 8, 8, 4, 4}) == 2708);
  CHECK(chi_fermat(WeightSystem({1, 1, 5, 5, 8, 20}), {40, 40, 8, 8, 5, 2}) == 7453);
}

TEST_CASE("closed strata and towers") {
  FermatTower w = fermat_hypersurface(WeightSystem({1, 1, 1, 1, 2, 2}));
  CHECK(chi_on_closed_stratum(w, {0, 1, 2, 3}) == 304);
  FermatTower t;
  t.ambient = WeightSystem({1, 1, 1, 1, 4, 4, 4});
  t.equations = {parse_equation("z0^8 + z1^8 + 2i*z2^8 - 2i*z3^8 + z4^2 - z5^2"),
                 parse_equation("2i*z0^8 - 2i*z1^8 + z2^8 + z3^8 + z4^2 - z6^2")};
  CHECK(chi_tower(t) == 2580);
  FermatTower c;
  c.ambient = WeightSystem({3, 3, 3, 3, 4, 4, 4});
  c.equations = {parse_equation("z0^4 + z1^4 + z2^4 + z3^4 + z4^3 - z5^3"),
                 parse_equation("i*z0^4 - i*z1^4 + 2i*z2^4 - 2i*z3^4 + z4^3 - z6^3")};
  CHECK(chi_tower(c) == 389);
  CHECK(chi_on_closed_stratum(c, {0, 1, 2, 3}) == -64);
}

TEST_CASE("plane curves and surfaces in CP3 match classical formulas") {
  for (int d = 2; d <= 16; ++d) {
    std::int64_t g = static_cast<std::int64_t>(d - 1) * (d - 2) / 2;
    CHECK(chi_fermat(WeightSystem({1, 1, 1}), {d, d, d}) == 2 - 2 * g);
    CHECK(*classical_curve_invariants(ClassicalKind::CURVE, {d}, 2).genus == g);
    std::int64_t dd = d;
    CHECK(chi_fermat(WeightSystem({1, 1, 1, 1}), {d, d, d, d}) == dd * dd * dd - 4 * dd * dd + 6 * dd);
  }
}

TEST_CASE("open strata sum to closed strata") {
  std::vector<std::vector<int>> ws{{1, 1, 1, 1, 4, 4}, {1, 1, 1, 1, 8, 12}, {1, 1, 5, 5, 8, 20}, {1, 1, 1, 1, 2, 2}};
  for (auto& w : ws) {
    FermatSystem s = fermat_system(WeightSystem(w), fermat_exponents(w));
    StratumChiTable tab = stratum_table(s, s.full_mask());
    CHECK(tab.mobius_consistent());
  }
}

TEST_CASE("chi is invariant under permuting coordinates") {
  std::mt19937 rng(3);
  std::vector<std::vector<int>> ws{{1, 1, 1, 1, 4, 4}, {1, 1, 1, 1, 4, 8}, {1, 1, 5, 5, 8, 20}, {1, 1, 1, 1, 2, 2}};
  for (auto& w : ws) {
    auto k = fermat_exponents(w);
    std::int64_t base = chi_fermat(WeightSystem(w), k);
    std::vector<int> perm(w.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> pw, pk;
      for (int i : perm) {
        pw.push_back(w[i]);
        pk.push_back(k[i]);
      }
      CHECK(chi_fermat(WeightSystem(pw), pk) == base);
    }
  }
}

TEST_CASE("shared memo and private tables agree") {
  ChiMemo memo;
  for (auto w : std::vector<std::vector<int>>{{1, 1, 1, 1, 4, 4}, {1, 1, 1, 1, 8, 12}}) {
    auto k = fermat_exponents(w);
    CHECK(chi_fermat(WeightSystem(w), k, nullptr, &memo) == chi_fermat(WeightSystem(w), k, nullptr, nullptr));
  }
  CHECK(memo.size() > 0);
  memo.clear();
  CHECK(memo.size() == 0);
}
