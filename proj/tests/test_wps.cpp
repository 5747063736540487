#include "spinfold/wps.hpp"

#include <doctest.h>

#include <functional>

using namespace spinfold;

namespace {

std::int64_t brute_monomials(const std::vector<int>& w, int d) {
  std::function<std::int64_t(std::size_t, int)> go = [&](std::size_t i, int left) -> std::int64_t {
    if (i == w.size()) return left == 0;
    std::int64_t n = 0;
    for (int e = 0; e * w[i] <= left; ++e) n += go(i + 1, left - e * w[i]);
    return n;
  };
  return go(0, d);
}

} // namespace

TEST_CASE("monomial counts agree with exhaustive enumeration") {
  std::vector<std::pair<std::vector<int>, int>> cases{
      {{1, 1, 1, 1, 4, 4}, 12}, {{1, 1, 1, 1, 4, 8}, 16},    {{1, 1, 1, 1, 8, 12}, 24},
      {{1, 1, 5, 5, 8, 20}, 40}, {{1, 1, 1, 1, 2, 2}, 8},    {{1, 1, 1, 1, 4, 4, 4}, 8},
      {{3, 3, 3, 3, 4, 4, 4}, 12}, {{1, 1, 1, 1, 1, 1}, 6},
  };
  for (auto& [w, d] : cases) CHECK(count_monomials(WeightSystem(w), d) == brute_monomials(w, d));
  CHECK(count_monomials(WeightSystem({1, 1, 1, 1, 4, 4}), 12) == 894);
  CHECK(count_monomials(WeightSystem({1, 1, 1, 1, 4, 8}), 16) == 1827);
  CHECK(count_monomials(WeightSystem({1, 1, 1, 1, 8, 12}), 24) == 4551);
}

TEST_CASE("automorphism dimension") {
  CHECK(aut_dimension(WeightSystem({1, 1, 1, 1, 4, 4})) == 89);
  CHECK(aut_dimension(WeightSystem({1, 1, 1, 1, 1, 1})) == 35);
}

TEST_CASE("singular strata") {
  auto s = singular_strata(WeightSystem({1, 1, 1, 1, 4, 4}));
  REQUIRE(s.size() == 1);
  CHECK(s[0].support == std::vector<int>{4, 5});
  CHECK(s[0].k == 4);
  auto t = singular_strata(WeightSystem({1, 1, 5, 5, 8, 20}));
  bool curve = false, point = false;
  for (auto& x : t) {
    if (x.support == std::vector<int>{2, 3, 5} && x.k == 5) curve = true;
    if (x.support == std::vector<int>{4, 5} && x.k == 4) point = true;
  }
  CHECK(curve);
  CHECK(point);
  CHECK(singular_strata(WeightSystem({1, 1, 1, 1, 1, 1})).empty());
  CHECK(chi_wps(WeightSystem({1, 1, 1, 1, 4, 4})) == 6);
}

TEST_CASE("weight systems") {
  CHECK_THROWS(WeightSystem({1, 0, 2}));
  WeightSystem w({1, 1, 1, 1, 4, 4});
  CHECK(w.sum() == 12);
  CHECK(w.m() == 5);
  CHECK(w.normalized());
  CHECK_FALSE(WeightSystem({2, 2, 4}).normalized());
}
