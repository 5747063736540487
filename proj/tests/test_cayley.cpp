#include "spinfold/cayley.hpp"

#include <doctest.h>

#include <random>

using namespace spinfold;

TEST_CASE("Cayley form shape") {
  MultiForm o = cayley_form();
  CHECK(o.degree() == 4);
  CHECK(o.size() == 14);
  for (auto& [m, c] : o.terms()) CHECK((c == 1 || c == -1));
  CHECK(o.coefficient({1, 2, 3, 4}) == 1);
}

TEST_CASE("SU(4) forms induce the Cayley form in both pairings") {
  MultiForm o = cayley_form();
  for (auto p : {CoordinatePairing::z_coordinates(), CoordinatePairing::w_coordinates()}) {
    p.validate();
    bool found = false;
    for (int q = 0; q < 4; ++q) found = found || su4_induced_form(p, q) == o;
    CHECK(found);
  }
}

TEST_CASE("wedge is graded commutative and associative") {
  auto a = MultiForm::basis({1, 2}), b = MultiForm::basis({3}), c = MultiForm::basis({5});
  CHECK(wedge(b, c) == wedge(c, b) * Rational(-1));
  CHECK(wedge(a, b) == wedge(b, a));
  CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  CHECK(wedge(b, b).is_zero());
  CHECK(MultiForm::basis({2, 1}) == MultiForm::basis({1, 2}) * Rational(-1));
}

TEST_CASE("the order-8 group") {
  GroupTable g = generate_group({alpha_g(), beta_g()});
  CHECK(g.order() == 8);
  CHECK(g.relation_holds("aaaa", ""));
  CHECK(g.relation_holds("bbbb", ""));
  CHECK(g.relation_holds("aa", "bb"));
  CHECK(g.relation_holds("ab", "baaa"));
  CHECK_FALSE(g.is_cyclic());
  CHECK(acts_freely(g).free);
  MultiForm o = cayley_form();
  for (auto& e : g.elements) CHECK(pullback(e, o) == o);
}

TEST_CASE("the order-8n family acts freely") {
  for (int n : {1, 3, 5}) {
    GroupTable g = generate_group({alpha_gn(n), beta_gn(n), gamma_gn(n)});
    CHECK(g.order() == 8 * n);
    CHECK(acts_freely(g).free);
  }
}

TEST_CASE("a map with a fixed vector is not free") {
  PhaseMatrix g{{0, 1, 2, 3}, {0, 2, 2, 2}, false, 4};
  CHECK_FALSE(element_fixed_vector(g).free);
  CHECK(element_fixed_vector(alpha_g()).free);
}

TEST_CASE("pullback is a homomorphism for the wedge product") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3), idx(1, 8);
  auto rnd = [&](int degree) {
    MultiForm f(degree);
    for (int k = 0; k < 4; ++k) {
      std::vector<int> ix;
      while (static_cast<int>(ix.size()) < degree) {
        int j = idx(rng);
        if (std::find(ix.begin(), ix.end(), j) == ix.end()) ix.push_back(j);
      }
      f += MultiForm::basis(ix, Rational(coeff(rng)));
    }
    return f;
  };
  GroupTable g = generate_group({alpha_g(), beta_g()});
  for (int trial = 0; trial < 20; ++trial) {
    MultiForm a = rnd(1 + trial % 2), b = rnd(2);
    for (auto& e : g.elements) CHECK(pullback(e, wedge(a, b)) == wedge(pullback(e, a), pullback(e, b)));
  }
}
