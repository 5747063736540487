#include "spinfold/exact.hpp"

#include <doctest.h>

#include <random>

using namespace spinfold;

TEST_CASE("rational helpers") {
  CHECK(frac(Rational(7, 4)) == Rational(3, 4));
  CHECK(frac(Rational(-1, 4)) == Rational(3, 4));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(hcf({4, 6, 10}) == 2);
  CHECK(lcm64(4, 6) == 12);
  CHECK(Rational(4, 2) == 2);
  CHECK(Rational(1, 2) < 1);
}

TEST_CASE("roots of unity") {
  Cyclotomic i = Cyclotomic::imag_unit();
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic::root(Rational(1, 2)) == Cyclotomic(-1));
  CHECK(Cyclotomic::root(Rational(1, 8)) * Cyclotomic::root(Rational(1, 8)) == i);
  CHECK(i.conj() == -i);
  Cyclotomic w = Cyclotomic::root(Rational(1, 3));
  CHECK(w * w * w == Cyclotomic(1));
  CHECK(Cyclotomic(1) + w + w * w == Cyclotomic(0));
  auto sr = (Cyclotomic(3) * Cyclotomic::root(Rational(5, 12))).as_scaled_root();
  REQUIRE(sr);
  CHECK(sr->first == 3);
  CHECK(sr->second == Rational(5, 12));
  CHECK_FALSE((Cyclotomic(1) + i).as_scaled_root().has_value());
}

TEST_CASE("field axioms on random cyclotomic elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-5, 5), t(0, 23);
  auto rnd = [&] {
    Cyclotomic x;
    for (int k = 0; k < 3; ++k) x += Cyclotomic(c(rng)) * Cyclotomic::root(Rational(t(rng), 24));
    return x;
  };
  for (int n = 0; n < 50; ++n) {
    Cyclotomic a = rnd(), b = rnd(), d = rnd();
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}
