#include "spinfold/variety.hpp"

#include <doctest.h>

using namespace spinfold;

namespace {

FermatTower octics() {
  FermatTower t;
  t.ambient = WeightSystem({1, 1, 1, 1, 4, 4, 4});
  t.equations = {parse_equation("z0^8 + z1^8 + 2i*z2^8 - 2i*z3^8 + z4^2 - z5^2"),
                 parse_equation("2i*z0^8 - 2i*z1^8 + z2^8 + z3^8 + z4^2 - z6^2")};
  t.plan = {{1, 6, false}, {0, 5, false}};
  return t;
}

} // namespace

TEST_CASE("equation parser") {
  FermatEquation e = parse_equation("z0^12 + 2i*z1^12 - e(1/8)*z2^3 + ~z3^2 + ~P(z4,z5)");
  CHECK(e.terms.size() == 4);
  CHECK(e.blocks.size() == 1);
  CHECK(e.has_generic());
  CHECK(e.term_of(1)->coeff == Cyclotomic(2) * Cyclotomic::imag_unit());
  CHECK(e.term_of(2)->coeff == -Cyclotomic::root(Rational(1, 8)));
  try {
    parse_equation("z0^12 + + z1^12");
    FAIL("no error");
  } catch (const ParseError& err) {
    CHECK(err.column == 9);
  }
  CHECK_THROWS_AS(parse_equation("z0^12 + z0^12"), ParseError);
}

TEST_CASE("tower validation") {
  ValidationReport v = validate_tower(octics());
  CHECK(v.degrees == std::vector<int>{8, 8});
  CHECK(v.recombinations.size() == 1);
  CHECK(chern_class_zero(octics()));
  FermatTower bad;
  bad.ambient = WeightSystem({1, 1, 1, 1, 4, 4});
  bad.equations = {parse_equation("z0^12 + z1^12 + z2^12 + z3^12 + z4^3 + z5^2")};
  CHECK_THROWS_AS(validate_tower(bad), std::invalid_argument);
}

TEST_CASE("transversality") {
  CHECK(transversality_check(fermat_hypersurface(WeightSystem({1, 1, 1, 1, 4, 4}))).transverse);
  CHECK(transversality_check(octics()).transverse);
  FermatTower missing;
  missing.ambient = WeightSystem({1, 1, 1, 1, 2});
  missing.equations = {parse_equation("z0^6 + z1^6 + z2^6 + z3^6")};
  CHECK_FALSE(transversality_check(missing).transverse);
}

TEST_CASE("singular loci of Fermat hypersurfaces") {
  auto r = singular_locus(fermat_hypersurface(WeightSystem({1, 1, 1, 1, 4, 4})));
  REQUIRE(r.size() == 1);
  CHECK(r[0].stratum.k == 4);
  CHECK(*r[0].point_count == 3);
  CHECK(r[0].cls == SingularityClass::Z4_SCALAR);

  auto s = singular_locus(fermat_hypersurface(WeightSystem({1, 1, 5, 5, 8, 20})));
  bool curve = false, point = false;
  for (auto& x : s) {
    if (x.stratum.support == std::vector<int>{2, 3, 5}) {
      curve = true;
      CHECK(x.intersection_dimension == 1);
      CHECK(x.cls == SingularityClass::NONISOLATED);
      CHECK(x.transverse_residues == std::vector<int>{1, 1, 3});
    }
    if (x.stratum.support == std::vector<int>{4, 5}) {
      point = true;
      CHECK(*x.point_count == 1);
      CHECK(x.cls == SingularityClass::Z4_SCALAR);
    }
  }
  CHECK(curve);
  CHECK(point);

  auto z = singular_locus(fermat_hypersurface(WeightSystem({1, 1, 1, 1, 2, 2})));
  REQUIRE(z.size() == 1);
  CHECK(z[0].cls == SingularityClass::Z2_NEG);
  CHECK(*z[0].point_count == 4);

  CHECK(singular_locus(fermat_hypersurface(WeightSystem({1, 1, 1, 1, 1, 1}))).empty());
}

TEST_CASE("singular points of the octic intersection") {
  auto r = singular_locus(octics());
  REQUIRE(r.size() == 1);
  CHECK(r[0].stratum.support == std::vector<int>{4, 5, 6});
  CHECK(*r[0].point_count == 4);
  CHECK(r[0].cls == SingularityClass::Z4_SCALAR);
}

TEST_CASE("exact points on a stratum") {
  FermatTower y = fermat_hypersurface(WeightSystem({1, 1, 1, 1, 4, 4}));
  auto pts = stratum_points(system_of(y), mask_of({4, 5}));
  CHECK(pts.size() == 3);
  SupportReduction red = reduce_support(system_of(y), mask_of({4, 5}));
  CHECK(red.nonempty);
  CHECK(red.dimension() == 0);
}

TEST_CASE("classical invariants") {
  CHECK(*classical_curve_invariants(ClassicalKind::CURVE, {4, 4}, 3).genus == 33);
  CHECK(*classical_curve_invariants(ClassicalKind::POINTS, {3, 3}, 2).points == 9);
  CHECK(classify_singularity(4, 0, {1, 1, 1, 1}) == SingularityClass::Z4_SCALAR);
  CHECK(classify_singularity(2, 0, {1, 1, 1, 1}) == SingularityClass::Z2_NEG);
  CHECK(classify_singularity(5, 1, {1, 1, 3}) == SingularityClass::NONISOLATED);
}
