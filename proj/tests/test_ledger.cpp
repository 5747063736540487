#include "spinfold/ledger.hpp"

#include <doctest.h>

using namespace spinfold;

namespace {

const WeightSystem six({1, 1, 1, 1, 4, 4});

SpaceState seeded(std::int64_t chi) { return lefschetz_seed(six, 1, chi); }

} // namespace

TEST_CASE("Lefschetz seed") {
  CHECK(seeded(4887).betti.b[4] == 4883);
  CHECK(seeded(9498).betti.b[4] == 9494);
  CHECK(lefschetz_seed(WeightSystem({1, 1, 1, 1, 4, 4, 4}), 2, 2580).betti.b[4] == 2576);
  CHECK(seeded(23325).betti.b[4] == 23321);
  CHECK_THROWS(lefschetz_seed(WeightSystem({1, 1, 1, 1, 4, 4, 4}), 1, 10));
  SpaceState s = seeded(4887);
  CHECK(s.classes.entries.size() == 1);
  CHECK(s.classes.entries[0].action == ClassAction::MINUS);
  CHECK(s.betti.consistent());
}

TEST_CASE("holomorphic quotient") {
  SpaceState q = quotient_holomorphic(seeded(2708), 308);
  CHECK(q.betti.chi == 1508);
  CHECK(q.betti.b[2] == 1);
  CHECK(q.betti.b[4] == 1504);
  SpaceState s = seeded(2708);
  CHECK(quotient_holomorphic(s, 2708).betti.b == s.betti.b);
  CHECK_THROWS(quotient_holomorphic(s, 307));
}

TEST_CASE("point blow-ups") {
  SpaceState s = seeded(4887);
  s.singular_points = 3;
  SpaceState b = blowup_points(s, {0, 1});
  CHECK(b.betti.chi == 4893);
  CHECK(b.betti.b[2] == 3);
  CHECK(b.singular_points == 1);
  CHECK(b.classes.valid());
  CHECK(blowup_points(s, {0, 0}).betti.b == s.betti.b);
  CHECK_THROWS(blowup_points(s, {0, 1}, SingularityClass::Z2_NEG));
  CHECK_THROWS(blowup_points(s, {0, 2}));
}

TEST_CASE("locus blow-ups") {
  SpaceState w = lefschetz_seed(six, 1, 7453);
  CHECK(w.betti.b[4] == 7449);
  SpaceState y = blowup_locus(w, LocusBetti::from_low(1, 1, 6, 1), fiber_constant("C3/Z5"));
  CHECK(y.betti.b[2] == 3);
  CHECK(y.betti.b[3] == 12);
  CHECK(y.betti.b[4] == 7453);
  CHECK(y.betti.consistent());

  SpaceState q = quotient_holomorphic(seeded(2708), 308);
  SpaceState s = blowup_locus(q, LocusBetti::from_low(2, 1, 0, 302), fiber_constant("C2/Z2"));
  CHECK(s.betti.b[2] == 2);
  CHECK(s.betti.b[4] == 1806);
  CHECK(s.betti.chi == 1812);
  CHECK_THROWS(blowup_locus(q, LocusBetti::from_low(2, 1, 0, 302), fiber_constant("C5/Z7")));
  CHECK_THROWS(LocusBetti::from_low(1, 1, 6, 2));
}

TEST_CASE("two-cubic family ledger") {
  for (int k = 0; k <= 4; ++k) {
    SpaceState w = lefschetz_seed(WeightSystem({3, 3, 3, 3, 4, 4, 4}), 2, 389);
    w.singular_points = 9;
    CHECK(w.betti.b[4] == 385);
    SpaceState y = blowup_locus(w, LocusBetti::from_low(1, 1, 66, 1), fiber_constant("C3/Z3"));
    y = blowup_points(y, {0, 4 - k});
    CHECK(y.betti.b[2] == 10 - 2 * k);
    CHECK(y.betti.b[3] == 66);
    CHECK(y.betti.b[4] == 395 - 2 * k);
    SpaceState z = quotient_antiholomorphic(y, 2 * k + 1);
    CHECK(z.betti.chi == 143 - 2 * k);
    CHECK(z.betti.b[2] == 4 - k);
    CHECK(z.betti.b[3] == 33);
    CHECK(z.betti.b[4] == 199);
    SpaceState m = glue_ale(z, std::vector<int>(2 * k + 1, 2));
    CHECK(m.betti.b[4] == 200 + 2 * k);
    CHECK(*m.betti.b4_plus == 132 + k);
    CHECK(*m.betti.b4_minus == 68 + k);
    CHECK(ahat_check(m));
  }
}

TEST_CASE("antiholomorphic quotient and gluing") {
  SpaceState y = seeded(4887);
  y.singular_points = 3;
  SpaceState z = quotient_antiholomorphic(y, 3);
  CHECK(z.betti.chi == 2445);
  CHECK(z.betti.b[2] == 0);
  CHECK(z.betti.b[4] == 2443);
  SpaceState m = glue_ale(z, {2, 2, 2});
  CHECK(m.betti.b[4] == 2446);
  CHECK(*m.betti.b4_plus == 1639);
  CHECK(*m.betti.b4_minus == 807);
  CHECK(*m.moduli == 808);
  CHECK(m.holonomy == "Spin(7)");
  CHECK(m.pi1 == "1");
  CHECK(ahat_check(m));
  SpaceState bad = m;
  *bad.betti.b4_plus += 1;
  CHECK_FALSE(ahat_check(bad));

  SpaceState flat = glue_ale(z, {1, 1, 1});
  CHECK(flat.pi1 == "Z2");
  CHECK(flat.holonomy == "Z2 x| SU(4)");
  CHECK_THROWS(glue_ale(z, {2, 2}));
  CHECK_THROWS(glue_ale(z, {2, 2, 3}));

  SpaceState y1 = blowup_points(y, {0, 1});
  SpaceState z1 = quotient_antiholomorphic(y1, 1);
  CHECK(z1.betti.b[2] == 1);
  CHECK(z1.betti.b[4] == 2443);

  SpaceState z2 = quotient_antiholomorphic(seeded(23325), 1);
  SpaceState m2 = glue_ale(z2, {2});
  CHECK(m2.betti.b[4] == 11662);
  CHECK(*m2.betti.b4_plus == 7783);
  CHECK(*m2.betti.b4_minus == 3879);
  CHECK_THROWS(quotient_antiholomorphic(seeded(4887), 2));
}

TEST_CASE("h31 advisory") {
  H31Report r = h31_crosscheck(six, 12, 1, 0, 3, 807);
  CHECK(r.supported);
  CHECK(r.h31 == 804);
  CHECK(r.predicted_b4_minus == 807);
  CHECK(r.match());
  CHECK(h31_crosscheck(WeightSystem({1, 1, 1, 1, 4, 8}), 16, 1, 0, 2, 1575).match());
  CHECK(h31_crosscheck(WeightSystem({1, 1, 1, 1, 8, 12}), 24, 1, 0, 1, 3879).match());
  CHECK_FALSE(h31_crosscheck(six, 12, 3, 1, 1, 806, false).supported);
  CHECK_FALSE(h31_crosscheck(WeightSystem({1, 1, 1, 1, 4, 4, 4}), 8, 1, 0, 4, 423).supported);
}
