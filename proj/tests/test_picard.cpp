#include <random>
#include <set>

#include "burniat/errors.hpp"
#include "burniat/parse.hpp"
#include "burniat/picard.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace burniat;
using namespace burniat::labels;

namespace {

Slot S(std::int64_t deg, const char* bits) {
  return Slot{deg, Bit2(static_cast<unsigned>(bits[0] - '0'), static_cast<unsigned>(bits[1] - '0'))};
}

// Random member of Pic X as an integer combination of generators.
DivisorClass random_divisor(std::mt19937_64& rng, int spread = 4) {
  std::uniform_int_distribution<std::int64_t> coef(-spread, spread);
  GenCombo c;
  for (auto& z : c.z) z = coef(rng);
  return from_generators(c);
}

}  // namespace

TEST_CASE("generator rows") {
  const DivisorClass a0 = generator(A0);
  CHECK(a0.d() == 1);
  CHECK(a0.slots() == std::array<Slot, 6>{S(-1, "00"), S(0, "00"), S(0, "00"), S(0, "00"), S(1, "10"), S(1, "00")});
  const DivisorClass c2 = generator(C2);
  CHECK(c2.d() == 2);
  CHECK(c2.slots() == std::array<Slot, 6>{S(1, "11"), S(0, "00"), S(0, "00"), S(1, "01"), S(0, "00"), S(0, "00")});
  CHECK(apply_symmetry(Symmetry{1, false}, a0) == generator(B0));
}

TEST_CASE("canonical class") {
  const DivisorClass k = canonical_class();
  CHECK(k.d() == 6);
  for (int i = 0; i < 6; ++i) CHECK(k.slot(i) == S(1, "00"));
  CHECK((k - k).is_zero());
  CHECK(intersect(k, k) == 6);
  CHECK(k.num_class() == NumClass{6, 1, 1, 1});
  CHECK(k.ell() == 3);
}

TEST_CASE("from_truncated") {
  CHECK(DivisorClass::from_truncated(1, S(-1, "00"), S(0, "00"), S(0, "00")) == generator(A0));
  CHECK(DivisorClass::from_truncated(0, S(0, "00"), S(0, "00"), S(0, "00")).is_zero());
  const DivisorClass a1 = DivisorClass::from_truncated(2, S(0, "00"), S(1, "01"), S(0, "00"));
  CHECK(a1.slot(3) == S(0, "00"));
  CHECK(a1.slot(4) == S(1, "11"));
  CHECK(a1.slot(5) == S(0, "00"));
  CHECK(a1 == generator(A1));
  CHECK_THROWS_AS(DivisorClass::from_truncated(1, S(0, "00"), S(0, "00"), S(0, "00")), MembershipError);
}

TEST_CASE("from_full rejects inconsistent starred slots") {
  std::array<Slot, 6> slots = generator(A0).slots();
  CHECK(DivisorClass::from_full(1, slots) == generator(A0));
  slots[4] = S(1, "00");
  CHECK_THROWS_AS(DivisorClass::from_full(1, slots), MembershipError);
}

TEST_CASE("truncated coordinates determine the class") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const DivisorClass x = random_divisor(rng);
    CHECK(DivisorClass::from_truncated(x.d(), x.slot(0), x.slot(1), x.slot(2)) == x);
    CHECK(DivisorClass::from_full(x.d(), x.slots()) == x);
  }
}

TEST_CASE("from_generators") {
  GenCombo hex;
  for (const CurveLabel l : {A0, C3, B0, A3, C0, B3}) hex[l] = 1;
  CHECK(from_generators(hex) == canonical_class() + torsion_class(Torsion(Bit2(1, 0), Bit2(1, 0), Bit2(1, 0))));
  GenCombo x, y;
  x[A1] = 2;
  y[C0] = 2;
  y[A3] = 2;
  CHECK(from_generators(x) == from_generators(y));
  GenCombo p, q;
  p[A0] = p[B3] = p[A1] = p[B2] = 1;
  q[B0] = q[A3] = q[A2] = q[B1] = 1;
  CHECK(from_generators(p) == from_generators(q));
}

TEST_CASE("group law") {
  std::mt19937_64 rng(3);
  const DivisorClass d = random_divisor(rng);
  CHECK(d + DivisorClass{} == d);
  CHECK((d - d).is_zero());
  CHECK(-(-d) == d);
  GenCombo b;
  b[A0] = 2;
  b[B3] = 2;
  CHECK(generator(B1) + generator(B1) == from_generators(b));
  const DivisorClass e = random_divisor(rng);
  CHECK(d + e == e + d);
  CHECK(3 * d == d + d + d);
}

TEST_CASE("numerical class") {
  CHECK(generator(A0).num_class() == NumClass{1, -1, 0, 0});
  CHECK(generator(A0).ell() == 0);
  std::mt19937_64 rng(5);
  const DivisorClass d = random_divisor(rng);
  for (const Torsion t : enumerate_torsions()) CHECK((d + torsion_class(t)).num_class() == d.num_class());
  CHECK_THROWS_AS((NumClass{1, 0, 0, 0}.ell()), MembershipError);
  CHECK(NumClass{7, 0, 1, 1}.realizable());
  CHECK_FALSE(NumClass{7, 0, 1, 0}.realizable());
}

TEST_CASE("intersection form against the del Pezzo model") {
  CHECK(intersect(generator(A0), generator(A0)) == -1);
  CHECK(intersect(generator(A1), generator(A1)) == 0);
  CHECK(intersect(generator(A0), generator(C3)) == 1);
  CHECK(intersect(generator(A0), generator(B0)) == 0);
  CHECK(intersect(generator(A0), generator(A3)) == 0);
  for (const CurveLabel x : kAllLabels) {
    for (const CurveLabel y : kAllLabels) {
      CHECK(intersect(generator(x), generator(y)) == oracle::gram(x, y));
    }
    CHECK(generator(x).d() == oracle::degree(x));
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const DivisorClass d = random_divisor(rng);
    CHECK(intersect(d, canonical_class()) == d.d());
  }
}

TEST_CASE("intersection is bilinear on combinations") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  for (int i = 0; i < 200; ++i) {
    GenCombo x, y;
    for (auto& z : x.z) z = coef(rng);
    for (auto& z : y.z) z = coef(rng);
    std::int64_t want = 0;
    for (const CurveLabel p : kAllLabels)
      for (const CurveLabel q : kAllLabels) want += x[p] * y[q] * oracle::gram(p, q);
    CHECK(intersect(from_generators(x), from_generators(y)) == want);
  }
}

TEST_CASE("restriction degrees") {
  const DivisorClass k = canonical_class();
  for (const CurveLabel l : kSlotLabels) CHECK(restriction_degree(k, l) == 1);
  const DivisorClass d = parse_divisor("[9; 0:00, 2:00, 1:00]");
  CHECK(restriction_degree(d, B3) == d.ell() - d.c());
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const DivisorClass x = random_divisor(rng);
    for (const CurveLabel l : kAllLabels) CHECK(restriction_degree(x, l) == intersect(x, generator(l)));
  }
}

TEST_CASE("Euler characteristic") {
  CHECK(chi(DivisorClass{}) == 1);
  for (const Torsion t : enumerate_torsions()) CHECK(chi(torsion_class(t)) == 1);
  const DivisorClass d1 = parse_divisor("[10; 0:01, 1:11, 4:01]");
  CHECK(chi(d1) == 0);
  CHECK(chi(4 * canonical_class() - d1) == 6);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const DivisorClass x = random_divisor(rng);
    CHECK(chi(x) == chi(canonical_class() - x));
    CHECK(chi(x) == chi(x.num_class()));
  }
}

TEST_CASE("nef and ample") {
  CHECK(is_ample(canonical_class()));
  const DivisorClass f = generator(A0) + generator(B3);
  CHECK(f.num_class() == NumClass{2, 0, 0, 1});
  CHECK(is_nef(f));
  CHECK_FALSE(is_ample(f));
  int zero_slots = 0;
  for (const Slot& s : f.slots()) zero_slots += s.deg == 0;
  CHECK(zero_slots == 4);
  CHECK_FALSE(is_nef(generator(A0)));
}

TEST_CASE("symmetry group") {
  CHECK(apply_symmetry(Symmetry{0, true}, generator(A0)) == generator(A3));
  CHECK(apply_symmetry(Symmetry{0, true}, generator(C1)) == generator(C2));
  CHECK(apply_symmetry(Symmetry{1, false}, generator(A0)) == generator(B0));
  const auto& group = all_symmetries();
  std::set<std::pair<int, bool>> seen;
  for (const Symmetry g : group) seen.insert({g.rot, g.flip});
  CHECK(seen.size() == 6);
  std::mt19937_64 rng(23);
  for (const Symmetry g : group) {
    CHECK(apply_symmetry(g, canonical_class()) == canonical_class());
    for (const CurveLabel l : kAllLabels) CHECK(apply_symmetry(g, generator(l)) == generator(g.apply(l)));
    for (const Symmetry h : group) {
      const DivisorClass x = random_divisor(rng);
      CHECK(apply_symmetry(g.compose(h), x) == apply_symmetry(g, apply_symmetry(h, x)));
    }
    const DivisorClass x = random_divisor(rng), y = random_divisor(rng);
    CHECK(apply_symmetry(g, x + y) == apply_symmetry(g, x) + apply_symmetry(g, y));
    CHECK(intersect(apply_symmetry(g, x), apply_symmetry(g, y)) == intersect(x, y));
    CHECK(apply_symmetry(g.inverse(), apply_symmetry(g, x)) == x);
    CHECK(apply_symmetry(g, x.num_class()) == apply_symmetry(g, x).num_class());
  }
}

TEST_CASE("orbits") {
  const auto o = orbit(NumClass{6, 0, 0, 0});
  CHECK(o.size() == 2);
  CHECK(orbit(NumClass{6, 1, 1, 1}).size() == 1);
  for (const NumClass& n : orbit(NumClass{7, 0, 1, 1})) CHECK(chi(n) == chi(NumClass{7, 0, 1, 1}));
}

TEST_CASE("torsion subgroup") {
  const auto all = enumerate_torsions();
  CHECK(all.size() == 64);
  std::set<unsigned> distinct;
  for (const Torsion t : all) {
    distinct.insert(t.index());
    const DivisorClass c = torsion_class(t);
    CHECK(c.numerically_trivial());
    CHECK(c.torsion_bits() == t);
    CHECK((c + c).is_zero());
  }
  CHECK(distinct.size() == 64);
  const DivisorClass hex = parse_divisor("A0+C3+B0+A3+C0+B3");
  CHECK(torsion_between(canonical_class(), hex) == Torsion(Bit2(1, 0), Bit2(1, 0), Bit2(1, 0)));
  const auto t = torsion_between(parse_divisor("A1+A2"), parse_divisor("2*A1"));
  REQUIRE(t.has_value());
  CHECK_FALSE(t->is_zero());
  CHECK(torsion_between(parse_divisor("2*A1"), parse_divisor("2*(C0+A3)")) == Torsion{});
  CHECK_FALSE(torsion_between(generator(A0), generator(B0)).has_value());
}

TEST_CASE("overflow is reported") {
  const DivisorClass big = DivisorClass::from_truncated(3 * (INT64_MAX / 5), S(0, "00"), S(0, "00"), S(0, "00"));
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(intersect(big, big), OverflowError);
}
