#include <random>

#include "burniat/cohomology.hpp"
#include "burniat/errors.hpp"
#include "burniat/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace burniat;
using namespace burniat::labels;

namespace {

using H = std::array<std::int64_t, 3>;

DivisorClass P(const char* s) { return parse_divisor(s); }

const FamilyMatch* terminal_match(const CohResult& r) {
  if (r.trace.empty() || r.trace.back().tag != BranchTag::BaseCase || !r.trace.back().match) return nullptr;
  return &*r.trace.back().match;
}

// Divisors with d in [lo, hi], |a|, |b|, |c| <= r, every `stride`-th twist.
template <class F>
void sweep(std::int64_t lo, std::int64_t hi, std::int64_t r, unsigned stride, F&& body) {
  unsigned n = 0;
  for (std::int64_t d = lo; d <= hi; ++d)
    for (std::int64_t a = -r; a <= r; ++a)
      for (std::int64_t b = -r; b <= r; ++b)
        for (std::int64_t c = -r; c <= r; ++c) {
          if ((d + a + b + c) % 3 != 0) continue;
          const DivisorClass base = untwisted(NumClass{d, a, b, c});
          for (const Torsion t : enumerate_torsions()) {
            if (n++ % stride == 0) body(base + torsion_class(t));
          }
        }
}

}  // namespace

TEST_CASE("basic values") {
  CHECK(h_all(canonical_class()).h() == H{0, 0, 1});
  CHECK(h_all(DivisorClass{}).h() == H{1, 0, 0});
  CHECK(h_all(generator(A0)).h() == H{1, 1, 0});
  CHECK(h_all(generator(A1)).h() == H{1, 1, 0});
  CHECK(h_all(P("[7; 1:10, 2:01, 2:11]")).h() == H{2, 1, 0});
  CHECK(h_all(torsion_class(parse_torsion("(10 00 00)"))).h() == H{0, 1, 2});
  CHECK(h_all(torsion_class(parse_torsion("(01 00 00)"))).h() == H{0, 0, 1});
  CHECK(h_all(2 * canonical_class()).h() == H{7, 0, 0});
}

TEST_CASE("letters cannot be swapped") {
  CHECK(h_all(P("A0-B0")).h2 != h_all(P("B0-A0")).h2);
}

TEST_CASE("base-locus example at d = 8") {
  const DivisorClass d = P("A0+B0+K+(B2-B1)");
  CHECK(d == P("A0+B3+2*(A0+B3+C0)"));
  CHECK(h_all(d).h0 == 3);
  CHECK(h_all(d - generator(A0)).h0 == 3);
}

TEST_CASE("exceptional classes reduce by A0") {
  const DivisorClass d = P("5*(A0+B3)-2*B0+2*C0+(000001)");
  CHECK(d == P("3*B2+2*A2"));
  const auto r = h_all(d);
  CHECK(r.h0 >= 1);
  CHECK(r.h0 == h_all(d - generator(A0)).h0 + 1);
  CHECK(r.trace.front().tag == BranchTag::NefReduce);
}

TEST_CASE("[8; 0,2,2] goes to its base case") {
  const DivisorClass d = P("4*(A0+B3)-2*B0+2*C0");
  CHECK(d.num_class() == NumClass{8, 0, 2, 2});
  const auto r = h_all(d);
  const FamilyMatch* m = terminal_match(r);
  REQUIRE(m != nullptr);
  CHECK(m->family == Family::Eight022);
  CHECK(torsion_between(family_base(Family::Eight022, 0), d) == parse_torsion("(00 10 00)"));
  CHECK(r.h0 == 4);
}

TEST_CASE("K twists") {
  CHECK(h0_K_twist(Torsion{}) == 0);
  CHECK(h0_K_twist(parse_torsion("(10 00 00)")) == 2);
  CHECK(h0_K_twist(parse_torsion("(10 10 10)")) == 1);
  int flexible = 0;
  for (const Torsion t : enumerate_torsions()) {
    const auto r = h_all(canonical_class() + torsion_class(t));
    CHECK(r.h0 == h0_K_twist(t));
    flexible += r.h0 == 2;
  }
  CHECK(flexible == 3);
}

TEST_CASE("classification of reduced classes") {
  const FamilyMatch six = classify_reduced(P("2*(A0+C3+B0)"));
  CHECK(six.family == Family::Six000);
  CHECK(six.tau.is_zero());
  CHECK(six.g == Symmetry{});
  const FamilyMatch a1 = classify_reduced(generator(A1));
  CHECK(a1.family == Family::L01Lm1);
  CHECK(a1.ell == 1);
  CHECK_THROWS_AS(classify_reduced(2 * canonical_class()), ClassificationGap);
  for (const Family f : {Family::L00L, Family::L00Lm1, Family::L01Lm1, Family::L0Lm1_1}) {
    for (std::int64_t l = 3; l <= 8; ++l) {
      for (const Torsion t : enumerate_torsions()) {
        if (!tau_admissible(f, l, t)) continue;
        const DivisorClass x = family_base(f, l) + torsion_class(t);
        const FamilyMatch m = classify_reduced(x);
        CHECK(apply_symmetry(m.g, x) == family_base(m.family, m.ell) + torsion_class(m.tau));
        CHECK(h0_base_case(m) == h0_base_case(FamilyMatch{f, l, t, {}}));
      }
    }
  }
}

TEST_CASE("base-case values") {
  const Torsion zero{}, t10 = parse_torsion("(00 00 10)");
  CHECK(h0_base_case({Family::L00L, 2, zero, {}}) == 2);
  CHECK(h0_base_case({Family::L00L, 2, t10, {}}) == 1);
  for (const Torsion t : enumerate_torsions()) {
    if (tau_admissible(Family::L00L, 3, t)) CHECK(h0_base_case({Family::L00L, 3, t, {}}) == 2);
  }
  CHECK(h0_base_case({Family::Seven011, 0, parse_torsion("(00 10 00)"), {}}) == 3);
  CHECK(h0_base_case({Family::L00L_plus_K, 1, parse_torsion("(10 00 00)"), {}}) == 2);
  CHECK(h0_base_case({Family::L0Lm1_1, 3, parse_torsion("(00 10 10)"), {}}) == 2);
  CHECK_THROWS_AS(h0_base_case({Family::Six000, 0, t10, {}}), InvalidTau);
  CHECK_THROWS_AS(h0_base_case({Family::L00L, 2, parse_torsion("(00 00 01)"), {}}), InvalidTau);
}

TEST_CASE("admissible twists are exactly the reduced ones") {
  const Family families[] = {Family::Six000,  Family::L00L,       Family::L00Lm1,   Family::L01Lm1,
                             Family::L0Lm1_1, Family::Seven011,   Family::Eight001, Family::Eight022};
  for (const Family f : families) {
    const bool fixed = f == Family::Six000 || f == Family::Seven011 || f == Family::Eight001 || f == Family::Eight022;
    for (std::int64_t l = fixed ? 0 : 1; l <= (fixed ? 0 : 12); ++l) {
      for (const Torsion t : enumerate_torsions()) {
        const DivisorClass x = family_base(f, l) + torsion_class(t);
        CHECK_MESSAGE(tau_admissible(f, l, t) == is_reduced(x), std::string(to_string(f)), " l=", l, " tau=", t.str());
      }
    }
  }
}

TEST_CASE("budgets") {
  CHECK(h_all_with_budget(DivisorClass{}, 1).h() == H{1, 0, 0});
  CHECK(h_all_with_budget(canonical_class(), 10).h() == H{0, 0, 1});
  const DivisorClass long_trim = DivisorClass::from_truncated(1000, {-988, Bit2()}, {0, Bit2()}, {0, Bit2()});
  CHECK_THROWS_AS(h_all_with_budget(long_trim, 100), BudgetExceeded);
  const auto r = h_all_with_budget(long_trim, 2 * 1000);
  CHECK(r.trace.size() <= 2 * 1000);
  CHECK(r.h() == h_all(long_trim).h());
}

TEST_CASE("h0 through the nef reduction at large degree") {
  const DivisorClass d = DivisorClass::from_truncated(10000, {0, Bit2()}, {0, Bit2()}, {2, Bit2()});
  const auto r = h_all_with_budget(d, 20000);
  CHECK(r.h1 >= 0);
  CHECK(r.h2 == 0);
  CHECK(r.h0 - r.h1 == chi(d));
}

TEST_CASE("traces replay") {
  sweep(-8, 14, 4, 5, [](const DivisorClass& x) {
    const auto r = h_all(x);
    const bool dual = !r.trace.empty() && r.trace.front().tag == BranchTag::DualitySwap;
    if (!dual) CHECK(replay_trace(r.trace) == r.h0);
    CHECK(!r.trace.empty());
  });
}

TEST_CASE("Riemann-Roch, Serre duality and h0 h2 = 0") {
  sweep(-14, 20, 5, 11, [](const DivisorClass& x) {
    const auto r = h_all(x);
    const auto s = h_all(canonical_class() - x);
    CHECK(r.h0 - r.h1 + r.h2 == chi(x));
    CHECK(r.h0 == s.h2);
    CHECK(r.h1 == s.h1);
    CHECK(r.h2 == s.h0);
    CHECK(r.h0 * r.h2 == 0);
    CHECK(r.h1 >= 0);
  });
}

TEST_CASE("restriction sequences along elliptic generators") {
  // 0 -> O(D - Z) -> O(D) -> O_Z(D) -> 0 with Z elliptic.
  sweep(-6, 14, 4, 7, [](const DivisorClass& x) {
    const auto r = h_all(x);
    for (const CurveLabel z : kSlotLabels) {
      const auto s = h_all(x - generator(z));
      const std::int64_t h0z = oracle::h0_on_curve(x, z), h1z = oracle::h1_on_curve(x, z);
      CHECK(s.h0 <= r.h0);
      CHECK(r.h0 <= s.h0 + h0z);
      CHECK(r.h2 <= s.h2);
      CHECK(s.h2 <= r.h2 + h1z);
      CHECK(r.h1 <= s.h1 + h1z);
    }
  });
}

TEST_CASE("adding genus-2 generators") {
  sweep(-4, 10, 3, 13, [](const DivisorClass& x) {
    const auto r = h_all(x);
    for (const CurveLabel c : {A1, A2, B1, B2, C1, C2}) {
      const auto s = h_all(x + generator(c));
      const std::int64_t e = intersect(x + generator(c), generator(c));
      CHECK(r.h0 <= s.h0);
      CHECK(s.h0 <= r.h0 + std::max<std::int64_t>(0, e + 1));
    }
  });
}

TEST_CASE("effectiveness agrees with h0") {
  sweep(-6, 10, 4, 3, [](const DivisorClass& x) {
    CHECK(is_effective(x).has_value() == (h_all(x).h0 >= 1));
  });
}

TEST_CASE("h_all is symmetric") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  for (int i = 0; i < 300; ++i) {
    GenCombo c;
    for (auto& z : c.z) z = coef(rng);
    const DivisorClass x = from_generators(c);
    const auto r = h_all(x);
    for (const Symmetry g : all_symmetries()) CHECK(h_all(apply_symmetry(g, x)).h() == r.h());
  }
}
