#include <random>

#include "burniat/errors.hpp"
#include "burniat/parse.hpp"
#include "burniat/picard.hpp"
#include "doctest.h"

using namespace burniat;
using namespace burniat::labels;

TEST_CASE("generator expressions") {
  GenCombo c;
  c[A0] = 1;
  c[B3] = 2;
  c[C1] = -1;
  CHECK(parse_divisor("A0 + 2*B3 - C1") == from_generators(c));
  CHECK(parse_divisor("A0+2B3-C1") == from_generators(c));
  CHECK(parse_divisor("K") == canonical_class());
  CHECK(parse_divisor("-K + 2*(A0 - B0)") == -canonical_class() + 2 * (generator(A0) - generator(B0)));
  CHECK(parse_divisor("0").is_zero());
}

TEST_CASE("coordinate literals") {
  const DivisorClass x = parse_divisor("[7; 1:10, 2:01, 2:11]");
  CHECK(x.d() == 7);
  CHECK(x.num_class() == NumClass{7, 1, 2, 2});
  CHECK(x.slot(0).tor == Bit2(1, 0));
  CHECK(x == parse_divisor("A0+C3+A1+B1+B3"));
  CHECK(parse_divisor("[10; 0:01, 1:11, 4:01; 0:01, 1:11, 4:11]") == parse_divisor("[10; 0:01, 1:11, 4:01]"));
  CHECK_THROWS_AS(parse_divisor("[10; 0:01, 1:11, 4:01; 0:01, 1:11, 4:01]"), MembershipError);
  CHECK_THROWS_AS(parse_divisor("[8; 0:00, 0:00, 0:00]"), MembershipError);
}

TEST_CASE("torsion literals") {
  CHECK(parse_torsion("(10 00 00)") == Torsion(Bit2(1, 0), Bit2(), Bit2()));
  CHECK(parse_torsion("100000") == parse_torsion("(10 00 00)"));
  CHECK(parse_divisor("K + (00 10 00)") == canonical_class() + torsion_class(Torsion(Bit2(), Bit2(1, 0), Bit2())));
  CHECK(parse_divisor("(000001)") == torsion_class(Torsion::from_index(1)));
  CHECK_THROWS_AS(parse_torsion("(10 00 0)"), ParseError);
}

TEST_CASE("format round trip") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  for (int i = 0; i < 500; ++i) {
    GenCombo c;
    for (auto& z : c.z) z = coef(rng);
    const DivisorClass x = from_generators(c);
    CHECK(parse_divisor(format(x)) == x);
    CHECK(parse_divisor(format_truncated(x)) == x);
  }
  CHECK(format(generator(A0)) == "[1; -1:00, 0:00, 0:00; 0:00, 1:10, 1:00]");
  CHECK(format_truncated(canonical_class()) == "[6; 1:00, 1:00, 1:00]");
  CHECK(format_table(generator(A0)) == "(1 | -1 00, 0 00, 0 00 | 0 00, 1 10, 1 00)");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_divisor("A0 + D1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_divisor(""), ParseError);
  CHECK_THROWS_AS(parse_divisor("A0 +"), ParseError);
  CHECK_THROWS_AS(parse_divisor("(A0"), ParseError);
  CHECK_THROWS_AS(parse_divisor("A4"), ParseError);
  CHECK_THROWS_AS(parse_divisor("[7; 1:12, 2:01, 2:11]"), ParseError);
  CHECK_THROWS_AS(parse_divisor("A0 B0"), ParseError);
}

TEST_CASE("oversized coefficients") {
  CHECK_THROWS_AS(parse_divisor("99999999999999999999*A0"), DomainError);
}
