#pragma once

// Reference computations that share no code path with the library's
// algorithms. Used by the acceptance criteria and the unit tests.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "burniat/effectivity.hpp"
#include "burniat/picard.hpp"

namespace burniat::oracle {

// Picard lattice of the degree-6 del Pezzo surface in the basis
// H, E1, E2, E3 with form diag(1, -1, -1, -1).
struct Lattice4 {
  std::int64_t h = 0, e1 = 0, e2 = 0, e3 = 0;

  friend std::int64_t dot(const Lattice4& x, const Lattice4& y) {
    return x.h * y.h - x.e1 * y.e1 - x.e2 * y.e2 - x.e3 * y.e3;
  }
};

// Image curve of a generator: the hexagon A0, C3, B0, A3, C0, B3 is
// E1, H-E1-E2, E2, H-E2-E3, E3, H-E1-E3; the genus-2 curves lie in the
// pencils |C0 + A3|, |A0 + B3|, |B0 + C3|.
Lattice4 image(CurveLabel label);
Lattice4 anticanonical();

// Generator intersections and degrees read off the cover: Z.W on the
// surface equals the product of the images, Z.K equals image.(-K).
std::int64_t gram(CurveLabel x, CurveLabel y);
std::int64_t degree(CurveLabel x);

// Hexagon neighbours (cyclic order A0, C3, B0, A3, C0, B3).
bool hexagon_adjacent(CurveLabel x, CurveLabel y);

// Literal search over even b3 in [0, l-b], even c3 in [0, l-c].
std::optional<Step1Solution> step1_search(std::int64_t d, std::int64_t a, std::int64_t b,
                                          std::int64_t c);

using ClassKey = std::array<std::int64_t, 13>;
ClassKey key(const DivisorClass& divisor);

// Every class sum z_i Z_i with z_i >= 0 and degree <= max_degree. Since
// degree is additive and positive on generators, this is exactly the set of
// effective classes with d <= max_degree.
std::set<ClassKey> effective_classes(std::int64_t max_degree);

// h0 of the line bundle O_Z(D) on an elliptic generator Z (index 0 or 3),
// from the restriction degree and torsion label.
std::int64_t h0_on_curve(const DivisorClass& divisor, CurveLabel z);
// h1 of O_Z(D) on an elliptic generator; h1 = h0(O_Z(-D)).
std::int64_t h1_on_curve(const DivisorClass& divisor, CurveLabel z);

}  // namespace burniat::oracle
