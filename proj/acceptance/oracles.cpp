#include "oracles.hpp"

#include <functional>

namespace burniat::oracle {

Lattice4 image(CurveLabel label) {
  using namespace labels;
  if (label == A0) return {0, 1, 0, 0};
  if (label == C3) return {1, -1, -1, 0};
  if (label == B0) return {0, 0, 1, 0};
  if (label == A3) return {1, 0, -1, -1};
  if (label == C0) return {0, 0, 0, 1};
  if (label == B3) return {1, -1, 0, -1};
  switch (label.letter) {
    case Letter::A: return {1, 0, -1, 0};  // C0 + A3
    case Letter::B: return {1, 0, 0, -1};  // A0 + B3
    case Letter::C: return {1, -1, 0, 0};  // B0 + C3
  }
  return {};
}

Lattice4 anticanonical() { return {3, -1, -1, -1}; }

std::int64_t gram(CurveLabel x, CurveLabel y) { return dot(image(x), image(y)); }

std::int64_t degree(CurveLabel x) { return dot(image(x), anticanonical()); }

bool hexagon_adjacent(CurveLabel x, CurveLabel y) {
  using namespace labels;
  const std::array<CurveLabel, 6> ring = {A0, C3, B0, A3, C0, B3};
  for (std::size_t i = 0; i < 6; ++i) {
    const CurveLabel p = ring[i], q = ring[(i + 1) % 6];
    if ((p == x && q == y) || (p == y && q == x)) return true;
  }
  return false;
}

std::optional<Step1Solution> step1_search(std::int64_t d, std::int64_t a, std::int64_t b,
                                          std::int64_t c) {
  const std::int64_t s = d + a + b + c;
  if (s % 3 != 0) return std::nullopt;
  const std::int64_t ell = s / 3;
  for (std::int64_t b3 = 0; b3 <= ell - b; b3 += 2) {
    for (std::int64_t c3 = 0; c3 <= ell - c; c3 += 2) {
      Step1Solution x;
      x.b3 = b3;
      x.c3 = c3;
      x.a0 = b3 + c3 - a;
      x.b0 = ell - b3 - b;
      x.c0 = ell - c3 - c;
      x.a3 = ell - b3 - c3;
      if (x.a0 >= 0 && x.b0 >= 0 && x.c0 >= 0 && x.a3 >= 0 && x.a3 % 2 == 0) return x;
    }
  }
  return std::nullopt;
}

ClassKey key(const DivisorClass& divisor) {
  ClassKey k{};
  k[0] = divisor.d();
  for (int i = 0; i < 6; ++i) {
    k[static_cast<std::size_t>(1 + 2 * i)] = divisor.slot(i).deg;
    k[static_cast<std::size_t>(2 + 2 * i)] = divisor.slot(i).tor.bits();
  }
  return k;
}

std::set<ClassKey> effective_classes(std::int64_t max_degree) {
  std::set<ClassKey> out;
  std::function<void(std::size_t, std::int64_t, const DivisorClass&)> walk =
      [&](std::size_t index, std::int64_t budget, const DivisorClass& acc) {
        if (index == kAllLabels.size()) {
          out.insert(key(acc));
          return;
        }
        const CurveLabel l = kAllLabels[index];
        const DivisorClass g = generator(l);
        DivisorClass cur = acc;
        for (std::int64_t left = budget; left >= 0; left -= g.d()) {
          walk(index + 1, left, cur);
          cur += g;
        }
      };
  walk(0, max_degree, DivisorClass{});
  return out;
}

std::int64_t h0_on_curve(const DivisorClass& divisor, CurveLabel z) {
  const Slot& s = divisor.slot(slot_of(z));
  if (s.deg > 0) return s.deg;
  if (s.deg == 0) return s.tor.is_zero() ? 1 : 0;
  return 0;
}

std::int64_t h1_on_curve(const DivisorClass& divisor, CurveLabel z) {
  const Slot& s = divisor.slot(slot_of(z));
  if (s.deg < 0) return -s.deg;
  if (s.deg == 0) return s.tor.is_zero() ? 1 : 0;
  return 0;
}

}  // namespace burniat::oracle
