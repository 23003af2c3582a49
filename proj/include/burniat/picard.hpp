#pragma once

// Picard group of the primary Burniat surface in symmetric coordinates.
//
// A class D is stored as d = (D.K) together with six slots, one per elliptic
// generator in the canonical order (A0, B0, C0, A3, B3, C3). Each slot holds
// the restriction degree and a 2-torsion label in (Z/2)^2. The first three
// slots (the truncated coordinates) determine the class; the last three are
// derived from them.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace burniat {

enum class Letter : std::uint8_t { A = 0, B = 1, C = 2 };

// An element (e1, e2) of (Z/2)^2, written "e1e2". Addition is XOR.
class Bit2 {
 public:
  constexpr Bit2() = default;
  constexpr Bit2(unsigned e1, unsigned e2)
      : v_(static_cast<std::uint8_t>(((e1 & 1u) << 1) | (e2 & 1u))) {}

  static constexpr Bit2 from_bits(unsigned v) { return Bit2((v >> 1) & 1u, v & 1u); }

  constexpr unsigned e1() const { return (v_ >> 1) & 1u; }
  constexpr unsigned e2() const { return v_ & 1u; }
  constexpr unsigned bits() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Bit2 operator+(Bit2 x, Bit2 y) { return from_bits(x.v_ ^ y.v_); }
  friend constexpr bool operator==(Bit2, Bit2) = default;

  std::string str() const;

 private:
  std::uint8_t v_ = 0;
};

struct CurveLabel {
  Letter letter = Letter::A;
  std::uint8_t index = 0;

  constexpr int id() const { return static_cast<int>(letter) * 4 + index; }
  static constexpr CurveLabel from_id(int id) {
    return CurveLabel{static_cast<Letter>(id / 4), static_cast<std::uint8_t>(id % 4)};
  }
  // Indices 0 and 3 are the elliptic (-1)-curves, 1 and 2 the genus-2 curves.
  constexpr bool is_elliptic() const { return index == 0 || index == 3; }

  std::string name() const;
  static std::optional<CurveLabel> parse(std::string_view text);

  friend constexpr bool operator==(CurveLabel, CurveLabel) = default;
};

namespace labels {
inline constexpr CurveLabel A0{Letter::A, 0}, A1{Letter::A, 1}, A2{Letter::A, 2}, A3{Letter::A, 3};
inline constexpr CurveLabel B0{Letter::B, 0}, B1{Letter::B, 1}, B2{Letter::B, 2}, B3{Letter::B, 3};
inline constexpr CurveLabel C0{Letter::C, 0}, C1{Letter::C, 1}, C2{Letter::C, 2}, C3{Letter::C, 3};
}  // namespace labels

// All twelve generators, in id order (A0..A3, B0..B3, C0..C3).
inline constexpr std::array<CurveLabel, 12> kAllLabels = {
    labels::A0, labels::A1, labels::A2, labels::A3, labels::B0, labels::B1,
    labels::B2, labels::B3, labels::C0, labels::C1, labels::C2, labels::C3};

// The canonical slot order.
inline constexpr std::array<CurveLabel, 6> kSlotLabels = {labels::A0, labels::B0, labels::C0,
                                                         labels::A3, labels::B3, labels::C3};

// Slot position (0..5) of an elliptic generator.
int slot_of(CurveLabel label);

struct Slot {
  std::int64_t deg = 0;
  Bit2 tor;

  friend bool operator==(const Slot&, const Slot&) = default;
};

// Element of the 64-element torsion subgroup, given by its A0[2], B0[2], C0[2]
// components (a1a2 b1b2 c1c2).
class Torsion {
 public:
  constexpr Torsion() = default;
  constexpr Torsion(Bit2 a, Bit2 b, Bit2 c)
      : bits_(static_cast<std::uint8_t>((a.bits() << 4) | (b.bits() << 2) | c.bits())) {}

  // index in [0, 64): a1 is the most significant bit.
  static constexpr Torsion from_index(unsigned index) {
    return Torsion(Bit2::from_bits(index >> 4), Bit2::from_bits(index >> 2), Bit2::from_bits(index));
  }

  constexpr unsigned index() const { return bits_; }
  constexpr Bit2 component(int k) const { return Bit2::from_bits(bits_ >> (2 * (2 - k))); }
  constexpr bool is_zero() const { return bits_ == 0; }

  // All six components, the last three derived:
  // (a1a2 b1b2 c1c2 | (a1+b2)a2 (b1+c2)b2 (c1+a2)c2).
  std::array<Bit2, 6> full() const;

  // "10 00 00"
  std::string str() const;

  friend constexpr Torsion operator+(Torsion x, Torsion y) {
    return from_index(x.bits_ ^ y.bits_);
  }
  friend constexpr bool operator==(Torsion, Torsion) = default;

 private:
  std::uint8_t bits_ = 0;
};

std::vector<Torsion> enumerate_torsions();

// Numerical class [d; a, b, c].
struct NumClass {
  std::int64_t d = 0, a = 0, b = 0, c = 0;

  bool realizable() const;
  // (d + a + b + c) / 3; throws MembershipError when not integral.
  std::int64_t ell() const;
  std::string str() const;

  friend auto operator<=>(const NumClass&, const NumClass&) = default;
};

class DivisorClass {
 public:
  // The zero class.
  DivisorClass() = default;

  // Builds the full coordinates from the truncated ones. Throws
  // MembershipError unless 3 divides d + a + b + c.
  static DivisorClass from_truncated(std::int64_t d, Slot a, Slot b, Slot c);

  // Accepts all six slots and checks the starred ones against the truncated
  // ones; throws MembershipError on mismatch.
  static DivisorClass from_full(std::int64_t d, const std::array<Slot, 6>& slots);

  std::int64_t d() const { return d_; }
  const Slot& slot(int k) const { return slots_[static_cast<std::size_t>(k)]; }
  const std::array<Slot, 6>& slots() const { return slots_; }

  std::int64_t a() const { return slots_[0].deg; }
  std::int64_t b() const { return slots_[1].deg; }
  std::int64_t c() const { return slots_[2].deg; }
  std::int64_t ell() const;

  NumClass num_class() const { return {d_, a(), b(), c()}; }
  // Truncated torsion labels; meaningful as a torsion element only when the
  // class is numerically trivial.
  Torsion torsion_bits() const { return Torsion(slots_[0].tor, slots_[1].tor, slots_[2].tor); }

  bool is_zero() const;
  bool numerically_trivial() const { return d_ == 0 && a() == 0 && b() == 0 && c() == 0; }

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
  friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& x);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::int64_t d_ = 0;
  std::array<Slot, 6> slots_{};
};

// Integer combination of the twelve generators.
struct GenCombo {
  std::array<std::int64_t, 12> z{};

  std::int64_t& operator[](CurveLabel l) { return z[static_cast<std::size_t>(l.id())]; }
  std::int64_t operator[](CurveLabel l) const { return z[static_cast<std::size_t>(l.id())]; }

  bool nonnegative() const;
  // Sum of the generator degrees against K.
  std::int64_t degree() const;
  // "A0 + 2*B3 - C1" style, generators in id order; "0" when empty.
  std::string str() const;

  friend bool operator==(const GenCombo&, const GenCombo&) = default;
};

// rot cycles letters A -> B -> C -> A; flip exchanges index i with 3 - i.
struct Symmetry {
  std::uint8_t rot = 0;
  bool flip = false;

  // Slot that lands in position `target` after applying this element.
  int source_slot(int target) const;
  Symmetry compose(Symmetry other) const;  // (this * other)
  Symmetry inverse() const;
  CurveLabel apply(CurveLabel label) const;
  std::string str() const;

  friend bool operator==(Symmetry, Symmetry) = default;
};

// The six group elements, rot-major: (0,0),(0,1),(1,0),(1,1),(2,0),(2,1).
const std::array<Symmetry, 6>& all_symmetries();

DivisorClass generator(CurveLabel label);
DivisorClass canonical_class();
DivisorClass torsion_class(Torsion tau);
DivisorClass from_generators(const GenCombo& combo);

// Numerically trivial difference E - D, if any.
std::optional<Torsion> torsion_between(const DivisorClass& from, const DivisorClass& to);

std::int64_t intersect(const DivisorClass& x, const DivisorClass& y);
std::int64_t intersect(const NumClass& x, const NumClass& y);
std::int64_t restriction_degree(const DivisorClass& divisor, CurveLabel label);
std::int64_t chi(const DivisorClass& divisor);
std::int64_t chi(const NumClass& num);
bool is_nef(const DivisorClass& divisor);
bool is_ample(const DivisorClass& divisor);

DivisorClass apply_symmetry(Symmetry g, const DivisorClass& divisor);
NumClass apply_symmetry(Symmetry g, const NumClass& num);
std::vector<NumClass> orbit(const NumClass& num);

}  // namespace burniat
