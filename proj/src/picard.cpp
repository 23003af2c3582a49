#include "burniat/picard.hpp"

#include <algorithm>
#include <set>

#include "burniat/checked.hpp"
#include "burniat/errors.hpp"

namespace burniat {

std::string Bit2::str() const {
  std::string s(2, '0');
  s[0] = static_cast<char>('0' + e1());
  s[1] = static_cast<char>('0' + e2());
  return s;
}

std::string CurveLabel::name() const {
  std::string s(2, ' ');
  s[0] = static_cast<char>('A' + static_cast<int>(letter));
  s[1] = static_cast<char>('0' + index);
  return s;
}

std::optional<CurveLabel> CurveLabel::parse(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  if (text[0] < 'A' || text[0] > 'C' || text[1] < '0' || text[1] > '3') return std::nullopt;
  return CurveLabel{static_cast<Letter>(text[0] - 'A'), static_cast<std::uint8_t>(text[1] - '0')};
}

int slot_of(CurveLabel label) {
  if (!label.is_elliptic()) throw DomainError("slot_of: " + label.name() + " has no slot");
  return static_cast<int>(label.letter) + (label.index == 3 ? 3 : 0);
}

std::array<Bit2, 6> Torsion::full() const {
  const Bit2 a = component(0), b = component(1), c = component(2);
  return {a,
          b,
          c,
          Bit2(a.e1() ^ b.e2(), a.e2()),
          Bit2(b.e1() ^ c.e2(), b.e2()),
          Bit2(c.e1() ^ a.e2(), c.e2())};
}

std::string Torsion::str() const {
  return component(0).str() + " " + component(1).str() + " " + component(2).str();
}

std::vector<Torsion> enumerate_torsions() {
  std::vector<Torsion> out;
  out.reserve(64);
  for (unsigned i = 0; i < 64; ++i) out.push_back(Torsion::from_index(i));
  return out;
}

bool NumClass::realizable() const {
  const std::int64_t s = checked_add(checked_add(d, a), checked_add(b, c));
  return mod_pos(s, 3) == 0;
}

std::int64_t NumClass::ell() const {
  const std::int64_t s = checked_add(checked_add(d, a), checked_add(b, c));
  if (mod_pos(s, 3) != 0) {
    throw MembershipError("numerical class " + str() + " is not in Pic X: 3 does not divide d+a+b+c");
  }
  return s / 3;
}

std::string NumClass::str() const {
  return "[" + std::to_string(d) + ";" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + "]";
}

namespace {

// Starred slots (A3, B3, C3) from the truncated data. Degrees are
// (l-b-c, l-c-a, l-a-b); torsion labels follow the affine rule
//   A3: (alpha1 + beta2 + c + l, alpha2), and cyclically.
std::array<Slot, 3> derive_starred(std::int64_t ell, const Slot& a, const Slot& b, const Slot& c) {
  const auto star = [ell](const Slot& self, const Slot& next, std::int64_t prev_deg,
                          std::int64_t next_deg, std::int64_t skip_deg) {
    Slot s;
    s.deg = checked_sub(checked_sub(ell, next_deg), skip_deg);
    const unsigned e1 = self.tor.e1() ^ next.tor.e2() ^ parity(prev_deg) ^ parity(ell);
    s.tor = Bit2(e1, self.tor.e2());
    return s;
  };
  // A3 pairs alpha with beta and uses c; B3 pairs beta with gamma and uses a;
  // C3 pairs gamma with alpha and uses b.
  return {star(a, b, c.deg, b.deg, c.deg), star(b, c, a.deg, c.deg, a.deg),
          star(c, a, b.deg, a.deg, b.deg)};
}

}  // namespace

DivisorClass DivisorClass::from_truncated(std::int64_t d, Slot a, Slot b, Slot c) {
  const std::int64_t ell = NumClass{d, a.deg, b.deg, c.deg}.ell();
  DivisorClass out;
  out.d_ = d;
  const auto starred = derive_starred(ell, a, b, c);
  out.slots_ = {a, b, c, starred[0], starred[1], starred[2]};
  return out;
}

DivisorClass DivisorClass::from_full(std::int64_t d, const std::array<Slot, 6>& slots) {
  DivisorClass out = from_truncated(d, slots[0], slots[1], slots[2]);
  for (int k = 3; k < 6; ++k) {
    if (!(out.slots_[static_cast<std::size_t>(k)] == slots[static_cast<std::size_t>(k)])) {
      throw MembershipError("slot " + kSlotLabels[static_cast<std::size_t>(k)].name() +
                            " disagrees with the truncated coordinates");
    }
  }
  return out;
}

std::int64_t DivisorClass::ell() const { return num_class().ell(); }

bool DivisorClass::is_zero() const { return *this == DivisorClass{}; }

DivisorClass DivisorClass::operator-() const {
  DivisorClass out;
  out.d_ = checked_neg(d_);
  for (std::size_t k = 0; k < 6; ++k) {
    out.slots_[k] = Slot{checked_neg(slots_[k].deg), slots_[k].tor};
  }
  return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  d_ = checked_add(d_, other.d_);
  for (std::size_t k = 0; k < 6; ++k) {
    slots_[k].deg = checked_add(slots_[k].deg, other.slots_[k].deg);
    slots_[k].tor = slots_[k].tor + other.slots_[k].tor;
  }
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  d_ = checked_sub(d_, other.d_);
  for (std::size_t k = 0; k < 6; ++k) {
    slots_[k].deg = checked_sub(slots_[k].deg, other.slots_[k].deg);
    slots_[k].tor = slots_[k].tor + other.slots_[k].tor;
  }
  return *this;
}

DivisorClass operator*(std::int64_t k, const DivisorClass& x) {
  DivisorClass out;
  out.d_ = checked_mul(k, x.d_);
  const bool odd = parity(k) != 0;
  for (std::size_t i = 0; i < 6; ++i) {
    out.slots_[i].deg = checked_mul(k, x.slots_[i].deg);
    out.slots_[i].tor = odd ? x.slots_[i].tor : Bit2{};
  }
  return out;
}

bool GenCombo::nonnegative() const {
  return std::all_of(z.begin(), z.end(), [](std::int64_t v) { return v >= 0; });
}

std::int64_t GenCombo::degree() const {
  std::int64_t total = 0;
  for (const CurveLabel l : kAllLabels) {
    total = checked_add(total, checked_mul((*this)[l], l.is_elliptic() ? 1 : 2));
  }
  return total;
}

std::string GenCombo::str() const {
  std::string out;
  for (const CurveLabel l : kAllLabels) {
    const std::int64_t v = (*this)[l];
    if (v == 0) continue;
    const std::int64_t mag = v < 0 ? -v : v;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += l.name();
  }
  return out.empty() ? "0" : out;
}

int Symmetry::source_slot(int target) const {
  // rot puts the C-slot value into the A-slot: new[A] = old[C], new[B] = old[A].
  const int half = target / 3;
  const int pos = target % 3;
  const int src_pos = (pos - rot % 3 + 3) % 3;
  const int src_half = flip ? 1 - half : half;
  return src_half * 3 + src_pos;
}

Symmetry Symmetry::compose(Symmetry other) const {
  return Symmetry{static_cast<std::uint8_t>((rot + other.rot) % 3), flip != other.flip};
}

Symmetry Symmetry::inverse() const {
  return Symmetry{static_cast<std::uint8_t>((3 - rot % 3) % 3), flip};
}

CurveLabel Symmetry::apply(CurveLabel label) const {
  CurveLabel out = label;
  out.letter = static_cast<Letter>((static_cast<int>(label.letter) + rot) % 3);
  if (flip) out.index = static_cast<std::uint8_t>(3 - label.index);
  return out;
}

std::string Symmetry::str() const {
  return "rot=" + std::to_string(rot) + ",flip=" + std::to_string(flip ? 1 : 0);
}

const std::array<Symmetry, 6>& all_symmetries() {
  static const std::array<Symmetry, 6> group = {Symmetry{0, false}, Symmetry{0, true},
                                                Symmetry{1, false}, Symmetry{1, true},
                                                Symmetry{2, false}, Symmetry{2, true}};
  return group;
}

namespace {

struct Row {
  std::int64_t d;
  std::array<std::pair<std::int64_t, unsigned>, 6> slots;
};

// Symmetric coordinates of the generators and K, in id order followed by K.
constexpr std::array<Row, 13> kTable = {{
    {1, {{{-1, 0b00}, {0, 0b00}, {0, 0b00}, {0, 0b00}, {1, 0b10}, {1, 0b00}}}},  // A0
    {2, {{{0, 0b00}, {1, 0b01}, {0, 0b00}, {0, 0b00}, {1, 0b11}, {0, 0b00}}}},   // A1
    {2, {{{0, 0b00}, {1, 0b11}, {0, 0b00}, {0, 0b00}, {1, 0b01}, {0, 0b00}}}},   // A2
    {1, {{{0, 0b00}, {1, 0b10}, {1, 0b00}, {-1, 0b00}, {0, 0b00}, {0, 0b00}}}},  // A3
    {1, {{{0, 0b00}, {-1, 0b00}, {0, 0b00}, {1, 0b00}, {0, 0b00}, {1, 0b10}}}},  // B0
    {2, {{{0, 0b00}, {0, 0b00}, {1, 0b01}, {0, 0b00}, {0, 0b00}, {1, 0b11}}}},   // B1
    {2, {{{0, 0b00}, {0, 0b00}, {1, 0b11}, {0, 0b00}, {0, 0b00}, {1, 0b01}}}},   // B2
    {1, {{{1, 0b00}, {0, 0b00}, {1, 0b10}, {0, 0b00}, {-1, 0b00}, {0, 0b00}}}},  // B3
    {1, {{{0, 0b00}, {0, 0b00}, {-1, 0b00}, {1, 0b10}, {1, 0b00}, {0, 0b00}}}},  // C0
    {2, {{{1, 0b01}, {0, 0b00}, {0, 0b00}, {1, 0b11}, {0, 0b00}, {0, 0b00}}}},   // C1
    {2, {{{1, 0b11}, {0, 0b00}, {0, 0b00}, {1, 0b01}, {0, 0b00}, {0, 0b00}}}},   // C2
    {1, {{{1, 0b10}, {1, 0b00}, {0, 0b00}, {0, 0b00}, {0, 0b00}, {-1, 0b00}}}},  // C3
    {6, {{{1, 0b00}, {1, 0b00}, {1, 0b00}, {1, 0b00}, {1, 0b00}, {1, 0b00}}}},   // K
}};

DivisorClass from_row(const Row& row) {
  std::array<Slot, 6> slots;
  for (std::size_t k = 0; k < 6; ++k) {
    slots[k] = Slot{row.slots[k].first, Bit2::from_bits(row.slots[k].second)};
  }
  return DivisorClass::from_full(row.d, slots);
}

const std::array<DivisorClass, 13>& table() {
  static const std::array<DivisorClass, 13> rows = [] {
    std::array<DivisorClass, 13> out;
    for (std::size_t i = 0; i < 13; ++i) out[i] = from_row(kTable[i]);
    return out;
  }();
  return rows;
}

}  // namespace

DivisorClass generator(CurveLabel label) { return table()[static_cast<std::size_t>(label.id())]; }

DivisorClass canonical_class() { return table()[12]; }

DivisorClass torsion_class(Torsion tau) {
  return DivisorClass::from_truncated(0, Slot{0, tau.component(0)}, Slot{0, tau.component(1)},
                                      Slot{0, tau.component(2)});
}

DivisorClass from_generators(const GenCombo& combo) {
  DivisorClass out;
  for (const CurveLabel l : kAllLabels) {
    const std::int64_t k = combo[l];
    if (k != 0) out += k * generator(l);
  }
  return out;
}

std::optional<Torsion> torsion_between(const DivisorClass& from, const DivisorClass& to) {
  const DivisorClass diff = to - from;
  if (!diff.numerically_trivial()) return std::nullopt;
  return diff.torsion_bits();
}

std::int64_t intersect(const NumClass& x, const NumClass& y) {
  std::int64_t r = checked_mul(x.ell(), y.ell());
  r = checked_sub(r, checked_mul(x.a, y.a));
  r = checked_sub(r, checked_mul(x.b, y.b));
  r = checked_sub(r, checked_mul(x.c, y.c));
  return r;
}

std::int64_t intersect(const DivisorClass& x, const DivisorClass& y) {
  return intersect(x.num_class(), y.num_class());
}

std::int64_t restriction_degree(const DivisorClass& divisor, CurveLabel label) {
  if (label.is_elliptic()) return divisor.slot(slot_of(label)).deg;
  // A1, A2 ~ C0 + A3; B1, B2 ~ A0 + B3; C1, C2 ~ B0 + C3 numerically.
  const std::int64_t ell = divisor.ell();
  switch (label.letter) {
    case Letter::A: return checked_sub(ell, divisor.b());
    case Letter::B: return checked_sub(ell, divisor.c());
    case Letter::C: return checked_sub(ell, divisor.a());
  }
  return 0;
}

std::int64_t chi(const NumClass& num) {
  const std::int64_t twice = checked_sub(intersect(num, num), num.d);
  if (mod_pos(twice, 2) != 0) {
    throw InternalInconsistency("odd D^2 - D.K for " + num.str());
  }
  return twice / 2 + 1;
}

std::int64_t chi(const DivisorClass& divisor) { return chi(divisor.num_class()); }

bool is_nef(const DivisorClass& divisor) {
  return std::all_of(divisor.slots().begin(), divisor.slots().end(),
                     [](const Slot& s) { return s.deg >= 0; });
}

bool is_ample(const DivisorClass& divisor) {
  const bool positive = std::all_of(divisor.slots().begin(), divisor.slots().end(),
                                    [](const Slot& s) { return s.deg > 0; });
  return positive && intersect(divisor, divisor) > 0;
}

DivisorClass apply_symmetry(Symmetry g, const DivisorClass& divisor) {
  std::array<Slot, 6> slots;
  for (int k = 0; k < 6; ++k) slots[static_cast<std::size_t>(k)] = divisor.slot(g.source_slot(k));
  return DivisorClass::from_full(divisor.d(), slots);
}

NumClass apply_symmetry(Symmetry g, const NumClass& num) {
  NumClass out = num;
  if (g.flip) {
    const std::int64_t ell = num.ell();
    out.a = ell - num.b - num.c;
    out.b = ell - num.c - num.a;
    out.c = ell - num.a - num.b;
  }
  for (int r = 0; r < g.rot % 3; ++r) out = NumClass{out.d, out.c, out.a, out.b};
  return out;
}

std::vector<NumClass> orbit(const NumClass& num) {
  std::set<NumClass> seen;
  for (const Symmetry g : all_symmetries()) seen.insert(apply_symmetry(g, num));
  return {seen.begin(), seen.end()};
}

}  // namespace burniat
