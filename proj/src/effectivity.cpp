#include "burniat/effectivity.hpp"

#include <algorithm>

#include "burniat/checked.hpp"
#include "burniat/errors.hpp"

namespace burniat {

std::int64_t Step1Solution::coefficient(int slot) const {
  switch (slot) {
    case 0: return a0;
    case 1: return b0;
    case 2: return c0;
    case 3: return a3;
    case 4: return b3;
    default: return c3;
  }
}

GenCombo Step1Solution::combo() const {
  GenCombo g;
  for (int k = 0; k < 6; ++k) g[kSlotLabels[static_cast<std::size_t>(k)]] = coefficient(k);
  return g;
}

namespace {

std::int64_t floor_even(std::int64_t x) { return x - mod_pos(x, 2); }
std::int64_t ceil_even(std::int64_t x) { return x + mod_pos(x, 2); }

}  // namespace

std::optional<Step1Solution> step1_solve(std::int64_t d, std::int64_t a, std::int64_t b,
                                         std::int64_t c) {
  const std::int64_t ell = NumClass{d, a, b, c}.ell();
  // a3 = l - b3 - c3 with b3, c3 and a3 all even.
  if (parity(ell) != 0) return std::nullopt;
  const std::int64_t room_b = checked_sub(ell, b);
  const std::int64_t room_c = checked_sub(ell, c);
  if (room_b < 0 || room_c < 0) return std::nullopt;
  const std::int64_t max_b3 = floor_even(room_b);
  const std::int64_t max_c3 = floor_even(room_c);
  // s = b3 + c3 must satisfy a <= s <= l.
  const std::int64_t s = ceil_even(std::max<std::int64_t>(a, 0));
  if (s > ell) return std::nullopt;
  Step1Solution sol;
  sol.b3 = std::max<std::int64_t>(0, s - max_c3);
  if (sol.b3 > max_b3) return std::nullopt;
  sol.c3 = s - sol.b3;
  sol.a3 = ell - s;
  sol.a0 = s - a;
  sol.b0 = ell - sol.b3 - b;
  sol.c0 = ell - sol.c3 - c;
  return sol;
}

std::array<GenCombo, 8> torsion_candidates(Torsion tau) {
  // Options for one A0[2]-type label, written with the letter whose curves
  // carry that label: index 1 ~ 01, index 2 ~ 11, index 3 ~ 10.
  const auto options = [](Bit2 bits, Letter letter) {
    const CurveLabel l1{letter, 1}, l2{letter, 2}, l3{letter, 3};
    std::array<std::vector<CurveLabel>, 2> out;
    switch (bits.bits()) {
      case 0b00: out = {std::vector<CurveLabel>{}, {l1, l2, l3}}; break;
      case 0b01: out = {std::vector<CurveLabel>{l1}, {l2, l3}}; break;
      case 0b11: out = {std::vector<CurveLabel>{l2}, {l1, l3}}; break;
      default: out = {std::vector<CurveLabel>{l3}, {l1, l2}}; break;
    }
    return out;
  };
  const auto on_a = options(tau.component(0), Letter::C);
  const auto on_b = options(tau.component(1), Letter::A);
  const auto on_c = options(tau.component(2), Letter::B);
  std::array<GenCombo, 8> out;
  for (int i = 0; i < 8; ++i) {
    GenCombo g;
    for (const CurveLabel l : on_a[static_cast<std::size_t>((i >> 2) & 1)]) g[l] += 1;
    for (const CurveLabel l : on_b[static_cast<std::size_t>((i >> 1) & 1)]) g[l] += 1;
    for (const CurveLabel l : on_c[static_cast<std::size_t>(i & 1)]) g[l] += 1;
    out[static_cast<std::size_t>(i)] = g;
  }
  return out;
}

namespace {

// Candidate terms in the order C-curves, A-curves, B-curves.
std::vector<CurveLabel> candidate_order(const GenCombo& g) {
  std::vector<CurveLabel> out;
  for (const Letter letter : {Letter::C, Letter::A, Letter::B}) {
    for (std::uint8_t i = 1; i <= 3; ++i) {
      const CurveLabel l{letter, i};
      for (std::int64_t k = 0; k < g[l]; ++k) out.push_back(l);
    }
  }
  return out;
}

void add_term(std::vector<std::pair<CurveLabel, std::int64_t>>& terms, CurveLabel l,
              std::int64_t k) {
  if (k == 0) return;
  for (auto& [label, coeff] : terms) {
    if (label == l) {
      coeff += k;
      return;
    }
  }
  terms.emplace_back(l, k);
}

}  // namespace

std::string EffWitness::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [label, coeff] : terms) {
    if (!out.empty()) out += "+";
    if (coeff != 1) out += std::to_string(coeff) + "*";
    out += label.name();
  }
  return out;
}

std::optional<EffWitness> is_effective(const DivisorClass& divisor) {
  const auto candidates = torsion_candidates(divisor.torsion_bits());
  for (int i = 0; i < 8; ++i) {
    const GenCombo& cand = candidates[static_cast<std::size_t>(i)];
    const DivisorClass rest = divisor - from_generators(cand);
    const auto sol = step1_solve(rest.d(), rest.a(), rest.b(), rest.c());
    if (!sol) continue;
    EffWitness w;
    w.candidate = i;
    for (int k = 0; k < 6; ++k) {
      add_term(w.terms, kSlotLabels[static_cast<std::size_t>(k)], sol->coefficient(k));
    }
    for (const CurveLabel l : candidate_order(cand)) add_term(w.terms, l, 1);
    for (const auto& [label, coeff] : w.terms) w.combo[label] = coeff;
    if (!(from_generators(w.combo) == divisor)) {
      throw InternalInconsistency("effectiveness witness " + w.str() +
                                  " does not sum to the queried class");
    }
    return w;
  }
  return std::nullopt;
}

DivisorClass untwisted(const NumClass& num) {
  return DivisorClass::from_truncated(num.d, Slot{num.a, {}}, Slot{num.b, {}}, Slot{num.c, {}});
}

int e_number(const NumClass& num) {
  const DivisorClass base = untwisted(num);
  int count = 0;
  for (const Torsion tau : enumerate_torsions()) {
    if (is_effective(base + torsion_class(tau))) ++count;
  }
  return count;
}

CriterionAnswer e_positive(const NumClass& num) {
  if (!num.realizable()) return {false, true};
  if (num.d <= 0) return {e_number(num) >= 1, false};
  const std::int64_t m = std::max({std::int64_t{0}, num.a, num.b, num.c});
  const std::int64_t ell = num.ell();
  return {m <= ell && ell <= num.d, true};
}

CriterionAnswer e_full(const NumClass& num) {
  if (!num.realizable()) return {false, true};
  if (num.d <= 0) return {e_number(num) == 64, false};
  const std::int64_t m = std::max({std::int64_t{0}, num.a, num.b, num.c});
  const std::int64_t ell = num.ell();
  return {num.d >= 7 && std::max<std::int64_t>(3, m + 2) <= ell && ell <= num.d - 3, true};
}

const char* to_string(TrimReason reason) {
  return reason == TrimReason::NegativeDegree ? "negative-degree" : "zero-degree-nonzero-torsion";
}

namespace {

std::optional<TrimStep> first_trim(const DivisorClass& divisor) {
  for (int k = 0; k < 6; ++k) {
    const Slot& s = divisor.slot(k);
    if (s.deg < 0) return TrimStep{kSlotLabels[static_cast<std::size_t>(k)], TrimReason::NegativeDegree};
    if (s.deg == 0 && !s.tor.is_zero()) {
      return TrimStep{kSlotLabels[static_cast<std::size_t>(k)], TrimReason::ZeroDegreeNonzeroTorsion};
    }
  }
  return std::nullopt;
}

}  // namespace

ReduceResult reduce(const DivisorClass& divisor) {
  ReduceResult out;
  out.reduced = divisor;
  if (divisor.d() < 0) {
    out.not_effective = true;
    return out;
  }
  while (const auto step = first_trim(out.reduced)) {
    if (out.reduced.d() == 0) {
      out.not_effective = true;
      return out;
    }
    out.reduced -= generator(step->label);
    out.steps.push_back(*step);
  }
  if (out.reduced.d() == 0 && !out.reduced.is_zero()) out.not_effective = true;
  return out;
}

bool is_reduced(const DivisorClass& divisor) {
  if (divisor.is_zero()) return true;
  return divisor.d() > 0 && !first_trim(divisor);
}

}  // namespace burniat
