#include "burniat/cohomology.hpp"

#include <initializer_list>

#include "burniat/checked.hpp"
#include "burniat/errors.hpp"

namespace burniat {

const char* to_string(Family family) {
  switch (family) {
    case Family::ZeroClass: return "ZeroClass";
    case Family::TorsionOnly: return "TorsionOnly";
    case Family::KTwist: return "KTwist";
    case Family::Six000: return "Six000";
    case Family::L00L: return "L00L";
    case Family::L00Lm1: return "L00Lm1";
    case Family::L01Lm1: return "L01Lm1";
    case Family::L0Lm1_1: return "L0Lm1_1";
    case Family::L00L_plus_K: return "L00L_plus_K";
    case Family::Seven011: return "Seven011";
    case Family::Eight001: return "Eight001";
    case Family::Eight022: return "Eight022";
  }
  return "?";
}

const char* to_string(BranchTag tag) {
  switch (tag) {
    case BranchTag::DualitySwap: return "DualitySwap";
    case BranchTag::NotEffective: return "NotEffective";
    case BranchTag::Trim: return "Trim";
    case BranchTag::KVVanishing: return "KVVanishing";
    case BranchTag::AmpleBoundary: return "AmpleBoundary";
    case BranchTag::NefReduce: return "NefReduce";
    case BranchTag::BaseCase: return "BaseCase";
  }
  return "?";
}

std::string BranchStep::str() const {
  std::string out = to_string(tag);
  switch (tag) {
    case BranchTag::Trim:
      if (trim) out += " " + trim->label.name() + " (" + to_string(trim->reason) + ")";
      break;
    case BranchTag::NefReduce:
      out += " " + g.str() + " +" + std::to_string(value);
      break;
    case BranchTag::BaseCase:
      if (match) {
        out += " " + std::string(to_string(match->family)) + " l=" + std::to_string(match->ell) +
               " tau=(" + match->tau.str() + ") " + match->g.str();
      }
      out += " h0=" + std::to_string(value);
      break;
    case BranchTag::KVVanishing:
      out += " h0=" + std::to_string(value);
      break;
    case BranchTag::NotEffective:
      out += " chi=" + std::to_string(value);
      break;
    default:
      break;
  }
  return out;
}

namespace {

using namespace labels;

DivisorClass gen_sum(std::initializer_list<CurveLabel> ls) {
  DivisorClass out;
  for (const CurveLabel l : ls) out += generator(l);
  return out;
}

// "*1" style patterns on one Bit2: any e1, fixed e2.
bool e2_is(Bit2 b, unsigned e2) { return b.e2() == e2; }

}  // namespace

DivisorClass family_base(Family family, std::int64_t ell) {
  const DivisorClass k = canonical_class();
  switch (family) {
    case Family::ZeroClass:
    case Family::TorsionOnly:
      return DivisorClass{};
    case Family::KTwist:
      return k;
    case Family::Six000:
      return 2 * gen_sum({A0, C3, B0});
    case Family::L00L:
      return ell * gen_sum({A0, B3});
    case Family::L00Lm1:
      return ell * gen_sum({A0, B3}) + generator(C0);
    case Family::L01Lm1:
      return checked_sub(ell, 1) * gen_sum({A0, B3}) + gen_sum({C0, A3});
    case Family::L0Lm1_1:
      return checked_sub(ell, 1) * gen_sum({C0, A3}) + gen_sum({A0, B3});
    case Family::L00L_plus_K:
      return ell * gen_sum({A0, B3}) + k;
    case Family::Seven011:
      return generator(A0) + k;
    case Family::Eight001:
      return gen_sum({A0, B0}) + k;
    case Family::Eight022:
      return gen_sum({A0, A3}) + k;
  }
  return DivisorClass{};
}

bool tau_admissible(Family family, std::int64_t ell, Torsion tau) {
  const Bit2 a = tau.component(0), b = tau.component(1), c = tau.component(2);
  switch (family) {
    case Family::ZeroClass:
      return tau.is_zero();
    case Family::TorsionOnly:
      return !tau.is_zero();
    case Family::KTwist:
    case Family::L00L_plus_K:
      return true;
    case Family::Six000:
      return tau.is_zero();
    case Family::Seven011:
      return a.is_zero();
    case Family::Eight001:
      return a.is_zero() && b.is_zero();
    case Family::Eight022:
      return a.is_zero() && e2_is(b, 0);
    case Family::L00L:
      return ell >= 1 && a.is_zero() && b.is_zero() && e2_is(c, parity(ell));
    case Family::L00Lm1:
      if (ell == 1) return a.is_zero() && b.is_zero() && c == Bit2(1, 0);
      return ell >= 2 && a.is_zero() && b.is_zero();
    case Family::L01Lm1:
      if (ell == 1) return a.is_zero() && e2_is(b, 1) && c.is_zero();
      return ell >= 2 && a.is_zero() && e2_is(b, 1);
    case Family::L0Lm1_1:
      if (ell <= 0) return false;
      if (ell == 1) return tau_admissible(Family::L00L, ell, tau);
      if (ell == 2) return tau_admissible(Family::L01Lm1, ell, tau);
      return a.is_zero() && e2_is(b, parity(ell) == 0 ? 1 : 0);
  }
  return false;
}

std::int64_t h0_K_twist(Torsion tau) {
  if (tau.is_zero()) return 0;
  const unsigned i = tau.index();
  if (i == 0b100000 || i == 0b001000 || i == 0b000010) return 2;
  return 1;
}

std::int64_t h0_base_case(const FamilyMatch& m) {
  if (!tau_admissible(m.family, m.ell, m.tau)) {
    throw InvalidTau("torsion (" + m.tau.str() + ") does not give a reduced form for " +
                     to_string(m.family) + " with l=" + std::to_string(m.ell));
  }
  const std::int64_t l = m.ell;
  const unsigned t = m.tau.index();
  switch (m.family) {
    case Family::ZeroClass:
      return 1;
    case Family::TorsionOnly:
      return 0;
    case Family::KTwist:
      return h0_K_twist(m.tau);
    case Family::Six000:
      return 3;
    case Family::Seven011:
      if (t == 0b001000) return 3;
      return t == 0 ? 1 : 2;
    case Family::Eight001:
      return t == 0 ? 2 : 3;
    case Family::Eight022:
      if (t == 0b001000) return 4;
      return t == 0 ? 2 : 3;
    case Family::L00L:
      if (parity(l) == 0) return t == 0 ? l / 2 + 1 : l / 2;
      return (l + 1) / 2;
    case Family::L00Lm1:
      if (t == 0) return floor_div(l, 2) + 1;
      if (t == 0b000010) return floor_div(l, 2);
      return floor_div(l - 1, 2) + 1;
    case Family::L01Lm1:
      return l >= 2 ? l - 1 : 1;
    case Family::L0Lm1_1: {
      if (l == 1) return h0_base_case(FamilyMatch{Family::L00L, l, m.tau, m.g});
      if (l == 2) return h0_base_case(FamilyMatch{Family::L01Lm1, l, m.tau, m.g});
      if (parity(l) == 0) return l / 2;
      const bool high = t == 0 || t == 0b000001 || t == 0b000011 || t == 0b001010;
      return high ? (l + 1) / 2 : (l - 1) / 2;
    }
    case Family::L00L_plus_K: {
      const Bit2 a = m.tau.component(0), b = m.tau.component(1), c = m.tau.component(2);
      const std::int64_t l3 = checked_mul(3, l);
      if (t == 0b001000) return floor_div(l3 + 4, 2);
      if (t == 0b000010 || (a.is_zero() && b == Bit2(1, 0) && c.e2() == 1)) {
        return floor_div(l3 + 3, 2);
      }
      // tau = (00 e0 *e') with e' = 1 - e.
      if (a.is_zero() && b.e2() == 0 && c.e2() != b.e1()) return floor_div(l3 + 2, 2);
      if (t == 0) return floor_div(l3 + 1, 2);
      return l + 1;
    }
  }
  return 0;
}

namespace {

// Parameter l for which family_base(family, l) could have numerical class
// num, read off from one coordinate; verified by the caller.
std::optional<std::int64_t> candidate_ell(Family family, const NumClass& num) {
  switch (family) {
    case Family::KTwist:
    case Family::Six000:
    case Family::Seven011:
    case Family::Eight001:
    case Family::Eight022:
      return 0;
    case Family::L00L:
      return num.c >= 1 ? std::optional<std::int64_t>(num.c) : std::nullopt;
    case Family::L00Lm1:
    case Family::L01Lm1:
      return num.c >= 0 ? std::optional<std::int64_t>(num.c + 1) : std::nullopt;
    case Family::L0Lm1_1:
      return num.b >= 2 ? std::optional<std::int64_t>(num.b + 1) : std::nullopt;
    case Family::L00L_plus_K:
      return num.c >= 2 ? std::optional<std::int64_t>(num.c - 1) : std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<FamilyMatch> match_families(const DivisorClass& divisor,
                                          std::initializer_list<Family> families) {
  for (const Symmetry g : all_symmetries()) {
    const DivisorClass moved = apply_symmetry(g, divisor);
    const NumClass num = moved.num_class();
    for (const Family f : families) {
      const auto ell = candidate_ell(f, num);
      if (!ell) continue;
      const DivisorClass base = family_base(f, *ell);
      if (!(base.num_class() == num)) continue;
      const auto tau = torsion_between(base, moved);
      if (!tau) continue;
      return FamilyMatch{f, *ell, *tau, g};
    }
  }
  return std::nullopt;
}

}  // namespace

FamilyMatch classify_reduced(const DivisorClass& divisor) {
  const auto m = match_families(divisor, {Family::KTwist, Family::Six000, Family::L00L,
                                          Family::L00Lm1, Family::L01Lm1, Family::L0Lm1_1});
  if (!m) {
    throw ClassificationGap("reduced class " + divisor.num_class().str() +
                            " matches no family with e-number below 64");
  }
  return *m;
}

namespace {

class Run {
 public:
  explicit Run(std::size_t budget) : budget_(budget) {}

  CohResult compute(const DivisorClass& divisor) {
    CohResult out;
    const std::int64_t chi_d = chi(divisor);
    if (divisor.is_zero()) {
      push(out, base_step(FamilyMatch{Family::ZeroClass, 0, {}, {}}, 1));
      out.h0 = 1;
      return out;
    }
    if (divisor.numerically_trivial()) {
      const Torsion tau = divisor.torsion_bits();
      const std::int64_t h2 = h0_K_twist(tau);
      push(out, base_step(FamilyMatch{Family::TorsionOnly, 0, tau, {}}, 0));
      out.h0 = 0;
      out.h2 = h2;
      out.h1 = h2 - 1;
      return out;
    }
    const DivisorClass dual = canonical_class() - divisor;
    const bool eff = is_effective(divisor).has_value();
    const bool dual_eff = is_effective(dual).has_value();
    if (eff && dual_eff) {
      throw InternalInconsistency("both D and K - D effective for " +
                                  divisor.num_class().str());
    }
    if (!eff && !dual_eff) {
      if (chi_d > 0) {
        throw InternalInconsistency("neither D nor K - D effective but chi = " +
                                    std::to_string(chi_d));
      }
      BranchStep s;
      s.tag = BranchTag::NotEffective;
      s.value = chi_d;
      push(out, s);
      out.h1 = -chi_d;
      return out;
    }
    std::int64_t h0;
    if (eff) {
      h0 = effective_h0(divisor, out);
    } else {
      BranchStep s;
      s.tag = BranchTag::DualitySwap;
      push(out, s);
      h0 = dual.is_zero() ? zero_h0(out) : effective_h0(dual, out);
    }
    // h0 of whichever side is effective; the other side has h0 = 0.
    const std::int64_t h1 = h0 - (eff ? chi_d : chi(dual));
    if (h1 < 0) {
      throw InternalInconsistency("negative h1 for " + divisor.num_class().str());
    }
    if (eff) {
      out.h0 = h0;
    } else {
      out.h2 = h0;
    }
    out.h1 = h1;
    return out;
  }

 private:
  void push(CohResult& out, const BranchStep& s) {
    if (out.trace.size() >= budget_) {
      throw BudgetExceeded("step budget of " + std::to_string(budget_) + " exhausted");
    }
    out.trace.push_back(s);
  }

  static BranchStep base_step(const FamilyMatch& m, std::int64_t value) {
    BranchStep s;
    s.tag = BranchTag::BaseCase;
    s.match = m;
    s.value = value;
    return s;
  }

  std::int64_t zero_h0(CohResult& out) {
    push(out, base_step(FamilyMatch{Family::ZeroClass, 0, {}, {}}, 1));
    return 1;
  }

  std::int64_t terminal(CohResult& out, const FamilyMatch& m) {
    std::int64_t v;
    try {
      v = h0_base_case(m);
    } catch (const InvalidTau& e) {
      throw InternalInconsistency(std::string("reduced class with ") + e.what());
    }
    push(out, base_step(m, v));
    return v;
  }

  std::int64_t effective_h0(const DivisorClass& divisor, CohResult& out) {
    DivisorClass cur = divisor;
    std::int64_t acc = 0;
    for (;;) {
      const ReduceResult r = reduce(cur);
      for (const TrimStep& t : r.steps) {
        BranchStep s;
        s.tag = BranchTag::Trim;
        s.trim = t;
        push(out, s);
      }
      cur = r.reduced;
      if (r.not_effective) return ineffective_tail(out, acc, cur);
      if (cur.is_zero()) return acc + zero_h0(out);
      const NumClass num = cur.num_class();
      if (e_full(num).value) {
        if (is_ample(cur)) {
          const DivisorClass shifted = cur - canonical_class();
          if (intersect(shifted, shifted) > 0) {
            BranchStep s;
            s.tag = BranchTag::KVVanishing;
            s.value = chi(cur);
            push(out, s);
            return acc + s.value;
          }
          BranchStep s;
          s.tag = BranchTag::AmpleBoundary;
          push(out, s);
          return acc + terminal(out, must_match(cur, {Family::L00L_plus_K}));
        }
        if (cur.d() >= 9) {
          int zero_slot = 0;
          while (cur.slot(zero_slot).deg != 0) ++zero_slot;
          Symmetry g;
          for (const Symmetry h : all_symmetries()) {
            if (h.source_slot(0) == zero_slot) {
              g = h;
              break;
            }
          }
          cur = apply_symmetry(g, cur) - generator(A0);
          BranchStep s;
          s.tag = BranchTag::NefReduce;
          s.g = g;
          s.value = 1;
          push(out, s);
          acc += 1;
          continue;
        }
        return acc + terminal(out, must_match(cur, {Family::Seven011, Family::Eight001,
                                                    Family::Eight022}));
      }
      if (acc > 0 && !is_effective(cur)) return ineffective_tail(out, acc, cur);
      return acc + terminal(out, classify_reduced(cur));
    }
  }

  std::int64_t ineffective_tail(CohResult& out, std::int64_t acc, const DivisorClass& cur) {
    if (acc == 0) {
      throw InternalInconsistency("trimming an effective class reached " +
                                  cur.num_class().str() + ", which is not effective");
    }
    BranchStep s;
    s.tag = BranchTag::NotEffective;
    s.value = chi(cur);
    push(out, s);
    return acc;
  }

  static FamilyMatch must_match(const DivisorClass& cur, std::initializer_list<Family> families) {
    const auto m = match_families(cur, families);
    if (!m) {
      throw ClassificationGap("reduced class " + cur.num_class().str() +
                              " with e-number 64 matches no family");
    }
    return *m;
  }

  std::size_t budget_;
};

}  // namespace

CohResult h_all(const DivisorClass& divisor) {
  return Run(static_cast<std::size_t>(-1)).compute(divisor);
}

CohResult h_all_with_budget(const DivisorClass& divisor, std::size_t max_steps) {
  return Run(max_steps).compute(divisor);
}

std::int64_t replay_trace(const std::vector<BranchStep>& trace) {
  std::int64_t h0 = 0;
  for (const BranchStep& s : trace) {
    switch (s.tag) {
      case BranchTag::DualitySwap:
        return 0;
      case BranchTag::NefReduce:
      case BranchTag::KVVanishing:
      case BranchTag::BaseCase:
        h0 += s.value;
        break;
      default:
        break;
    }
  }
  return h0;
}

}  // namespace burniat
