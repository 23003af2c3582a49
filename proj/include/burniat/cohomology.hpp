#pragma once

// Dimensions h0, h1, h2 of divisor classes.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burniat/effectivity.hpp"
#include "burniat/picard.hpp"

namespace burniat {

enum class Family {
  ZeroClass,
  TorsionOnly,
  KTwist,       // K + tau                         [6; 1, 1, 1]
  Six000,       // 2(A0 + C3 + B0)                 [6; 0, 0, 0]
  L00L,         // l(A0 + B3)                      [2l; 0, 0, l]
  L00Lm1,       // l(A0 + B3) + C0                 [2l+1; 0, 0, l-1]
  L01Lm1,       // (l-1)(A0 + B3) + (C0 + A3)      [2l; 0, 1, l-1]
  L0Lm1_1,      // (l-1)(C0 + A3) + (A0 + B3)      [2l; 0, l-1, 1]
  L00L_plus_K,  // l(A0 + B3) + K                  [2l; 0, 0, l] + [K]
  Seven011,     // A0 + K                          [7; 0, 1, 1]
  Eight001,     // A0 + B0 + K                     [8; 0, 0, 1]
  Eight022,     // A0 + A3 + K                     [8; 0, 2, 2]
};

const char* to_string(Family family);

struct FamilyMatch {
  Family family = Family::ZeroClass;
  std::int64_t ell = 0;
  Torsion tau;
  // apply_symmetry(g, D) == family_base(family, ell) + tau.
  Symmetry g;
};

DivisorClass family_base(Family family, std::int64_t ell);

// Whether family_base(family, ell) + tau is of reduced form.
bool tau_admissible(Family family, std::int64_t ell, Torsion tau);

// h0(K + tau): 0, 2 on the three flexible torsions, 1 otherwise.
std::int64_t h0_K_twist(Torsion tau);

// Throws InvalidTau when tau is not admissible for the family.
std::int64_t h0_base_case(const FamilyMatch& match);

// Matches a reduced effective class against the families that can occur
// with e-number below 64 (KTwist through L0Lm1_1). Throws ClassificationGap.
FamilyMatch classify_reduced(const DivisorClass& divisor);

enum class BranchTag {
  DualitySwap,   // continued with K - D
  NotEffective,  // neither D nor K - D effective
  Trim,          // one trimming subtraction
  KVVanishing,   // ample, (D - K)^2 > 0: h0 = chi
  AmpleBoundary, // ample, (D - K)^2 = 0
  NefReduce,     // nef not ample, d >= 9: h0(D) = h0(D - A0) + 1
  BaseCase,      // terminal family value
};

const char* to_string(BranchTag tag);

struct BranchStep {
  BranchTag tag = BranchTag::BaseCase;
  std::optional<TrimStep> trim;
  std::optional<FamilyMatch> match;
  // Normalizing symmetry for NefReduce.
  Symmetry g;
  // Increment (NefReduce), h0 (KVVanishing, BaseCase) or chi (NotEffective).
  std::int64_t value = 0;

  std::string str() const;
};

struct CohResult {
  std::int64_t h0 = 0, h1 = 0, h2 = 0;
  std::vector<BranchStep> trace;

  std::array<std::int64_t, 3> h() const { return {h0, h1, h2}; }
};

CohResult h_all(const DivisorClass& divisor);

// As h_all, but throws BudgetExceeded once the trace exceeds max_steps.
CohResult h_all_with_budget(const DivisorClass& divisor, std::size_t max_steps);

// h0 of the input recomputed from a trace: increments plus terminal value,
// or 0 when the trace dualized or found nothing effective.
std::int64_t replay_trace(const std::vector<BranchStep>& trace);

}  // namespace burniat
