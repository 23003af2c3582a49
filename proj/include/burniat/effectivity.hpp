#pragma once

// Effectiveness, e-numbers and trimming to reduced form.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burniat/picard.hpp"

namespace burniat {

// Coefficients of A0, B0, C0, A3, B3, C3 in a torsion-free effective sum.
struct Step1Solution {
  std::int64_t a0 = 0, b0 = 0, c0 = 0, a3 = 0, b3 = 0, c3 = 0;

  std::int64_t coefficient(int slot) const;
  GenCombo combo() const;
  friend bool operator==(const Step1Solution&, const Step1Solution&) = default;
};

// Nonnegative a0 A0 + ... + c3 C3 in [d; a, b, c] with b3, c3, a3 even
// (the evenness keeps every truncated torsion label at 00). Returns the
// solution with lexicographically smallest (b3, c3). O(1).
std::optional<Step1Solution> step1_solve(std::int64_t d, std::int64_t a, std::int64_t b,
                                         std::int64_t c);

// The eight genus-2/elliptic combinations whose truncated torsion equals tau,
// ordered by (A0-bits choice, B0-bits choice, C0-bits choice), short option
// first.
std::array<GenCombo, 8> torsion_candidates(Torsion tau);

struct EffWitness {
  GenCombo combo;
  // Terms in the order they were found: step-1 slots, then the candidate.
  std::vector<std::pair<CurveLabel, std::int64_t>> terms;
  int candidate = 0;

  // "A0+C3+A1+B1+B3", "2*A0+B3", "0" for the empty sum.
  std::string str() const;
};

std::optional<EffWitness> is_effective(const DivisorClass& divisor);

DivisorClass untwisted(const NumClass& num);

// Number of effective classes among the 64 torsion twists; brute force.
int e_number(const NumClass& num);

struct CriterionAnswer {
  bool value = false;
  // False when the inputs fall outside the closed form's hypotheses and the
  // answer came from e_number instead.
  bool by_criterion = true;
};

// e >= 1, via M <= l <= d for d > 0.
CriterionAnswer e_positive(const NumClass& num);
// e == 64, via d >= 7 and max(3, M + 2) <= l <= d - 3 for d > 0.
CriterionAnswer e_full(const NumClass& num);

enum class TrimReason { NegativeDegree, ZeroDegreeNonzeroTorsion };

struct TrimStep {
  CurveLabel label;
  TrimReason reason = TrimReason::NegativeDegree;

  friend bool operator==(const TrimStep&, const TrimStep&) = default;
};

const char* to_string(TrimReason reason);

struct ReduceResult {
  DivisorClass reduced;
  std::vector<TrimStep> steps;
  // Trimming would have pushed d below zero; the input has h0 = 0.
  bool not_effective = false;
};

// Subtracts, one at a time, the first elliptic generator (canonical slot
// order) of negative degree, or of degree zero with nonzero torsion label.
// Each subtraction leaves h0 unchanged.
ReduceResult reduce(const DivisorClass& divisor);

// Nef, torsion label 00 on every zero-degree slot, and d > 0 unless zero.
bool is_reduced(const DivisorClass& divisor);

}  // namespace burniat
