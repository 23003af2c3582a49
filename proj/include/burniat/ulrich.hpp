#pragma once

// Cohomologically trivial classes and Ulrich data.

#include <string>
#include <utility>
#include <vector>

#include "burniat/cohomology.hpp"
#include "burniat/picard.hpp"

namespace burniat {

// h0 = h1 = h2 = 0.
bool is_coh_trivial(const DivisorClass& divisor);

// All realizable [d; a, b, c] with chi = 0, sorted.
std::vector<NumClass> chi_zero_classes(std::int64_t d);

struct SearchReport {
  DivisorClass polarization;
  std::int64_t d_lo = 0, d_hi = 0;
  std::int64_t classes_scanned = 0;
  std::int64_t divisors_scanned = 0;
  // D with D and D - H both cohomologically trivial; sorted.
  std::vector<DivisorClass> hits;
  double elapsed_seconds = 0;
  // The window covers every hit only under the degree bounds assumed for
  // ample, base point free polarizations.
  std::string window_note;
};

// [floor(-(H.K) / 3), H.K + 6].
std::pair<std::int64_t, std::int64_t> default_search_window(const DivisorClass& polarization);

SearchReport ulrich_line_search(const DivisorClass& polarization, std::int64_t d_lo,
                                std::int64_t d_hi);

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Rank2Report {
  DivisorClass d1, d2;
  std::vector<Check> checks;

  bool pass() const;
};

// The cohomologically trivial class [10; 0, 1, 4] used with H = 3K.
DivisorClass reference_d1();

// D2 = 4K - D1. Checks h(D1) = (0,0,0), h(D2) = (6,0,0), h0(K + D2 - D1) = 1,
// h0(D1 - K) = h0(D2 - K) = 0 and chi(D2) = 6.
Rank2Report verify_rank2(const DivisorClass& d1);

struct PropertyReport {
  std::int64_t d_max = 0;
  std::int64_t chi_zero_classes = 0;       // 1 <= d <= d_max
  std::int64_t trivial_divisors_d6 = 0;    // coh-trivial, 6 <= d <= d_max
  std::int64_t trivial_divisors_d7 = 0;    // coh-trivial, 7 <= d <= d_max
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

// Over 1 <= d <= d_max: every chi = 0 class has e >= 1; every
// cohomologically trivial divisor with d >= 6 is nef; with d >= 7 its class
// is, up to symmetry, [2l+1; 0,0,l-1], [2l; 0,1,l-1] or [2l; 0,l-1,1].
// Throws DomainError for d_max < 7.
PropertyReport verify_trivial_class_properties(std::int64_t d_max);

}  // namespace burniat
