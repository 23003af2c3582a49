#include "burniat/ulrich.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <tuple>

#include "burniat/checked.hpp"
#include "burniat/effectivity.hpp"
#include "burniat/errors.hpp"
#include "burniat/parallel.hpp"
#include "burniat/parse.hpp"

namespace burniat {

bool is_coh_trivial(const DivisorClass& divisor) {
  if (chi(divisor) != 0) return false;
  const CohResult r = h_all(divisor);
  return r.h0 == 0 && r.h1 == 0 && r.h2 == 0;
}

std::vector<NumClass> chi_zero_classes(std::int64_t d) {
  // chi = 0 reads (2l-3)^2 + 2 = (2a-1)^2 + (2b-1)^2 + (2c-1)^2, and
  // Cauchy-Schwarz on a + b + c = 3l - d confines l to
  // (6l - 2d - 3)^2 <= 3((2l - 3)^2 + 2), an interval around d/2 of radius
  // below (|d - 3| + 2) / 3.
  std::vector<NumClass> out;
  const std::int64_t radius = (std::abs(d - 3) + 2) / 3 + 2;
  const std::int64_t centre = floor_div(d, 2);
  for (std::int64_t ell = centre - radius; ell <= centre + radius + 1; ++ell) {
    const std::int64_t lhs = checked_mul(6, ell) - checked_mul(2, d) - 3;
    const std::int64_t q = 2 * ell - 3;
    if (checked_mul(lhs, lhs) > checked_mul(3, checked_add(checked_mul(q, q), 2))) continue;
    const std::int64_t span = std::abs(q) + 2;
    // |2x - 1| <= span
    const std::int64_t lo = floor_div(1 - span + 1, 2);
    const std::int64_t hi = floor_div(1 + span, 2);
    for (std::int64_t a = lo; a <= hi; ++a) {
      for (std::int64_t b = lo; b <= hi; ++b) {
        const std::int64_t c = 3 * ell - d - a - b;
        const NumClass num{d, a, b, c};
        if (chi(num) == 0) out.push_back(num);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::int64_t, std::int64_t> default_search_window(const DivisorClass& polarization) {
  const std::int64_t hk = polarization.d();
  return {floor_div(-hk, 3), hk + 6};
}

namespace {

bool divisor_less(const DivisorClass& x, const DivisorClass& y) {
  return std::make_tuple(x.num_class(), x.torsion_bits().index()) <
         std::make_tuple(y.num_class(), y.torsion_bits().index());
}

}  // namespace

SearchReport ulrich_line_search(const DivisorClass& polarization, std::int64_t d_lo,
                                std::int64_t d_hi) {
  if (d_lo > d_hi) throw DomainError("empty search window");
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.polarization = polarization;
  report.d_lo = d_lo;
  report.d_hi = d_hi;
  report.window_note =
      "complete only under the bounds h >= 12 and a(H), b(H), c(H) >= 2 for ample, base point "
      "free H, which are assumed, not verified";
  std::vector<NumClass> cells;
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    const std::vector<NumClass> classes = chi_zero_classes(d);
    for (const NumClass& num : classes) {
      // D - H must have chi = 0 as well.
      const NumClass shifted = (untwisted(num) - polarization).num_class();
      if (chi(shifted) == 0) cells.push_back(num);
    }
    report.classes_scanned += static_cast<std::int64_t>(classes.size());
  }
  std::mutex mutex;
  parallel_for(cells.size(), [&](std::size_t i) {
    const DivisorClass base = untwisted(cells[i]);
    std::vector<DivisorClass> local;
    for (const Torsion tau : enumerate_torsions()) {
      const DivisorClass divisor = base + torsion_class(tau);
      if (is_coh_trivial(divisor) && is_coh_trivial(divisor - polarization)) {
        local.push_back(divisor);
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    report.hits.insert(report.hits.end(), local.begin(), local.end());
  });
  report.divisors_scanned = report.classes_scanned * 64;
  std::sort(report.hits.begin(), report.hits.end(), divisor_less);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool Rank2Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

DivisorClass reference_d1() {
  return parse_divisor("[10; 0:01, 1:11, 4:01; 0:01, 1:11, 4:11]");
}

namespace {

std::string triple(const std::array<std::int64_t, 3>& h) {
  return "(" + std::to_string(h[0]) + "," + std::to_string(h[1]) + "," + std::to_string(h[2]) +
         ")";
}

}  // namespace

Rank2Report verify_rank2(const DivisorClass& d1) {
  Rank2Report report;
  const DivisorClass k = canonical_class();
  report.d1 = d1;
  report.d2 = 4 * k - d1;
  const auto h1 = h_all(d1).h();
  const auto h2 = h_all(report.d2).h();
  const std::int64_t cb = h_all(k + report.d2 - d1).h0;
  const std::int64_t r1 = h_all(d1 - k).h0;
  const std::int64_t r2 = h_all(report.d2 - k).h0;
  const std::int64_t chi2 = chi(report.d2);
  report.checks.push_back({"h(D1)", "(0,0,0)", triple(h1), h1 == std::array<std::int64_t, 3>{0, 0, 0}});
  report.checks.push_back({"h(D2)", "(6,0,0)", triple(h2), h2 == std::array<std::int64_t, 3>{6, 0, 0}});
  report.checks.push_back({"h0(K+D2-D1)", "1", std::to_string(cb), cb == 1});
  report.checks.push_back({"h0(D1-K), h0(D2-K)", "0, 0",
                           std::to_string(r1) + ", " + std::to_string(r2), r1 == 0 && r2 == 0});
  report.checks.push_back({"chi(D2)", "6", std::to_string(chi2), chi2 == 6});
  return report;
}

namespace {

bool in_trivial_families(const NumClass& num) {
  for (const NumClass& m : orbit(num)) {
    if (m.a != 0) continue;
    const std::int64_t ell = m.ell();
    if (m.b == 0 && m.d == 2 * ell + 1 && m.c == ell - 1) return true;
    if (m.b == 1 && m.d == 2 * ell && m.c == ell - 1) return true;
    if (m.c == 1 && m.d == 2 * ell && m.b == ell - 1) return true;
  }
  return false;
}

}  // namespace

PropertyReport verify_trivial_class_properties(std::int64_t d_max) {
  if (d_max < 7) throw DomainError("d_max must be at least 7");
  PropertyReport report;
  report.d_max = d_max;
  std::vector<NumClass> cells;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    for (const NumClass& num : chi_zero_classes(d)) cells.push_back(num);
  }
  report.chi_zero_classes = static_cast<std::int64_t>(cells.size());
  std::mutex mutex;
  parallel_for(cells.size(), [&](std::size_t i) {
    const NumClass& num = cells[i];
    std::vector<std::string> bad;
    std::int64_t t6 = 0, t7 = 0;
    const int e = e_number(num);
    if (e < 1) bad.push_back(num.str() + ": chi = 0 but e-number 0");
    if (e_positive(num).value != (e >= 1)) bad.push_back(num.str() + ": e_positive disagrees");
    if (num.d >= 6) {
      const DivisorClass base = untwisted(num);
      for (const Torsion tau : enumerate_torsions()) {
        const DivisorClass divisor = base + torsion_class(tau);
        if (!is_coh_trivial(divisor)) continue;
        ++t6;
        if (!is_nef(divisor)) bad.push_back(num.str() + " tau=(" + tau.str() + "): trivial, not nef");
        if (num.d >= 7) {
          ++t7;
          if (!in_trivial_families(num)) {
            bad.push_back(num.str() + " tau=(" + tau.str() + "): trivial, outside the three families");
          }
        }
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    report.trivial_divisors_d6 += t6;
    report.trivial_divisors_d7 += t7;
    report.violations.insert(report.violations.end(), bad.begin(), bad.end());
  });
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace burniat
