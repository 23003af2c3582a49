#include <algorithm>

#include "burniat/errors.hpp"
#include "burniat/parse.hpp"
#include "burniat/ulrich.hpp"
#include "doctest.h"

using namespace burniat;
using namespace burniat::labels;

TEST_CASE("cohomologically trivial classes") {
  const DivisorClass d1 = parse_divisor("[10; 0:01, 1:11, 4:01; 0:01, 1:11, 4:11]");
  CHECK(d1 == reference_d1());
  CHECK(is_coh_trivial(d1));
  CHECK_FALSE(is_coh_trivial(canonical_class()));
  CHECK_FALSE(is_coh_trivial(generator(A0)));
}

TEST_CASE("chi = 0 classes") {
  const auto one = chi_zero_classes(1);
  CHECK(std::find(one.begin(), one.end(), NumClass{1, -1, 0, 0}) != one.end());
  const auto ten = chi_zero_classes(10);
  CHECK(std::find(ten.begin(), ten.end(), NumClass{10, 0, 1, 4}) != ten.end());
  CHECK(std::is_sorted(ten.begin(), ten.end()));
  for (std::int64_t d = -4; d <= 14; ++d) {
    const auto list = chi_zero_classes(d);
    std::vector<NumClass> brute;
    for (std::int64_t a = -30; a <= 30; ++a)
      for (std::int64_t b = -30; b <= 30; ++b)
        for (std::int64_t c = -30; c <= 30; ++c) {
          const NumClass n{d, a, b, c};
          if (n.realizable() && chi(n) == 0) brute.push_back(n);
        }
    std::sort(brute.begin(), brute.end());
    CHECK(list == brute);
    for (const NumClass& n : list) CHECK(chi(untwisted(n)) == 0);
  }
}

TEST_CASE("line search") {
  const SearchReport r = ulrich_line_search(3 * canonical_class(), -6, 24);
  CHECK(r.hits.empty());
  CHECK(r.classes_scanned > 0);
  CHECK_FALSE(r.window_note.empty());
  const auto w = default_search_window(3 * canonical_class());
  CHECK(w.first == -6);
  CHECK(w.second == 24);

  const DivisorClass h = canonical_class();
  const auto win = default_search_window(h);
  const SearchReport k = ulrich_line_search(h, win.first, win.second);
  for (const DivisorClass& d : k.hits) {
    CHECK(is_coh_trivial(d));
    CHECK(is_coh_trivial(d - h));
    const DivisorClass dual = canonical_class() - d + h;
    CHECK(std::find(k.hits.begin(), k.hits.end(), dual) != k.hits.end());
  }
}

TEST_CASE("rank-2 data") {
  const Rank2Report r = verify_rank2(reference_d1());
  CHECK(r.pass());
  CHECK(r.checks.size() == 5);
  CHECK(r.d2 == 4 * canonical_class() - reference_d1());

  const Rank2Report k = verify_rank2(canonical_class());
  CHECK_FALSE(k.pass());
  CHECK_FALSE(k.checks[0].pass);

  const Rank2Report swapped = verify_rank2(r.d2);
  CHECK_FALSE(swapped.checks[0].pass);
}

TEST_CASE("trivial class properties") {
  const PropertyReport r = verify_trivial_class_properties(12);
  CHECK(r.pass());
  CHECK(r.trivial_divisors_d7 > 0);
  CHECK_THROWS_AS(verify_trivial_class_properties(6), DomainError);
}
