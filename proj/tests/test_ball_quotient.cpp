#include <doctest.h>

#include <set>
#include <vector>

#include "hkcover/ball_quotient.hpp"
#include "hkcover/errors.hpp"
#include "hkcover/invariants.hpp"

using namespace hk;

TEST_CASE("prop of exceptional components") {
  CHECK(prop_exceptional(2, 6).value == 0);
  CHECK(prop_exceptional(3, 4).value == 0);
  CHECK(prop_exceptional(5, 3).value == 0);
  // 2^(3-2) * (1*1 - 4)
  CHECK(prop_exceptional(2, 3).value == -6);
  // 4^3 * (3*3 - 4)
  CHECK(prop_exceptional(4, 5).value == 320);
  CHECK_THROWS_AS(prop_exceptional(1, 4), DomainError);
  CHECK_THROWS_AS(prop_exceptional(3, 2), DomainError);
}

TEST_CASE("admissible pairs are exactly the zeros of prop") {
  const auto pairs = admissible_pairs(100, 100);
  CHECK(pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 6}, {3, 4}, {5, 3}});
  const std::set<std::pair<std::int64_t, std::int64_t>> expected(pairs.begin(), pairs.end());
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t r = 3; r <= 30; ++r) {
      CHECK((prop_exceptional(n, r).value == 0) == (expected.count({n, r}) == 1));
    }
  }
  CHECK(admissible_pairs(4, 100).size() == 2);
  CHECK(admissible_pairs(100, 4).size() == 2);
  CHECK_THROWS_AS(admissible_pairs(1, 10), DomainError);
  CHECK(admissible_multiplicity(3) == 4);
  CHECK_FALSE(admissible_multiplicity(4).has_value());
}

TEST_CASE("multiplicity filter") {
  const ArrangementCombinatorics c(7, {{2, 9}, {6, 5}});
  const FilterResult two = necessary_condition_filter(c, 2);
  CHECK(two.passed);
  CHECK(two.admissible_r == 6);
  const FilterResult three = necessary_condition_filter(c, 3);
  CHECK_FALSE(three.passed);
  CHECK(three.offending == std::vector<int>{6});
  CHECK(necessary_condition_filter(ArrangementCombinatorics(5, {{2, 40}}), 5).passed);
  CHECK_THROWS_AS(necessary_condition_filter(c, 4), DomainError);
}

TEST_CASE("forced double and sixfold counts") {
  SUBCASE("plane cubics, k = 11") {
    const auto r = required_double_sixfold(9, -9, 11);
    CHECK(r.t2 == 0);
    CHECK(r.t6 == 33);
    CHECK(r.per_curve == 18);
    CHECK(r.feasible);
    const ArrangementCombinatorics c(11, {{6, 33}});
    CHECK(hirzebruch_polynomial(ProjectivePlaneDeg{3}, c)(Rational(2)) == 198);
  }
  SUBCASE("plane conics, k = 5") {
    const auto r = required_double_sixfold(4, -6, 5);
    CHECK(r.t2 == make_rational(-20, 12));
    CHECK_FALSE(r.feasible);
    CHECK(r.reasons.size() == 3);
  }
  SUBCASE("nef family, a = 1, b = 0, k = 21") {
    const auto r = required_double_sixfold(1, 0, 21);
    CHECK(r.t2 == 0);
    CHECK(r.t6 == 14);
    CHECK(r.feasible);
  }
  CHECK_THROWS_AS(required_double_sixfold(0, 0, 10), DomainError);
  CHECK_THROWS_AS(required_double_sixfold(1, 0, 4), DomainError);
}

TEST_CASE("curve proportionality at n = 2") {
  // P2_3, k = 11: every cubic carries 18 sixfold points and no double point.
  const CurveProfile balanced{1, {{6, 18}}};
  CHECK(prop_curve_component(ProjectivePlaneDeg{3}, 11, 2, balanced) == 0);
  const CurveProfile off{2, {{6, 17}, {2, 5}}};
  CHECK(prop_curve_component(ProjectivePlaneDeg{3}, 11, 2, off) != 0);
  const std::vector<CurveProfile> profiles{balanced, off};
  CHECK(profiles_violating_double_sixfold(9, -9, 11, profiles) == std::vector<std::int64_t>{2});
}

TEST_CASE("property: forced counts solve both relations whenever feasible") {
  int feasible = 0;
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = -6; b <= 12; ++b) {
      for (std::int64_t k = 5; k <= 60; ++k) {
        const auto r = required_double_sixfold(a, b, k);
        CHECK(2 * r.t2 + 30 * r.t6 == Rational(a * (k * k - k)));
        CHECK(2 * r.t2 + 6 * r.t6 == k * r.per_curve);
        if (!r.feasible || b < 0 || (a + b) % 2 != 0 || k < 6) continue;
        ++feasible;
        const ArrangementCombinatorics c(
            k, {{2, r.t2.get_num().get_si()}, {6, r.t6.get_num().get_si()}});
        // H(2) collapses to 4 delta + (3a + b) k; delta enters through the base only.
        const SurfaceModel w = NefEffectiveCanonical{0, 0, a, b};
        CHECK(hirzebruch_polynomial(w, c)(Rational(2)) == Rational((3 * a + b) * k));
      }
    }
  }
  CHECK(feasible > 0);
}
