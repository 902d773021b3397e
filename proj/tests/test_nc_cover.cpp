#include <doctest.h>

#include <random>
#include <vector>

#include "hkcover/errors.hpp"
#include "hkcover/invariants.hpp"
#include "hkcover/nc_cover.hpp"
#include "hkcover/serialize.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

// Four elliptic curves through one point of an abelian surface, blown up there.
NormalCrossingModel abelian_model() {
  std::vector<NcComponent> comps;
  std::vector<NcCrossing> crossings;
  for (int j = 1; j <= 4; ++j) {
    comps.push_back({"C" + std::to_string(j), 0, -1, 1, false});
    crossings.push_back({"C" + std::to_string(j), "E", 1});
  }
  comps.push_back({"E", 2, -1, -1, true});
  return NormalCrossingModel(4, 1, -1, comps, crossings);
}

}  // namespace

TEST_CASE("abelian model at n = 3 reaches equality") {
  const NormalCrossingModel m = abelian_model();
  CHECK(cover_euler_nc(m, 3) == 39);
  CHECK(cover_c1sq_nc(m, 3) == 117);
  CHECK(cover_euler_nc(m, 2) == 8);
  CHECK(m.total_double_points() == 4);
  CHECK(m.double_points_on(4) == 4);
  const Quadratic<Integer> q = nc_gap_quadratic(m);
  CHECK(q.c2 == 1);
  CHECK(q.c1 == -6);
  CHECK(q.c0 == 9);
}

TEST_CASE("bundled fixture matches the in-code model") {
  const NormalCrossingModel m = parse_model(load_json_file(HK_DATA_DIR "/abelian_l1.json"));
  const NormalCrossingModel ref = abelian_model();
  for (std::int64_t n = 2; n <= 8; ++n) {
    CHECK(cover_euler_nc(m, n) == cover_euler_nc(ref, n));
    CHECK(cover_c1sq_nc(m, n) == cover_c1sq_nc(ref, n));
  }
}

TEST_CASE("model validation") {
  const std::vector<NcComponent> line{{"L", -2, 1, -3, false}};  // a line in P2 would be (2, 1, -3)
  CHECK_THROWS_AS(NormalCrossingModel(1, 3, 9, line, {}), ValidationError);
  const std::vector<NcComponent> odd{{"C", 0, 0, 1, false}};
  CHECK_THROWS_AS(NormalCrossingModel(1, 3, 9, odd, {}), ValidationError);
  const std::vector<NcComponent> ok{{"A", 2, 1, -3, false}, {"B", 2, 1, -3, false}};
  CHECK_NOTHROW(NormalCrossingModel(2, 3, 9, ok, {{"A", "B", 1}}));
  CHECK_THROWS_AS(NormalCrossingModel(3, 3, 9, ok, {}), ValidationError);
  CHECK_THROWS_AS(NormalCrossingModel(2, 3, 9, ok, {{"A", "X", 1}}), ValidationError);
  CHECK_THROWS_AS(NormalCrossingModel(2, 3, 9, ok, {{"A", "A", 1}}), ValidationError);
  CHECK_THROWS_AS(NormalCrossingModel(2, 3, 9, ok, {{"A", "B", -1}}), ValidationError);
  CHECK_THROWS_AS(NormalCrossingModel(2, 3, 9, ok, {{"A", "B", 1}, {"B", "A", 1}}), ValidationError);
  const std::vector<NcComponent> dup{{"A", 2, 1, -3, false}, {"A", 2, 1, -3, false}};
  CHECK_THROWS_AS(NormalCrossingModel(2, 3, 9, dup, {}), ValidationError);
  const NormalCrossingModel small(2, 3, 9, ok, {{"A", "B", 1}});
  CHECK_THROWS_AS(cover_euler_nc(small, 3), ModelInconsistencyError);
  CHECK_THROWS_AS(cover_euler_nc(abelian_model(), 1), DomainError);
}

TEST_CASE("blow-up of a homogeneous arrangement") {
  const SurfaceModel p2 = ProjectivePlaneDeg{2};
  const ArrangementCombinatorics c(5, {{2, 34}, {4, 1}});
  const NormalCrossingModel m = blowup_homogeneous(p2, c);
  CHECK(m.components().size() == 6);
  CHECK(m.base_euler() == 4);
  CHECK(m.base_ksq() == 8);
  CHECK(m.total_double_points() == 34 + 4);
  for (std::int64_t n = 2; n <= 7; ++n) {
    const ChernInvariants inv = cover_chern(p2, c, n);
    CHECK(cover_euler_nc(m, n) == inv.total_c2);
    CHECK(cover_c1sq_nc(m, n) == inv.total_c1sq);
  }
  CHECK_THROWS_AS(blowup_homogeneous(p2, ArrangementCombinatorics(5, {{2, 33}, {4, 1}})), RejectedInput);
}

TEST_CASE("blow-up honours curve profiles") {
  const SurfaceModel f2 = HirzebruchSurface{2};
  const ArrangementCombinatorics c(8, {{2, 92}, {5, 2}});  // 184 + 40 = 224
  std::vector<CurveProfile> profiles;
  // curves 1,2 carry both quintuple points, 3..8 one each: 2*2 + 6 = 10 = 5*2
  for (int j = 1; j <= 8; ++j) {
    const std::int64_t fives = j <= 2 ? 2 : 1;
    profiles.push_back({j, {{5, fives}, {2, 28 - 4 * fives}}});
  }
  const NormalCrossingModel m = blowup_homogeneous(f2, c, profiles);
  CHECK(m.components()[0].self_int == 4 - 2);
  CHECK(m.components()[7].self_int == 4 - 1);
  CHECK(cover_euler_nc(m, 3) == cover_chern(f2, c, 3).total_c2);

  auto bad = profiles;
  bad[0].r_profile[2] += 1;
  CHECK_THROWS_AS(blowup_homogeneous(f2, c, bad), ValidationError);
}

TEST_CASE("property: homogeneous models agree with the moment formulas") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const SurfaceModel s = (i % 2) ? SurfaceModel(HirzebruchSurface{static_cast<std::int64_t>(rng() % 4)})
                                   : SurfaceModel(ProjectivePlaneDeg{2 + static_cast<std::int64_t>(rng() % 3)});
    const auto w = oracle::base_of(s);
    const std::int64_t k = 5 + static_cast<std::int64_t>(rng() % 6);
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
    const ArrangementCombinatorics c(k, oracle::random_counts(rng, w.a * (k * k - k), static_cast<int>(k - 3)));
    const NormalCrossingModel m = blowup_homogeneous(s, c);
    const ChernInvariants inv = cover_chern(s, c, n);
    CHECK(cover_euler_nc(m, n) == inv.total_c2);
    CHECK(cover_c1sq_nc(m, n) == inv.total_c1sq);
    const Integer scale = ipow(Integer(n), static_cast<unsigned long>(k - 3));
    CHECK(nc_gap_quadratic(m)(Integer(n)) * scale == 3 * inv.total_c2 - inv.total_c1sq);
  }
}
