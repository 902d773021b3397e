// Acceptance criteria AC1-AC9. One PASS/FAIL line each; exit status is the number of
// failures. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "hkcover/ball_quotient.hpp"
#include "hkcover/invariants.hpp"
#include "hkcover/nc_cover.hpp"
#include "hkcover/search.hpp"
#include "hkcover/serialize.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& what) {
  std::printf("%s %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Sample {
  std::int64_t e, k;
  ArrangementCombinatorics combo;
};

std::vector<Sample> ruled_samples(std::size_t count) {
  std::mt19937_64 rng(20240601);
  std::vector<Sample> out;
  while (out.size() < count) {
    const std::int64_t e = 2 + static_cast<std::int64_t>(rng() % 30);
    const std::int64_t k = 5 + static_cast<std::int64_t>(rng() % 40);
    const auto t = oracle::random_counts(rng, (e + 2) * (k * k - k), static_cast<int>(k - 3));
    out.push_back({e, k, ArrangementCombinatorics(k, t)});
  }
  return out;
}

void ac1(const std::vector<Sample>& samples) {
  std::size_t bad = 0;
  for (const auto& s : samples) {
    const HirzebruchQuadratic h = hirzebruch_polynomial(HirzebruchSurface{s.e}, s.combo);
    const FMoments f = f_moments(s.combo);
    const Integer e(s.e), k(s.k), t2(s.combo.t(2));
    const Integer h2 = 16 + 3 * e * k + 2 * k + 9 * f.f0 - 2 * f.f1 - 4 * t2;
    const Integer h3 = 36 + 8 * e * k + 4 * k - 4 * f.f1 + 16 * f.f0 - 4 * t2;
    const Integer h5 = 100 + 24 * e * k + 8 * k + 36 * f.f0 - 8 * f.f1 - 4 * t2;
    if (h(Rational(2)) != Rational(h2) || h(Rational(3)) != Rational(h3) || h(Rational(5)) != Rational(h5)) ++bad;
  }
  report("AC1", bad == 0,
         "expanded H(2), H(3), H(5) on F_e: " + std::to_string(samples.size()) + " samples, " + std::to_string(bad) +
             " mismatches");
}

void ac2(const std::vector<Sample>& samples) {
  std::size_t bad = 0, checked = 0;
  for (const auto& s : samples) {
    const FMoments f = f_moments(s.combo);
    const Rational e(s.e), k(s.k), f0(f.f0), f1(f.f1), t2(s.combo.t(2));
    const auto general = chern_quadratics<Rational>(Rational(4), Rational(8), e + 2, -e - 4, k, f0, f1, t2);
    for (long n : {2L, 3L, 4L, 5L, 7L}) {
      const Rational nn(n);
      const Rational c2 = nn * nn * (4 - 2 * k + f1 - f0) + 2 * nn * (k - f1 + f0) + f1 - t2;
      const Rational c1sq = nn * nn * (8 - (e + 6) * k + 3 * f1 - 4 * f0) + 4 * nn * (k - f1 + f0) + (e + 2) * k + f1 -
                            f0 + t2;
      ++checked;
      if (general.c2(nn) != c2 || general.c1sq(nn) != c1sq) ++bad;
    }
    const ChernInvariants inv = cover_chern(HirzebruchSurface{s.e}, s.combo, 3);
    const Rational c2_at3 = 9 * (4 - 2 * k + f1 - f0) + 6 * (k - f1 + f0) + f1 - t2;
    if (inv.scaled_c2 != c2_at3) ++bad;
  }
  report("AC2", bad == 0,
         "general Chern formulas at (4, 8, e+2, -e-4) equal the ruled ones: " + std::to_string(checked) +
             " evaluations, " + std::to_string(bad) + " mismatches");
}

void ac3() {
  const auto pairs = admissible_pairs(100, 100);
  const std::set<std::pair<std::int64_t, std::int64_t>> expected{{5, 3}, {3, 4}, {2, 6}};
  bool ok = std::set<std::pair<std::int64_t, std::int64_t>>(pairs.begin(), pairs.end()) == expected &&
            pairs.size() == 3;
  std::size_t zeros = 0;
  for (std::int64_t n = 2; n <= 50; ++n) {
    for (std::int64_t r = 3; r <= 50; ++r) {
      const bool zero = prop_exceptional(n, r).value == 0;
      zeros += zero;
      if (zero != (expected.count({n, r}) == 1)) ok = false;
    }
  }
  report("AC3", ok, "admissible pairs {(5,3),(3,4),(2,6)}; prop zero at exactly " + std::to_string(zeros) +
                        " of the (n, r) <= 50 cells");
}

void ac4() {
  std::size_t bad = 0, feasible = 0, cases = 0;
  for (std::int64_t d = 2; d <= 20; ++d) {
    for (std::int64_t k = 5; k <= 100; ++k) {
      ++cases;
      const auto r = required_double_sixfold(d * d, -3 * d, k);
      const Integer dk(d * k), dd(d);
      const Rational t2 = make_rational(dk * (dk - 21 * dd + 30), 12);
      const Rational t6 = make_rational(dk * (dk + 3 * dd - 6), 36);
      if (r.t2 != t2 || r.t6 != t6) ++bad;
      if (!r.feasible) continue;
      ++feasible;
      // pair count and, curve by curve, identity a(k-1) = sum (r_p - 1)
      const Rational a(d * d);
      const Rational r6 = 6 * r.t6 / k;
      const Rational r2 = 2 * r.t2 / k;
      if (2 * r.t2 + 30 * r.t6 != a * (k * k - k)) ++bad;
      if (r2 + 5 * r6 != a * (k - 1)) ++bad;
      if (r2 + r6 != r.per_curve) ++bad;
    }
  }
  report("AC4", bad == 0,
         "forced t2, t6 on P2_d for d in [2,20], k in [5,100]: " + std::to_string(cases) + " cases, " +
             std::to_string(feasible) + " feasible, " + std::to_string(bad) + " mismatches");
}

void ac5() {
  struct Want {
    Family family;
    std::int64_t n;
    const char* relation;
  };
  const Want wants[] = {
      {Family::hirzebruch, 2, "−8 = (e+1)k"},
      {Family::nef_canonical, 2, "0 < (3a+b)k = −4δ(W) ≤ 0"},
      {Family::plane, 2, "36d(d-1) = 0"},
      {Family::hirzebruch, 3, "0 = H(3) = 9 + (2e+1)k + t2 > 0"},
      {Family::hirzebruch, 5, "0 = H(5) = 25 + (6e+2)k + 4t2 + 3t3 > 0"},
      {Family::nef_canonical, 3, "0 = (9/4)delta(W) + ((7/2)a + (3/2)b)k + t2 > 0"},
      {Family::nef_canonical, 5, "0 = (25/4)delta(W) + (11a+5b)k + 4t2 + 3t3 > 0"},
      {Family::plane, 3, "0 = ((7/2)d^2 - (9/2)d)k + t2 > 0"},
      {Family::plane, 5, "0 = (11d^2 - 15d)k + 4t2 + 3t3 > 0"},
  };
  GridOptions grid;  // e, d in [2, 50], k in [5, 200]
  grid.workers = workers();
  bool ok = true;
  std::uint64_t cases = 0, counterexamples = 0;
  std::ostringstream bad;
  for (const auto& w : wants) {
    FamilyPattern p;
    p.family = w.family;
    p.symbolic = true;
    const Certificate c = certify_nonexistence(p, w.n, grid);
    cases += c.grid.cases;
    counterexamples += c.grid.counterexamples;
    const bool this_ok = c.valid && c.conclusion.contradiction && c.conclusion.relation == w.relation &&
                         c.grid.ran && c.grid.counterexamples == 0;
    if (!this_ok) bad << ' ' << c.id;
    ok = ok && this_ok;
  }
  report("AC5", ok,
         "9 symbolic certificates VALID; grid " + std::to_string(cases) + " cases, " +
             std::to_string(counterexamples) + " counterexamples" + (ok ? "" : "; failing:" + bad.str()));
}

void ac6() {
  const NormalCrossingModel m = parse_model(load_json_file(HK_DATA_DIR "/abelian_l1.json"));
  bool ok = cover_euler_nc(m, 3) == 39 && cover_c1sq_nc(m, 3) == 117;
  for (std::int64_t n = 2; n <= 20; ++n) {
    const Integer gap = 3 * cover_euler_nc(m, n) - cover_c1sq_nc(m, n);
    const Integer want = Integer(n) * (n - 3) * (n - 3);
    if (gap != want) ok = false;
    if (n != 3 && gap <= 0) ok = false;
    if (n == 3 && gap != 0) ok = false;
  }
  report("AC6", ok, "abelian model: e = 39, c1^2 = 117 at n = 3; gap n(n-3)^2 for n in [2,20]");
}

void ac7() {
  std::mt19937_64 rng(77);
  std::size_t bad = 0, count = 0;
  for (; count < 1200; ++count) {
    SurfaceModel s;
    switch (count % 3) {
      case 0: s = HirzebruchSurface{static_cast<std::int64_t>(rng() % 6)}; break;
      case 1: s = ProjectivePlaneDeg{2 + static_cast<std::int64_t>(rng() % 4)}; break;
      default: {
        const std::int64_t euler = static_cast<std::int64_t>(rng() % 40);
        const std::int64_t ksq = euler + static_cast<std::int64_t>(rng() % (2 * euler + 1));  // keeps delta >= 0
        const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 4);
        s = NefEffectiveCanonical{euler, ksq, a, a % 2 + 2 * static_cast<std::int64_t>(rng() % 2)};
      }
    }
    const auto w = oracle::base_of(s);
    const std::int64_t k = 5 + static_cast<std::int64_t>(rng() % 10);
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 9);
    const ArrangementCombinatorics c(k, oracle::random_counts(rng, w.a * (k * k - k), static_cast<int>(k - 3)));
    const NormalCrossingModel m = blowup_homogeneous(s, c);
    const ChernInvariants inv = cover_chern(s, c, n);
    if (cover_euler_nc(m, n) != inv.total_c2 || cover_c1sq_nc(m, n) != inv.total_c1sq) ++bad;
  }
  report("AC7", bad == 0,
         "normal-crossing totals equal moment totals on " + std::to_string(count) + " random models, " +
             std::to_string(bad) + " mismatches");
}

void ac8() {
  const LemmaReport r = verify_lemma_f0({2, 4}, {5, 9}, default_limits(), workers());
  std::size_t counterexamples = 0;
  std::uint64_t enumerated = 0;
  for (const auto& c : r.cells) {
    counterexamples += c.counterexamples.size();
    enumerated += c.enumerated;
  }
  const bool flagged = r.assumed_side_conditions == std::vector<std::string>{kExternalF0Condition};
  const bool ok = r.valid && r.complete && counterexamples == 0 && flagged && r.cells.size() == 15;
  report("AC8", ok,
         "f0 >= e + 6 on e in [2,4], k in [5,9]: " + std::to_string(enumerated) + " combinatorics, " +
             std::to_string(counterexamples) + " counterexamples, side condition flagged: " +
             (flagged ? "yes" : "no"));
}

void ac9() {
  SearchSpec ruled;
  ruled.family = Family::hirzebruch;
  ruled.param_range = {2, 3};
  ruled.k_range = {5, 10};
  ruled.n_set = {2, 3, 5};
  ruled.workers = workers();
  SearchSpec plane = ruled;
  plane.family = Family::plane;
  plane.k_range = {5, 12};

  bool ok = true;
  std::size_t cells = 0, hits = 0, brute_checked = 0;
  for (const SearchSpec& spec : {ruled, plane}) {
    const ScanReport r = theorem_scan(spec);
    ok = ok && r.valid && r.complete;
    for (const auto& c : r.cells) {
      ++cells;
      hits += c.hits.size();
      if (!c.certificate_valid) ok = false;
      if (c.target > 200) continue;
      ++brute_checked;
      const auto ref = oracle::brute_force(c.target, c.multiplicities);
      const auto got = enumerate_all(c.surface, c.k, default_limits(), std::span<const int>(c.multiplicities));
      std::vector<std::map<int, std::int64_t>> got_counts;
      for (const auto& g : got) got_counts.push_back(g.counts());
      if (got_counts != ref || c.enumerated != ref.size()) ok = false;
    }
  }
  ok = ok && hits == 0;
  report("AC9", ok,
         "theorem scans: " + std::to_string(cells) + " cells, " + std::to_string(hits) + " H = 0 hits, " +
             std::to_string(brute_checked) + " cells matched the nested-loop oracle");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto samples = ruled_samples(12000);
  ac1(samples);
  ac2(samples);
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d failure(s), %.1f s\n", failures, secs);
  return failures;
}
