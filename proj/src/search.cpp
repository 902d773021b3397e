#include "hkcover/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "hkcover/ball_quotient.hpp"
#include "hkcover/errors.hpp"
#include "hkcover/invariants.hpp"

namespace hk {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

class Enumerator {
 public:
  Enumerator(std::vector<int> rs, std::int64_t k, std::int64_t target, const EnumerationLimits& limits,
             const CombinatoricsVisitor& visit)
      : rs_(std::move(rs)), k_(k), target_(target), limits_(limits), visit_(visit), counts_(rs_.size(), 0) {
    // reachable_[i][s]: s is a sum of weights r(r-1) over rs_[i..].
    const std::size_t m = rs_.size();
    reachable_.assign(m + 1, std::vector<char>(static_cast<std::size_t>(target_) + 1, 0));
    reachable_[m][0] = 1;
    for (std::size_t i = m; i-- > 0;) {
      const std::int64_t w = weight(i);
      for (std::int64_t s = 0; s <= target_; ++s) {
        reachable_[i][static_cast<std::size_t>(s)] =
            reachable_[i + 1][static_cast<std::size_t>(s)] || (s >= w && reachable_[i][static_cast<std::size_t>(s - w)]);
      }
    }
    start_ = std::chrono::steady_clock::now();
  }

  EnumerationOutcome run() {
    outcome_.target = target_;
    if (reachable_[0][static_cast<std::size_t>(target_)]) descend(0, target_);
    return outcome_;
  }

 private:
  std::int64_t weight(std::size_t i) const { return static_cast<std::int64_t>(rs_[i]) * (rs_[i] - 1); }

  bool stopped() const { return !outcome_.complete; }

  void emit() {
    std::map<int, std::int64_t> t;
    for (std::size_t i = 0; i < rs_.size(); ++i) t.emplace(rs_[i], counts_[i]);
    visit_(ArrangementCombinatorics(k_, std::move(t)));
    ++outcome_.count;
    if (limits_.max_count != 0 && outcome_.count >= limits_.max_count) {
      outcome_.complete = false;
      outcome_.stop_reason = "enumeration count cap " + std::to_string(limits_.max_count) + " reached";
      return;
    }
    if (limits_.time_budget.count() > 0 && (outcome_.count & 1023u) == 0 &&
        std::chrono::steady_clock::now() - start_ > limits_.time_budget) {
      outcome_.complete = false;
      outcome_.stop_reason = "time budget of " + std::to_string(limits_.time_budget.count()) + " ms exhausted";
    }
  }

  void descend(std::size_t i, std::int64_t remaining) {
    if (i == rs_.size()) {
      emit();
      return;
    }
    const std::int64_t w = weight(i);
    for (std::int64_t t = 0; t * w <= remaining && !stopped(); ++t) {
      const std::int64_t rest = remaining - t * w;
      if (!reachable_[i + 1][static_cast<std::size_t>(rest)]) continue;
      counts_[i] = t;
      descend(i + 1, rest);
    }
    counts_[i] = 0;
  }

  std::vector<int> rs_;
  std::int64_t k_;
  std::int64_t target_;
  const EnumerationLimits& limits_;
  const CombinatoricsVisitor& visit_;
  std::vector<std::int64_t> counts_;
  std::vector<std::vector<char>> reachable_;
  std::chrono::steady_clock::time_point start_;
  EnumerationOutcome outcome_;
};

}  // namespace

std::int64_t default_sum_cap() {
  if (const char* env = std::getenv("HK_CAP_SUM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

EnumerationLimits default_limits() {
  EnumerationLimits l;
  l.max_sum = default_sum_cap();
  return l;
}

std::vector<int> allowed_multiplicities(const SurfaceModel& surface, std::int64_t k) {
  const std::int64_t top = family_of(surface) == Family::hirzebruch ? k - 3 : k - 1;
  std::vector<int> out;
  for (std::int64_t r = top; r >= 2; --r) out.push_back(static_cast<int>(r));
  return out;
}

std::int64_t enumeration_target(const SurfaceModel& surface, std::int64_t k) {
  return surface_parameters(surface).a * (k * k - k);
}

EnumerationOutcome enumerate_combinatorics(const SurfaceModel& surface, std::int64_t k, const EnumerationLimits& limits,
                                           const CombinatoricsVisitor& visit, std::optional<std::span<const int>> only) {
  if (k < 1) throw DomainError("enumeration needs k >= 1, got " + str(k));
  std::vector<int> rs = allowed_multiplicities(surface, k);
  if (only) {
    const std::set<int> keep(only->begin(), only->end());
    std::erase_if(rs, [&](int r) { return !keep.contains(r); });
  }
  const std::int64_t target = enumeration_target(surface, k);
  if (target > limits.max_sum) {
    EnumerationOutcome out;
    out.target = target;
    out.complete = false;
    out.stop_reason = "target sum " + str(target) + " exceeds cap " + str(limits.max_sum);
    return out;
  }
  return Enumerator(std::move(rs), k, target, limits, visit).run();
}

std::vector<ArrangementCombinatorics> enumerate_all(const SurfaceModel& surface, std::int64_t k,
                                                    const EnumerationLimits& limits,
                                                    std::optional<std::span<const int>> only) {
  std::vector<ArrangementCombinatorics> out;
  const EnumerationOutcome res =
      enumerate_combinatorics(surface, k, limits, [&](const ArrangementCombinatorics& c) { out.push_back(c); }, only);
  if (!res.complete) throw PartialResultError("enumeration incomplete: " + res.stop_reason, res.count);
  return out;
}

LemmaReport verify_lemma_f0(IntRange e_range, IntRange k_range, const EnumerationLimits& limits, unsigned workers) {
  LemmaReport report;
  report.assumed_side_conditions.push_back(kExternalF0Condition);
  if (e_range.empty() || k_range.empty()) return report;
  if (e_range.lo < 0) throw DomainError("lemma scan needs e >= 0");
  if (k_range.lo < 5) throw DomainError("lemma scan needs k >= 5");

  for (std::int64_t e = e_range.lo; e <= e_range.hi; ++e) {
    for (std::int64_t k = k_range.lo; k <= k_range.hi; ++k) {
      LemmaCell cell;
      cell.e = e;
      cell.k = k;
      report.cells.push_back(cell);
    }
  }
  parallel_for(report.cells.size(), workers, [&](std::size_t i) {
    LemmaCell& cell = report.cells[i];
    const SurfaceModel surface = HirzebruchSurface{cell.e};
    const EnumerationOutcome res = enumerate_combinatorics(surface, cell.k, limits, [&](const ArrangementCombinatorics& c) {
      const Integer f0 = f_moments(c).f0;
      if (f0 < cell.k) return;
      ++cell.side_condition_holds;
      if (f0 < cell.e + 6) cell.counterexamples.push_back(c);
    });
    cell.target = res.target;
    cell.enumerated = res.count;
    cell.complete = res.complete;
    cell.stop_reason = res.stop_reason;
  });
  for (const auto& cell : report.cells) {
    report.complete = report.complete && cell.complete;
    report.valid = report.valid && cell.counterexamples.empty();
  }
  report.valid = report.valid && report.complete;
  return report;
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::lemma_f0:
      return "lemma_f0";
    case SearchMode::theorem_scan:
      return "theorem_scan";
    case SearchMode::gap_minimum:
      return "gap_minimum";
  }
  return "?";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "lemma_f0") return SearchMode::lemma_f0;
  if (text == "theorem_scan") return SearchMode::theorem_scan;
  if (text == "gap_minimum") return SearchMode::gap_minimum;
  throw ValidationError("unknown search mode '" + std::string(text) + "'");
}

std::vector<SurfaceModel> search_surfaces(const SearchSpec& spec) {
  std::vector<SurfaceModel> out;
  switch (spec.family) {
    case Family::hirzebruch:
      for (auto e = spec.param_range.lo; e <= spec.param_range.hi; ++e) out.emplace_back(HirzebruchSurface{e});
      break;
    case Family::plane:
      for (auto d = spec.param_range.lo; d <= spec.param_range.hi; ++d) out.emplace_back(ProjectivePlaneDeg{d});
      break;
    case Family::nef_canonical:
      for (auto a = spec.a_range.lo; a <= spec.a_range.hi; ++a)
        for (auto b = spec.b_range.lo; b <= spec.b_range.hi; ++b)
          if ((a + b) % 2 == 0)  // the box may hold parameters no curve class realizes
          out.emplace_back(NefEffectiveCanonical{spec.euler, spec.ksq, a, b});
      break;
  }
  for (const auto& s : out) surface_parameters(s);  // validates every member
  return out;
}

namespace {

struct CellKey {
  std::size_t surface;
  std::int64_t k;
  std::int64_t n;
};

std::vector<CellKey> cell_keys(const SearchSpec& spec, std::size_t surfaces) {
  std::vector<CellKey> keys;
  if (spec.k_range.empty()) return keys;
  std::vector<std::int64_t> ns = spec.n_set;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (std::size_t s = 0; s < surfaces; ++s)
    for (auto k = spec.k_range.lo; k <= spec.k_range.hi; ++k)
      for (auto n : ns) keys.push_back({s, k, n});
  return keys;
}

Integer gap_at(const SurfaceParameters& p, const ArrangementCombinatorics& c, std::int64_t n) {
  const FMoments m = f_moments(c);
  const Rational h = hirzebruch_from_moments(p, Rational(c.k()), Rational(m.f0), Rational(m.f1), Rational(c.t(2)))(
      Rational(n));
  return h.get_num();  // integer for integer inputs
}

}  // namespace

ScanReport theorem_scan(const SearchSpec& spec) {
  for (auto n : spec.n_set) {
    if (!admissible_multiplicity(n)) {
      throw DomainError("theorem scans cover n in {2, 3, 5}; n = " + str(n) + " has no admissible multiplicity");
    }
  }
  const auto surfaces = search_surfaces(spec);
  const auto keys = cell_keys(spec, surfaces.size());

  // One symbolic certificate per exponent backs every zero-hit cell of that exponent.
  std::map<std::int64_t, std::pair<std::string, bool>> certificates;
  for (auto n : spec.n_set) {
    FamilyPattern pattern;
    pattern.family = spec.family;
    pattern.symbolic = true;
    GridOptions no_grid;
    no_grid.enabled = false;
    const Certificate cert = certify_nonexistence(pattern, n, no_grid);
    certificates[n] = {cert.id, cert.valid};
  }

  ScanReport report;
  report.cells.resize(keys.size());
  parallel_for(keys.size(), spec.workers, [&](std::size_t i) {
    const CellKey& key = keys[i];
    ScanCell& cell = report.cells[i];
    cell.surface = surfaces[key.surface];
    cell.k = key.k;
    cell.n = key.n;
    cell.certificate_id = certificates.at(key.n).first;
    cell.certificate_valid = certificates.at(key.n).second;
    const SurfaceParameters p = surface_parameters(cell.surface);
    const int r_star = *admissible_multiplicity(key.n);
    const std::vector<int> support{r_star, 2};

    std::optional<DoubleSixfoldRequirement> forced;
    if (key.n == 2 && key.k >= 5) forced = required_double_sixfold(p.a, p.b, key.k);

    bool forced_seen = false;
    const EnumerationOutcome res = enumerate_combinatorics(
        cell.surface, key.k, spec.limits,
        [&](const ArrangementCombinatorics& c) {
          const bool is_forced = forced && forced->feasible && Rational(c.t(2)) == forced->t2 &&
                                 Rational(c.t(6)) == forced->t6;
          forced_seen = forced_seen || is_forced;
          if (gap_at(p, c, key.n) == 0) cell.hits.push_back({c, is_forced});
        },
        std::span<const int>(support));
    for (int r : allowed_multiplicities(cell.surface, key.k)) {
      if (r == 2 || r == r_star) cell.multiplicities.push_back(r);
    }
    cell.target = res.target;
    cell.enumerated = res.count;
    cell.complete = res.complete;
    cell.stop_reason = res.stop_reason;
    if (forced) {
      DoubleSixfoldCheck check;
      check.t2 = forced->t2;
      check.t6 = forced->t6;
      check.feasible = forced->feasible;
      check.enumerated = forced_seen;
      check.forced_gap = Integer(static_cast<long>(4 * p.delta + (3 * p.a + p.b) * key.k));
      cell.double_sixfold = check;
    }
  });
  for (const auto& cell : report.cells) {
    report.complete = report.complete && cell.complete;
    report.valid = report.valid && cell.hits.empty();
  }
  report.valid = report.valid && report.complete;
  return report;
}

GapTable gap_minimum(const SearchSpec& spec) {
  for (auto n : spec.n_set) {
    if (n < 2) throw DomainError("gap scans need n >= 2, got " + str(n));
  }
  const auto surfaces = search_surfaces(spec);
  const auto keys = cell_keys(spec, surfaces.size());
  GapTable table;
  table.rows.resize(keys.size());
  parallel_for(keys.size(), spec.workers, [&](std::size_t i) {
    const CellKey& key = keys[i];
    GapRow& row = table.rows[i];
    row.surface = surfaces[key.surface];
    row.k = key.k;
    row.n = key.n;
    const SurfaceParameters p = surface_parameters(row.surface);
    const auto r_star = admissible_multiplicity(key.n);
    std::vector<int> support;
    if (r_star) support = {*r_star, 2};
    row.filtered = r_star.has_value();
    const auto visit = [&](const ArrangementCombinatorics& c) {
      const Integer h = gap_at(p, c, key.n);
      if (!row.min_gap || h < *row.min_gap) {
        row.min_gap = h;
        row.witness = c;
      }
    };
    const EnumerationOutcome res =
        r_star ? enumerate_combinatorics(row.surface, key.k, spec.limits, visit, std::span<const int>(support))
               : enumerate_combinatorics(row.surface, key.k, spec.limits, visit);
    row.target = res.target;
    row.enumerated = res.count;
    row.complete = res.complete;
    row.stop_reason = res.stop_reason;
  });
  for (const auto& row : table.rows) table.complete = table.complete && row.complete;
  return table;
}

}  // namespace hk
