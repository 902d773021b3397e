#pragma once

// Exhaustive enumeration of arrangement combinatorics obeying the pair-count identity
// sum r(r-1) t_r = a(k^2 - k), and the grid scans built on it.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkcover/arrangements.hpp"
#include "hkcover/numeric.hpp"

namespace hk {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
};

struct EnumerationLimits {
  std::int64_t max_sum = 10000;
  std::uint64_t max_count = 0;  // 0: unlimited
  std::chrono::milliseconds time_budget{0};  // 0: unlimited
};

/// 10^4 unless HK_CAP_SUM holds a positive integer.
std::int64_t default_sum_cap();
EnumerationLimits default_limits();

struct EnumerationOutcome {
  std::int64_t target = 0;
  std::uint64_t count = 0;
  bool complete = true;
  std::string stop_reason;
};

/// F_e: 2 <= r <= k-3; other families: 2 <= r <= k-1. Descending.
std::vector<int> allowed_multiplicities(const SurfaceModel& surface, std::int64_t k);

/// a(k^2 - k).
std::int64_t enumeration_target(const SurfaceModel& surface, std::int64_t k);

using CombinatoricsVisitor = std::function<void(const ArrangementCombinatorics&)>;

/// Visits every {t_r} over the allowed multiplicities (intersected with `only` when
/// given) with sum r(r-1) t_r = a(k^2 - k), in lexicographic order of
/// (t_rmax, ..., t_2). Stops early, flagged incomplete, when a cap is hit.
EnumerationOutcome enumerate_combinatorics(const SurfaceModel& surface, std::int64_t k, const EnumerationLimits& limits,
                                           const CombinatoricsVisitor& visit,
                                           std::optional<std::span<const int>> only = std::nullopt);

/// Collects the whole stream; throws PartialResultError if a cap is hit.
std::vector<ArrangementCombinatorics> enumerate_all(const SurfaceModel& surface, std::int64_t k,
                                                    const EnumerationLimits& limits = default_limits(),
                                                    std::optional<std::span<const int>> only = std::nullopt);

// ---------------------------------------------------------------------------

inline constexpr const char* kExternalF0Condition =
    "f0 >= k: external bound on the number of singular points, assumed and not re-proved";

struct LemmaCell {
  std::int64_t e = 0;
  std::int64_t k = 0;
  std::int64_t target = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t side_condition_holds = 0;
  std::vector<ArrangementCombinatorics> counterexamples;
  bool complete = true;
  std::string stop_reason;
};

struct LemmaReport {
  std::vector<LemmaCell> cells;
  std::vector<std::string> assumed_side_conditions;
  bool complete = true;
  /// No counterexample and every cell complete.
  bool valid = true;
};

/// Looks for f0 < e + 6 among enumerated combinatorics on F_e with f0 >= k.
/// Throws DomainError if the grid has e < 0 or k < 5.
LemmaReport verify_lemma_f0(IntRange e_range, IntRange k_range, const EnumerationLimits& limits = default_limits(),
                            unsigned workers = 1);

enum class SearchMode { lemma_f0, theorem_scan, gap_minimum };
std::string to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

struct SearchSpec {
  Family family = Family::hirzebruch;
  IntRange param_range;  // e on F_e, d on P2
  IntRange a_range;      // nef family box
  IntRange b_range;
  std::int64_t euler = 0;
  std::int64_t ksq = 0;
  IntRange k_range;
  std::vector<std::int64_t> n_set;
  SearchMode mode = SearchMode::theorem_scan;
  EnumerationLimits limits = default_limits();
  unsigned workers = 1;
};

/// Base surfaces named by the spec, in parameter order.
std::vector<SurfaceModel> search_surfaces(const SearchSpec& spec);

struct DoubleSixfoldCheck {
  Rational t2;
  Rational t6;
  bool feasible = false;
  bool enumerated = false;  // the forced pair occurs among the enumerated combinatorics
  Integer forced_gap;       // H(2) at the forced pair: 4 delta + (3a + b) k
};

struct ScanHit {
  ArrangementCombinatorics combo;
  bool matches_forced_counts = false;
};

struct ScanCell {
  SurfaceModel surface;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t target = 0;
  std::vector<int> multiplicities;  // searched support
  std::uint64_t enumerated = 0;
  std::vector<ScanHit> hits;
  bool complete = true;
  std::string stop_reason;
  std::string certificate_id;
  bool certificate_valid = false;
  std::optional<DoubleSixfoldCheck> double_sixfold;
};

struct ScanReport {
  std::vector<ScanCell> cells;
  bool complete = true;
  /// No H(n) = 0 hit and every cell complete.
  bool valid = true;
};

/// For each (surface, k, n), enumerates the combinatorics passing the multiplicity
/// filter at n and reports every H(n) = 0. Throws DomainError if n is outside {2, 3, 5}.
ScanReport theorem_scan(const SearchSpec& spec);

struct GapRow {
  SurfaceModel surface;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t target = 0;
  bool filtered = false;  // restricted to {2, r*} (n in {2, 3, 5})
  std::uint64_t enumerated = 0;
  std::optional<Integer> min_gap;
  std::optional<ArrangementCombinatorics> witness;
  bool complete = true;
  std::string stop_reason;
};

struct GapTable {
  std::vector<GapRow> rows;
  bool complete = true;
};

/// Minimum H(n) per (surface, k, n); ties go to the first combinatorics in enumeration order.
GapTable gap_minimum(const SearchSpec& spec);

}  // namespace hk
