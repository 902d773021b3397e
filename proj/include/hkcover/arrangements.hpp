#pragma once

// Base surfaces, arrangement combinatorics and the counting identities they obey.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hkcover/numeric.hpp"

namespace hk {

/// Sections in |(e+1)F + Gamma| on the Hirzebruch surface F_e.
struct HirzebruchSurface {
  std::int64_t e = 0;
};

/// Curves in an ample effective system |A| on a surface W with K_W nef and effective.
/// a = A^2, b = K_W.C_j.
struct NefEffectiveCanonical {
  std::int64_t euler = 0;
  std::int64_t ksq = 0;
  std::int64_t a = 1;
  std::int64_t b = 0;
};

/// Smooth plane curves of degree d.
struct ProjectivePlaneDeg {
  std::int64_t d = 2;
};

using SurfaceModel = std::variant<HirzebruchSurface, NefEffectiveCanonical, ProjectivePlaneDeg>;

enum class Family { hirzebruch, nef_canonical, plane };

Family family_of(const SurfaceModel& surface);
std::string family_name(Family family);
Family parse_family(std::string_view name);
std::string describe(const SurfaceModel& surface);

/// The four numbers every cover formula consumes, plus delta = 3 e(W) - K_W^2.
struct SurfaceParameters {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t euler = 0;
  std::int64_t ksq = 0;
  std::int64_t delta = 0;

  friend bool operator==(const SurfaceParameters&, const SurfaceParameters&) = default;
};

/// Throws ValidationError naming the violated bound.
SurfaceParameters surface_parameters(const SurfaceModel& surface);

/// Smallest number of curves the family's definition admits (5 for F_e and regular
/// arrangements, 3 for plane configurations).
std::int64_t family_min_curves(Family family);

struct FMoments {
  Integer f0;
  Integer f1;
  Integer f2;
};

/// k curves and the counts t_r of points where exactly r of them meet.
class ArrangementCombinatorics {
 public:
  ArrangementCombinatorics() = default;
  /// Zero counts are dropped. Throws ValidationError if k < 1, some r < 2 or r > k,
  /// or some t_r < 0.
  ArrangementCombinatorics(std::int64_t k, std::map<int, std::int64_t> t, bool star_property = false);

  std::int64_t k() const { return k_; }
  std::int64_t t(int r) const;
  const std::map<int, std::int64_t>& counts() const { return t_; }
  bool star_property() const { return star_; }

  /// r values with t_r > 0, ascending.
  std::vector<int> support() const;

  friend bool operator==(const ArrangementCombinatorics&, const ArrangementCombinatorics&) = default;

 private:
  std::int64_t k_ = 0;
  std::map<int, std::int64_t> t_;
  bool star_ = false;
};

std::string describe(const ArrangementCombinatorics& combo);

FMoments f_moments(const ArrangementCombinatorics& combo);

/// sum r(r-1) t_r, i.e. f2 - f1.
Integer pair_incidence_sum(const ArrangementCombinatorics& combo);

/// How many r-fold points of the arrangement lie on curve j.
struct CurveProfile {
  std::int64_t j = 0;
  std::map<int, std::int64_t> r_profile;

  /// Number of singular points on the curve.
  std::int64_t singular_points() const;
  /// Points of multiplicity >= 3 on the curve.
  std::int64_t essential_points() const;
  std::int64_t double_points() const;
  std::int64_t count(int r) const;
};

enum class Severity { error, warning };

struct RuleOutcome {
  std::string rule;
  bool passed = true;
  Severity severity = Severity::error;
  std::string detail;
};

struct ValidationReport {
  std::vector<RuleOutcome> rules;

  /// No failed rule of error severity.
  bool ok() const;
  const RuleOutcome* find(std::string_view rule) const;
  std::vector<std::string> failed_rules() const;
};

enum class Strictness { strict, permissive };

/// Rules R1 (pair-count identity), R2 (family multiplicity cap), R3 (curve count),
/// R4 (f0 >= e + 6 on F_e, warning only).
ValidationReport validate_combinatorics(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                        Strictness strictness = Strictness::permissive);

/// Rules P1 (per-curve incidence weight a(k-1)), P2 (sum_j r_{j,r} = r t_r) and P3
/// (the pair-count identity they imply). Throws ValidationError when the number of
/// profiles is not k or curve indices repeat.
ValidationReport validate_profiles(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                   std::span<const CurveProfile> profiles);

}  // namespace hk
