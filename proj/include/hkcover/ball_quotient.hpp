#pragma once

// Necessary conditions for a Hirzebruch-Kummer cover to be a ball-quotient. Every
// ramification component must have zero proportionality deviation; the multiplicity
// filter and the forced n = 2 counts follow from that. Certificates live here too.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hkcover/arrangements.hpp"
#include "hkcover/numeric.hpp"

namespace hk {

/// prop(C) = 2C^2 - e(C) = n^(r-2) ((r-2)(n-1) - 4) for a component over an r-fold point.
struct PropValue {
  std::int64_t n = 0;
  std::int64_t r = 0;
  Integer value;
};

/// Throws DomainError for n < 2 or r < 3 (double points are not blown up).
PropValue prop_exceptional(std::int64_t n, std::int64_t r);

/// All (n, r) with (n-1)(r-2) = 4, 2 <= n <= n_max, 3 <= r <= r_max, sorted by n.
std::vector<std::pair<std::int64_t, std::int64_t>> admissible_pairs(std::int64_t n_max, std::int64_t r_max);

/// The unique essential multiplicity allowed at exponent n, if any.
std::optional<int> admissible_multiplicity(std::int64_t n);

struct FilterResult {
  bool passed = false;
  int admissible_r = 0;
  std::vector<int> offending;
};

/// Passes iff t_r = 0 outside {2, r*}. Throws DomainError for n outside {2, 3, 5}.
FilterResult necessary_condition_filter(const ArrangementCombinatorics& combo, std::int64_t n);

/// prop(D_j)/n^(k-3) = prop(C_j) + (n-1)(r_j - e(C_j)) - 2 gamma_j with prop(C_j) = 3a + b
/// and e(C_j) = -(a+b) by adjunction.
template <class T>
T prop_curve_value(const T& a, const T& b, const T& n, const T& singular_points, const T& essential_points) {
  const T prop_curve = T(3) * a + b;
  const T euler_curve = T(0) - (a + b);
  return prop_curve + (n - T(1)) * (singular_points - euler_curve) - T(2) * essential_points;
}

Rational prop_curve_component(const SurfaceModel& surface, std::int64_t k, std::int64_t n, const CurveProfile& profile);

struct DoubleSixfoldRequirement {
  Rational t2;
  Rational t6;
  /// Per-curve count r_{j,6} + r_{j,2} = (a(k-1) - 8a - 4b)/3.
  Rational per_curve;
  bool feasible = false;
  std::vector<std::string> reasons;
};

/// t2 = (ak^2 - 21ak - 10bk)/12, t6 = (ak^2 + 3ak + 2bk)/36: the only counts compatible
/// with vanishing prop on every curve at n = 2. Feasible iff both are nonnegative integers.
/// Throws DomainError unless a >= 1 and k >= 5.
DoubleSixfoldRequirement required_double_sixfold(std::int64_t a, std::int64_t b, std::int64_t k);

/// Checks curve profiles against r_{j,6} + r_{j,2} = (a(k-1) - 8a - 4b)/3; returns the
/// indices of curves that violate it.
std::vector<std::int64_t> profiles_violating_double_sixfold(std::int64_t a, std::int64_t b, std::int64_t k,
                                                            std::span<const CurveProfile> profiles);

// ---------------------------------------------------------------------------
// Certificates

/// A family together with how its parameter is treated: symbolic (a variable bounded
/// below by the family constraint) or fixed at a value.
struct FamilyPattern {
  Family family = Family::hirzebruch;
  bool symbolic = true;
  std::optional<std::int64_t> e;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> delta;
};

struct CertificateStep {
  std::string relation;
  std::string anchor;
  std::string method;  // "identity", "sign", "filter"
  bool verified = false;
  std::string detail;
};

struct CertificateConclusion {
  std::string relation;
  std::string verdict;
  bool contradiction = false;
};

struct GridOptions {
  bool enabled = true;
  std::int64_t param_lo = 2;  // e or d
  std::int64_t param_hi = 50;
  std::int64_t a_max = 6;     // nef family box: a in [1, a_max], b in [0, b_max], delta in [0, delta_max]
  std::int64_t b_max = 6;
  std::int64_t delta_max = 6;
  std::int64_t k_lo = 5;
  std::int64_t k_hi = 200;
  std::int64_t t_max = 2;     // free t-variables range over [0, t_max] for n = 3, 5
  unsigned workers = 1;
};

struct GridConfirmation {
  bool ran = false;
  std::string domain;
  std::uint64_t cases = 0;
  std::uint64_t counterexamples = 0;
  /// n = 2 instances where the forced (t2, t6) is already negative or fractional.
  std::uint64_t early_witnesses = 0;
};

struct Certificate {
  std::string id;
  std::string family;
  std::map<std::string, std::string> parameters;
  std::int64_t n = 0;
  std::vector<CertificateStep> steps;
  CertificateConclusion conclusion;
  GridConfirmation grid;
  bool valid = false;
};

std::string certificate_id(const FamilyPattern& pattern, std::int64_t n);

/// Replays the nonexistence derivation for (family, n), verifying each identity by
/// polynomial expansion and each inequality by coefficient signs, then confirms the final
/// relation numerically on a grid through the invariants route. Throws
/// UnsupportedCaseError outside the covered cases (n not in {2,3,5}, F_e with e < 2,
/// plane with d < 2, nef parameters violating a >= 1, b >= 0, delta >= 0).
Certificate certify_nonexistence(const FamilyPattern& pattern, std::int64_t n, const GridOptions& grid = {});

}  // namespace hk
