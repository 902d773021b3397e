#pragma once

// Cover invariants from a normal-crossing model of the branch divisor: the base after
// blowing up every essential point, with each branch component's Euler number,
// self-intersection and canonical degree, and the pairwise crossing counts.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hkcover/arrangements.hpp"
#include "hkcover/invariants.hpp"
#include "hkcover/numeric.hpp"

namespace hk {

struct NcComponent {
  std::string id;
  std::int64_t euler = 0;
  std::int64_t self_int = 0;
  std::int64_t k_deg = 0;
  bool exceptional = false;
};

struct NcCrossing {
  std::string first;
  std::string second;
  std::int64_t count = 0;
};

class NormalCrossingModel {
 public:
  /// Validates on construction (ValidationError): unique ids, adjunction
  /// e(D) = -(D^2 + K.D) with D^2 + K.D even, crossings between distinct known
  /// components with nonnegative counts, each unordered pair listed at most once,
  /// exactly k non-exceptional components.
  NormalCrossingModel(std::int64_t k, std::int64_t base_euler, std::int64_t base_ksq,
                      std::vector<NcComponent> components, const std::vector<NcCrossing>& crossings);

  std::int64_t k() const { return k_; }
  std::int64_t base_euler() const { return base_euler_; }
  std::int64_t base_ksq() const { return base_ksq_; }
  const std::vector<NcComponent>& components() const { return components_; }
  /// Keys are component index pairs (i, j) with i < j; zero counts are not stored.
  const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& crossings() const { return crossings_; }

  std::int64_t total_double_points() const;
  std::int64_t double_points_on(std::size_t component) const;
  std::vector<NcCrossing> crossing_list() const;

 private:
  std::int64_t k_;
  std::int64_t base_euler_;
  std::int64_t base_ksq_;
  std::vector<NcComponent> components_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> crossings_;
};

/// Blows up every essential point of a single-class arrangement. With profiles the
/// incidences are realized greedily to match them (ValidationError if they are
/// inconsistent or cannot be realized); without, points are spread cyclically over the
/// curves. Throws RejectedInput if the pair-count identity fails.
NormalCrossingModel blowup_homogeneous(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                       std::optional<std::span<const CurveProfile>> profiles = std::nullopt);

/// e(Y) = n^(k-1) e(Z - D) + n^(k-2) sum_j e(D_j minus crossings) + n^(k-3) N.
Integer cover_euler_nc(const NormalCrossingModel& model, std::int64_t n);

/// c1^2(Y) = n^(k-1) (K_Z + (n-1)/n D)^2. Throws ModelInconsistencyError if the result
/// is not an integer.
Integer cover_c1sq_nc(const NormalCrossingModel& model, std::int64_t n);

/// 3e(Y) - c1^2(Y) = n^(k-3) q(n); returns q.
Quadratic<Integer> nc_gap_quadratic(const NormalCrossingModel& model);

}  // namespace hk
