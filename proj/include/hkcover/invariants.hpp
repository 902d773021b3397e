#pragma once

// Chern numbers of the Hirzebruch-Kummer cover Y -> W of exponent n branched along an
// arrangement, plus the scaled BMY gap H(n) = (3 c2(Y) - c1^2(Y)) / n^(k-3).
// bmy_applicability says when the inequality may be used on Y at all.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkcover/arrangements.hpp"
#include "hkcover/errors.hpp"
#include "hkcover/numeric.hpp"

namespace hk {

template <class T>
struct Quadratic {
  T c2{};
  T c1{};
  T c0{};

  T operator()(const T& n) const { return c2 * n * n + c1 * n + c0; }
};

/// c2(Y)/n^(k-3) and c1^2(Y)/n^(k-3) as quadratics in n. Generic over the scalar so that
/// certificates can evaluate the same closed forms on symbolic polynomials.
///
/// The linear term of c2 is -(a+b)k; with (a,b) = (e+2, -e-4) this is what reduces to the
/// F_e closed form 2n(k - f1 + f0).
template <class T>
struct ChernQuadratics {
  Quadratic<T> c2;
  Quadratic<T> c1sq;
};

template <class T>
ChernQuadratics<T> chern_quadratics(const T& euler, const T& ksq, const T& a, const T& b, const T& k, const T& f0,
                                    const T& f1, const T& t2) {
  ChernQuadratics<T> q;
  const T linear = T(0) - (a + b) * k - T(2) * f1 + T(2) * f0;
  q.c2.c2 = euler + (a + b) * k + f1 - f0;
  q.c2.c1 = linear;
  q.c2.c0 = f1 - t2;
  q.c1sq.c2 = ksq + (a + T(2) * b) * k + T(3) * f1 - T(4) * f0;
  q.c1sq.c1 = T(2) * linear;
  q.c1sq.c0 = a * k + f1 - f0 + t2;
  return q;
}

/// H(n) = (3 c2 - c1^2)/n^(k-3); depends on the base only through delta = 3e(W) - K_W^2.
template <class T>
Quadratic<T> hirzebruch_coefficients(const T& delta, const T& a, const T& b, const T& k, const T& f0, const T& f1,
                                     const T& t2) {
  Quadratic<T> h;
  h.c2 = delta + (T(2) * a + b) * k + f0;
  h.c1 = T(0) - (a + b) * k - T(2) * f1 + T(2) * f0;
  h.c0 = T(0) - a * k + T(2) * f1 + f0 - T(4) * t2;
  return h;
}

struct ChernInvariants {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Rational scaled_c2;
  Rational scaled_c1sq;
  Integer total_c2;
  Integer total_c1sq;
  Rational bmy_gap_scaled;
};

using HirzebruchQuadratic = Quadratic<Rational>;

/// Thrown when a formula's precondition (identity R1) fails; carries the full report.
class RejectedInput : public ValidationError {
 public:
  RejectedInput(const std::string& what, ValidationReport report)
      : ValidationError(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Raw evaluation from the moments; no combinatorial checks. Requires n >= 2, k >= 3.
ChernInvariants chern_from_moments(const SurfaceParameters& p, std::int64_t k, const Integer& f0, const Integer& f1,
                                   const Integer& t2, std::int64_t n);

HirzebruchQuadratic hirzebruch_from_moments(const SurfaceParameters& p, const Rational& k, const Rational& f0,
                                            const Rational& f1, const Rational& t2);

/// Chern invariants of the cover. Throws DomainError for n < 2 or k < 3 and
/// RejectedInput if the pair-count identity R1 fails.
ChernInvariants cover_chern(const SurfaceModel& surface, const ArrangementCombinatorics& combo, std::int64_t n);

/// Throws RejectedInput if R1 fails.
HirzebruchQuadratic hirzebruch_polynomial(const SurfaceModel& surface, const ArrangementCombinatorics& combo);

/// Unchecked variant for hypothetical combinatorics (no R1 gate).
HirzebruchQuadratic hirzebruch_polynomial_raw(const SurfaceModel& surface, const ArrangementCombinatorics& combo);

enum class Applicability { applicable, not_applicable, undetermined };
std::string to_string(Applicability a);

struct ApplicabilityCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CurveBound {
  std::int64_t j = 0;
  std::int64_t singular_points = 0;
  Rational lower_bound;            // -2 - (e+2)/n + (n-1)/n * singular_points
  std::optional<Rational> exact;   // D.C_j' from the profile when available
};

struct ApplicabilityReport {
  Applicability status = Applicability::undetermined;
  std::vector<ApplicabilityCheck> checks;
  /// "profiles" when per-curve counts came from profiles, "lemma_floor" when the
  /// global bound e + 6 stood in for every curve, empty when no curve bound applies.
  std::string curve_count_source;
  std::vector<CurveBound> curves;
  std::optional<Rational> floor_bound;
  std::optional<Rational> exceptional_coefficient_bound;
  std::optional<Rational> strict_transform_coefficient_bound;
};

ApplicabilityReport bmy_applicability(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                      std::optional<std::span<const CurveProfile>> profiles, std::int64_t n);

}  // namespace hk
