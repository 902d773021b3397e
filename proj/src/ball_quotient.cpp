#include "hkcover/ball_quotient.hpp"

#include "hkcover/errors.hpp"

namespace hk {

PropValue prop_exceptional(std::int64_t n, std::int64_t r) {
  if (n < 2) throw DomainError("prop: exponent n must be >= 2, got " + std::to_string(n));
  if (r < 3) {
    throw DomainError("prop: multiplicity r must be >= 3 (only essential points are blown up), got " +
                      std::to_string(r));
  }
  PropValue out{n, r, {}};
  out.value = ipow(Integer(static_cast<long>(n)), static_cast<unsigned long>(r - 2)) * ((r - 2) * (n - 1) - 4);
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> admissible_pairs(std::int64_t n_max, std::int64_t r_max) {
  if (n_max < 2) throw DomainError("admissible_pairs: n_max must be >= 2");
  if (r_max < 3) throw DomainError("admissible_pairs: r_max must be >= 3");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  // (n-1) runs over the divisors of 4.
  for (std::int64_t m : {1, 2, 4}) {
    const std::int64_t n = m + 1;
    const std::int64_t r = 4 / m + 2;
    if (n <= n_max && r <= r_max) out.emplace_back(n, r);
  }
  return out;
}

std::optional<int> admissible_multiplicity(std::int64_t n) {
  if (n < 2) return std::nullopt;
  for (const auto& [pn, pr] : admissible_pairs(n, 6)) {
    if (pn == n) return static_cast<int>(pr);
  }
  return std::nullopt;
}

FilterResult necessary_condition_filter(const ArrangementCombinatorics& combo, std::int64_t n) {
  const auto r_star = admissible_multiplicity(n);
  if (!r_star) {
    throw DomainError("no admissible essential multiplicity exists for n = " + std::to_string(n) +
                      " (only n = 2, 3, 5 admit one)");
  }
  FilterResult out;
  out.admissible_r = *r_star;
  for (int r : combo.support()) {
    if (r != 2 && r != *r_star) out.offending.push_back(r);
  }
  out.passed = out.offending.empty();
  return out;
}

Rational prop_curve_component(const SurfaceModel& surface, std::int64_t /*k*/, std::int64_t n,
                              const CurveProfile& profile) {
  const SurfaceParameters p = surface_parameters(surface);
  return prop_curve_value<Rational>(Rational(p.a), Rational(p.b), Rational(n), Rational(profile.singular_points()),
                                    Rational(profile.essential_points()));
}

DoubleSixfoldRequirement required_double_sixfold(std::int64_t a, std::int64_t b, std::int64_t k) {
  if (a < 1) throw DomainError("required_double_sixfold: a must be >= 1, got " + std::to_string(a));
  if (k < 5) throw DomainError("required_double_sixfold: k must be >= 5, got " + std::to_string(k));
  const Integer A(static_cast<long>(a));
  const Integer B(static_cast<long>(b));
  const Integer K(static_cast<long>(k));
  DoubleSixfoldRequirement out;
  out.t2 = make_rational(A * K * K - 21 * A * K - 10 * B * K, 12);
  out.t6 = make_rational(A * K * K + 3 * A * K + 2 * B * K, 36);
  out.per_curve = make_rational(A * (K - 1) - 8 * A - 4 * B, 3);

  if (!is_integral(out.t2)) out.reasons.push_back("t2 = " + to_string(out.t2) + " is not an integer");
  if (out.t2 < 0) out.reasons.push_back("t2 = " + to_string(out.t2) + " is negative");
  if (!is_integral(out.t6)) out.reasons.push_back("t6 = " + to_string(out.t6) + " is not an integer");
  if (out.t6 < 0) out.reasons.push_back("t6 = " + to_string(out.t6) + " is negative");
  out.feasible = out.reasons.empty();

  if (out.feasible) {
    // The forced counts satisfy both linear relations they were solved from.
    const Rational pairs = 2 * out.t2 + 30 * out.t6;
    const Rational incidences = 2 * out.t2 + 6 * out.t6;
    if (pairs != Rational(A * (K * K - K)) || incidences != K * out.per_curve) {
      throw std::logic_error("required_double_sixfold: forced counts violate their defining relations");
    }
  }
  return out;
}

std::vector<std::int64_t> profiles_violating_double_sixfold(std::int64_t a, std::int64_t b, std::int64_t k,
                                                            std::span<const CurveProfile> profiles) {
  const Rational per_curve = make_rational(Integer(static_cast<long>(a * (k - 1) - 8 * a - 4 * b)), 3);
  std::vector<std::int64_t> bad;
  for (const auto& prof : profiles) {
    if (Rational(prof.count(6) + prof.count(2)) != per_curve) bad.push_back(prof.j);
  }
  return bad;
}

}  // namespace hk
