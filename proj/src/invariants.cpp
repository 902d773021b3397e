#include "hkcover/invariants.hpp"

namespace hk {

namespace {

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

void require_domain(std::int64_t k, std::int64_t n) {
  if (n < 2) throw DomainError("exponent n must be >= 2, got " + std::to_string(n));
  if (k < 3) throw DomainError("cover formulas need k >= 3, got k = " + std::to_string(k));
}

void require_identity(const SurfaceModel& surface, const ArrangementCombinatorics& combo) {
  ValidationReport report = validate_combinatorics(surface, combo, Strictness::permissive);
  const RuleOutcome* r1 = report.find("R1");
  if (r1 != nullptr && !r1->passed) {
    throw RejectedInput("combinatorics fail R1: " + r1->detail, std::move(report));
  }
}

}  // namespace

ChernInvariants chern_from_moments(const SurfaceParameters& p, std::int64_t k, const Integer& f0, const Integer& f1,
                                   const Integer& t2, std::int64_t n) {
  require_domain(k, n);
  const auto cq = chern_quadratics<Rational>(q(p.euler), q(p.ksq), q(p.a), q(p.b), q(k), Rational(f0), Rational(f1),
                                             Rational(t2));
  ChernInvariants out;
  out.n = n;
  out.k = k;
  out.scaled_c2 = cq.c2(q(n));
  out.scaled_c1sq = cq.c1sq(q(n));
  out.bmy_gap_scaled = 3 * out.scaled_c2 - out.scaled_c1sq;
  const Integer scale = ipow(Integer(static_cast<long>(n)), static_cast<unsigned long>(k - 3));
  // Integer inputs give integer scaled values.
  out.total_c2 = out.scaled_c2.get_num() * scale;
  out.total_c1sq = out.scaled_c1sq.get_num() * scale;
  return out;
}

HirzebruchQuadratic hirzebruch_from_moments(const SurfaceParameters& p, const Rational& k, const Rational& f0,
                                            const Rational& f1, const Rational& t2) {
  return hirzebruch_coefficients<Rational>(q(p.delta), q(p.a), q(p.b), k, f0, f1, t2);
}

ChernInvariants cover_chern(const SurfaceModel& surface, const ArrangementCombinatorics& combo, std::int64_t n) {
  require_domain(combo.k(), n);
  require_identity(surface, combo);
  const FMoments m = f_moments(combo);
  return chern_from_moments(surface_parameters(surface), combo.k(), m.f0, m.f1, Integer(static_cast<long>(combo.t(2))),
                            n);
}

HirzebruchQuadratic hirzebruch_polynomial_raw(const SurfaceModel& surface, const ArrangementCombinatorics& combo) {
  const FMoments m = f_moments(combo);
  return hirzebruch_from_moments(surface_parameters(surface), q(combo.k()), Rational(m.f0), Rational(m.f1),
                                 q(combo.t(2)));
}

HirzebruchQuadratic hirzebruch_polynomial(const SurfaceModel& surface, const ArrangementCombinatorics& combo) {
  require_identity(surface, combo);
  return hirzebruch_polynomial_raw(surface, combo);
}

std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::applicable:
      return "applicable";
    case Applicability::not_applicable:
      return "not_applicable";
    case Applicability::undetermined:
      return "undetermined";
  }
  return "?";
}

ApplicabilityReport bmy_applicability(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                      std::optional<std::span<const CurveProfile>> profiles, std::int64_t n) {
  ApplicabilityReport report;
  const bool n_ok = n >= 2;
  report.checks.push_back({"exponent", n_ok, "n = " + std::to_string(n) + (n_ok ? " >= 2" : " < 2")});

  switch (family_of(surface)) {
    case Family::nef_canonical: {
      const auto p = surface_parameters(surface);
      report.checks.push_back({"canonical_effective", true,
                               "K effective by construction: K_W nef and effective, a = " + std::to_string(p.a) +
                                   " >= 1, b = " + std::to_string(p.b) + " >= 0"});
      report.status = n_ok ? Applicability::applicable : Applicability::not_applicable;
      return report;
    }
    case Family::plane:
      report.checks.push_back({"positivity_gate", false, "no positivity gate is available for plane configurations"});
      report.status = n_ok ? Applicability::undetermined : Applicability::not_applicable;
      return report;
    case Family::hirzebruch:
      break;
  }

  const std::int64_t e = std::get<HirzebruchSurface>(surface).e;
  const bool e_ok = e >= 2;
  report.checks.push_back({"surface_index", e_ok, "e = " + std::to_string(e) + (e_ok ? " >= 2" : " < 2")});
  report.checks.push_back({"star_property", combo.star_property(),
                           combo.star_property() ? "(*) holds: four sections meet only in double and triple points"
                                                 : "(*) fails"});
  if (!n_ok) {
    report.status = Applicability::not_applicable;
    return report;
  }

  const Rational nn = q(n);
  const Rational ratio = (nn - 1) / nn;
  const Rational a_bound = (2 * nn - 1) / nn - Rational(3, 2);
  const Rational b_bound = ratio - Rational(1, 2);
  report.exceptional_coefficient_bound = a_bound;
  report.strict_transform_coefficient_bound = b_bound;
  report.checks.push_back({"exceptional_coefficients", a_bound >= 0, "a_p >= (2n-1)/n - 3/2 = " + to_string(a_bound)});
  report.checks.push_back(
      {"strict_transform_coefficients", b_bound >= 0, "b_j >= (n-1)/n - 1/2 = " + to_string(b_bound)});

  const Rational base = Rational(-2) - Rational(e + 2) / nn;
  bool curves_ok = true;
  if (profiles) {
    report.curve_count_source = "profiles";
    const std::int64_t k = combo.k();
    for (const auto& prof : *profiles) {
      CurveBound cb;
      cb.j = prof.j;
      cb.singular_points = prof.singular_points();
      cb.lower_bound = base + ratio * cb.singular_points;
      Rational exact = Rational(-e - 4) + ratio * Rational(k * (e + 2));
      for (const auto& [r, count] : prof.r_profile) {
        if (r >= 3) exact -= count * (ratio * (r - 1) - 1);
      }
      cb.exact = exact;
      if (cb.lower_bound < 0) curves_ok = false;
      report.curves.push_back(cb);
    }
    report.checks.push_back({"strict_transform_degree", curves_ok,
                             curves_ok ? "D.C_j' >= 0 on every curve (per-curve singular point counts)"
                                       : "D.C_j' lower bound negative on some curve"});
  } else {
    report.curve_count_source = "lemma_floor";
    const Rational floor = base + ratio * (e + 6);
    report.floor_bound = floor;
    curves_ok = floor >= 0;
    report.checks.push_back({"strict_transform_degree", curves_ok,
                             "D.C_j' >= -2 - (e+2)/n + (n-1)/n (e+6) = " + to_string(floor) +
                                 " (no profiles: singular point count per curve taken from the floor e + 6)"});
  }

  bool all = true;
  for (const auto& c : report.checks) all = all && c.passed;
  report.status = all ? Applicability::applicable : Applicability::not_applicable;
  return report;
}

}  // namespace hk
