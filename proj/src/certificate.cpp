#include <algorithm>
#include <thread>

#include "hkcover/ball_quotient.hpp"
#include "hkcover/errors.hpp"
#include "hkcover/invariants.hpp"
#include "hkcover/polynomial.hpp"

namespace hk {

namespace {

using P = Polynomial;

P var(const char* name) { return P::variable(name); }
P c(long v) { return P(v); }
P frac(long num, long den) { return P(make_rational(num, den)); }

std::string str(std::int64_t v) { return std::to_string(v); }

// Base parameters of the family as polynomials, plus the bounds for its free variables.
struct SymbolicFamily {
  P a, b, delta;
  P e_param;  // e on F_e, d on P2 (zero polynomial for the nef family)
  std::vector<VariableBound> bounds;
  std::map<std::string, std::string> parameters;
  std::string label;
};

SymbolicFamily make_family(const FamilyPattern& pattern) {
  SymbolicFamily f;
  switch (pattern.family) {
    case Family::hirzebruch: {
      P e;
      if (pattern.symbolic) {
        e = var("e");
        f.bounds.push_back({"e", Rational(2)});
        f.parameters["e"] = ">= 2";
        f.label = "F_e, e >= 2";
      } else {
        if (!pattern.e) throw UnsupportedCaseError("fixed hirzebruch certificate needs e");
        if (*pattern.e < 2) throw UnsupportedCaseError("hirzebruch certificates cover e >= 2, got e = " + str(*pattern.e));
        e = c(*pattern.e);
        f.parameters["e"] = str(*pattern.e);
        f.label = "F_" + str(*pattern.e);
      }
      f.e_param = e;
      f.a = e + c(2);
      f.b = -(e + c(4));
      f.delta = c(4);
      break;
    }
    case Family::nef_canonical: {
      if (pattern.symbolic) {
        f.a = var("a");
        f.b = var("b");
        f.delta = var("delta");
        f.bounds.push_back({"a", Rational(1)});
        f.bounds.push_back({"b", Rational(0)});
        f.bounds.push_back({"delta", Rational(0)});
        f.parameters = {{"a", ">= 1"}, {"b", ">= 0"}, {"delta", ">= 0"}};
        f.label = "W with K_W nef and effective, a >= 1, b >= 0, delta(W) >= 0";
      } else {
        if (!pattern.a || !pattern.b || !pattern.delta) {
          throw UnsupportedCaseError("fixed nef certificate needs a, b and delta");
        }
        if (*pattern.a < 1 || *pattern.b < 0 || *pattern.delta < 0) {
          throw UnsupportedCaseError("nef certificates need a >= 1, b >= 0, delta >= 0");
        }
        if ((*pattern.a + *pattern.b) % 2 != 0) {
          throw UnsupportedCaseError("nef certificates need a + b even (adjunction)");
        }
        f.a = c(*pattern.a);
        f.b = c(*pattern.b);
        f.delta = c(*pattern.delta);
        f.parameters = {{"a", str(*pattern.a)}, {"b", str(*pattern.b)}, {"delta", str(*pattern.delta)}};
        f.label = "W(a=" + str(*pattern.a) + ", b=" + str(*pattern.b) + ", delta=" + str(*pattern.delta) + ")";
      }
      break;
    }
    case Family::plane: {
      P d;
      if (pattern.symbolic) {
        d = var("d");
        f.bounds.push_back({"d", Rational(2)});
        f.parameters["d"] = ">= 2";
        f.label = "P2, d >= 2";
      } else {
        if (!pattern.d) throw UnsupportedCaseError("fixed plane certificate needs d");
        if (*pattern.d < 2) throw UnsupportedCaseError("plane certificates cover d >= 2, got d = " + str(*pattern.d));
        d = c(*pattern.d);
        f.parameters["d"] = str(*pattern.d);
        f.label = "P2, d = " + str(*pattern.d);
      }
      f.e_param = d;
      f.a = d * d;
      f.b = c(-3) * d;
      f.delta = c(0);
      break;
    }
  }
  f.bounds.push_back({"k", Rational(5)});
  return f;
}

std::vector<VariableBound> with_counts(std::vector<VariableBound> bounds, std::initializer_list<const char*> names) {
  for (const char* n : names) bounds.push_back({n, Rational(0)});
  return bounds;
}

P hpoly_at(const SymbolicFamily& f, const P& f0, const P& f1, const P& t2, long n) {
  const auto h = hirzebruch_coefficients<P>(f.delta, f.a, f.b, var("k"), f0, f1, t2);
  return h(c(n));
}

CertificateStep identity_step(const P& lhs, const P& rhs, std::string relation, std::string anchor) {
  const P diff = lhs - rhs;
  CertificateStep s{std::move(relation), std::move(anchor), "identity", diff.is_zero(), ""};
  s.detail = s.verified ? "lhs - rhs expands to 0" : "lhs - rhs = " + diff.to_string();
  return s;
}

CertificateStep sign_step(const P& p, SignClaim claim, std::span<const VariableBound> bounds, std::string relation,
                          std::string anchor) {
  const SignProof proof = prove_sign(p, claim, bounds);
  return CertificateStep{std::move(relation), std::move(anchor), "sign", proof.verified, proof.detail};
}

CertificateStep filter_step(std::int64_t n) {
  const int r_star = *admissible_multiplicity(n);
  bool ok = prop_exceptional(n, r_star).value == 0;
  for (std::int64_t r = 3; r <= 64 && ok; ++r) {
    if (r != r_star && prop_exceptional(n, r).value == 0) ok = false;
  }
  CertificateStep s;
  s.relation = "prop(E) = n^(r-2)((r-2)(n-1) - 4) = 0 only at r = " + std::to_string(r_star) + " for n = " + str(n) +
               "; t_r = 0 for r not in {2, " + std::to_string(r_star) + "}";
  s.anchor = "exceptional-proportionality";
  s.method = "filter";
  s.verified = ok;
  s.detail = "(n-1)(r-2) = 4 has the single solution r = " + std::to_string(r_star) + "; checked r in [3, 64]";
  return s;
}

// Display form of an integer-linear expression in the family parameter, e.g. (2e+1).
std::string affine(const FamilyPattern& pattern, std::int64_t slope, std::int64_t offset, const char* name) {
  if (!pattern.symbolic) {
    const std::int64_t value = pattern.family == Family::hirzebruch ? *pattern.e : *pattern.d;
    return str(slope * value + offset);
  }
  std::string out = (slope == 1 ? std::string() : str(slope)) + name;
  if (offset > 0) out += "+" + str(offset);
  if (offset < 0) out += str(offset);
  return "(" + out + ")";
}

void build_positive_case(Certificate& cert, const FamilyPattern& pattern, const SymbolicFamily& f, std::int64_t n) {
  const P k = var("k");
  const P t2 = var("t2");
  const bool five = n == 5;
  const int r_star = five ? 3 : 4;
  const P tr = var(five ? "t3" : "t4");
  const P f0 = t2 + tr;
  const P f1 = c(2) * t2 + c(r_star) * tr;
  const std::string nstr = str(n);

  cert.steps.push_back(filter_step(n));

  // Regular-arrangement form of H(n)/4 restricted to the admissible support.
  const P regular = five ? frac(25, 4) * f.delta + (c(11) * f.a + c(5) * f.b) * k + c(4) * t2 + c(3) * tr
                         : frac(9, 4) * f.delta + (frac(7, 2) * f.a + frac(3, 2) * f.b) * k + t2;
  const std::string regular_text = five ? "(25/4)delta(W) + (11a+5b)k + 4t2 + 3t3" : "(9/4)delta(W) + ((7/2)a + (3/2)b)k + t2";
  const P h = hpoly_at(f, f0, f1, t2, n);
  cert.steps.push_back(identity_step(h, c(4) * regular, "H(" + nstr + ") = 4 [" + regular_text + "] on t-support {2, " +
                                                           std::to_string(r_star) + "}",
                                     "hpoly-regular-form"));

  // On F_e also replay the ruled-surface expansion with free moments, and the reduced form.
  const auto bounds = with_counts(f.bounds, {"t2", five ? "t3" : "t4"});
  if (pattern.family == Family::hirzebruch) {
    const P e = f.e_param;
    const P F0 = var("f0");
    const P F1 = var("f1");
    const P expanded = five ? c(100) + c(24) * e * k + c(8) * k + c(36) * F0 - c(8) * F1 - c(4) * t2
                            : c(36) + c(8) * e * k + c(4) * k - c(4) * F1 + c(16) * F0 - c(4) * t2;
    cert.steps.push_back(identity_step(hpoly_at(f, F0, F1, t2, n), expanded,
                                       five ? "H(5) = 100 + 24ek + 8k + 36f0 - 8f1 - 4t2"
                                            : "H(3) = 36 + 8ek + 4k - 4f1 + 16f0 - 4t2",
                                       "hpoly-ruled-expansion"));
    const P ruled = five ? c(25) + (c(6) * e + c(2)) * k + c(4) * t2 + c(3) * tr : c(9) + (c(2) * e + c(1)) * k + t2;
    const std::string ruled_text = five ? "25 + " + affine(pattern, 6, 2, "e") + "k + 4t2 + 3t3"
                                        : "9 + " + affine(pattern, 2, 1, "e") + "k + t2";
    cert.steps.push_back(identity_step(regular, ruled, regular_text + " = " + ruled_text, "ruled-specialization"));
    cert.steps.push_back(sign_step(ruled, SignClaim::positive, bounds, ruled_text + " > 0", "positivity"));
    cert.conclusion.relation = "0 = H(" + nstr + ") = " + ruled_text + " > 0";
  } else {
    std::string text = regular_text;
    if (pattern.family == Family::plane) {
      // delta = 0, a = d^2, b = -3d.
      if (pattern.symbolic) {
        text = five ? "(11d^2 - 15d)k + 4t2 + 3t3" : "((7/2)d^2 - (9/2)d)k + t2";
      } else {
        const std::int64_t d = *pattern.d;
        text = five ? str(11 * d * d - 15 * d) + "k + 4t2 + 3t3" : "(" + to_string(make_rational(7 * d * d - 9 * d, 2)) + ")k + t2";
      }
      const P reduced = five ? (c(11) * f.e_param * f.e_param - c(15) * f.e_param) * k + c(4) * t2 + c(3) * tr
                             : (frac(7, 2) * f.e_param * f.e_param - frac(9, 2) * f.e_param) * k + t2;
      cert.steps.push_back(identity_step(regular, reduced, regular_text + " = " + text, "plane-specialization"));
    }
    cert.steps.push_back(sign_step(regular, SignClaim::positive, bounds, text + " > 0", "positivity"));
    cert.conclusion.relation = "0 = " + text + " > 0";
  }
  cert.conclusion.verdict = "H(" + nstr + ") = 0 is impossible: the right side is strictly positive";
}

void build_double_sixfold_case(Certificate& cert, const FamilyPattern& pattern, const SymbolicFamily& f) {
  const P k = var("k");
  const P t2 = var("t2");
  const P t6 = var("t6");
  const P& a = f.a;
  const P& b = f.b;

  cert.steps.push_back(filter_step(2));

  const P h2 = hpoly_at(f, t2 + t6, c(2) * t2 + c(6) * t6, t2, 2);
  const P gap_form = c(4) * f.delta + (c(5) * a + c(2) * b) * k + t2 - c(3) * t6;
  cert.steps.push_back(
      identity_step(h2, gap_form, "H(2) = 4delta(W) + (5a+2b)k + t2 - 3t6 on t-support {2, 6}", "hpoly-n2-form"));
  if (pattern.family == Family::hirzebruch) {
    const P ruled = c(16) + (c(3) * f.e_param + c(2)) * k + t2 - c(3) * t6;
    cert.steps.push_back(identity_step(gap_form, ruled,
                                       "4delta(W) + (5a+2b)k + t2 - 3t6 = 16 + " + affine(pattern, 3, 2, "e") +
                                           "k + t2 - 3t6",
                                       "ruled-specialization"));
  }

  // Per curve: prop(D_j) = 0 at n = 2 together with the incidence count a(k-1) forces
  // r_{j,6} = (a(k-1) + 4a + 2b)/6 and r_{j,2} = r_{j,6} - 4a - 2b.
  const P r6 = (a * (k - c(1)) + c(4) * a + c(2) * b) * frac(1, 6);
  const P r2 = r6 - c(4) * a - c(2) * b;
  const P prop_d = prop_curve_value<P>(a, b, c(2), r6 + r2, r6);
  const P per_curve = (a * (k - c(1)) - c(8) * a - c(4) * b) * frac(1, 3);
  {
    CertificateStep s = identity_step(prop_d, c(0), "prop(D_j)/2^(k-3) = (3a+b) + (r_j + (a+b)) - 2r_{j,6} = 0",
                                      "curve-proportionality");
    const CertificateStep inc =
        identity_step(c(5) * r6 + r2, a * (k - c(1)), "5r_{j,6} + r_{j,2} = a(k-1)", "curve-incidence");
    s.verified = s.verified && inc.verified;
    s.detail += "; " + inc.detail + "; the 2x2 system in (r_{j,6}, r_{j,2}) has determinant -6";
    cert.steps.push_back(s);
  }
  cert.steps.push_back(identity_step(r6 + r2, per_curve, "r_{j,6} + r_{j,2} = (a(k-1) - 8a - 4b)/3", "curve-count"));

  const P T2 = (a * k * k - c(21) * a * k - c(10) * b * k) * frac(1, 12);
  const P T6 = (a * k * k + c(3) * a * k + c(2) * b * k) * frac(1, 36);
  {
    CertificateStep s = identity_step(c(2) * T2 + c(6) * T6, k * per_curve,
                                      "t2 = (ak^2 - 21ak - 10bk)/12, t6 = (ak^2 + 3ak + 2bk)/36 solve 2t2 + 6t6 = "
                                      "k(a(k-1) - 8a - 4b)/3 and 2t2 + 30t6 = a(k^2 - k)",
                                      "double-sixfold-constraints");
    const CertificateStep pairs = identity_step(c(2) * T2 + c(30) * T6, a * (k * k - k), "", "");
    s.verified = s.verified && pairs.verified;
    s.detail += "; " + pairs.detail + "; determinant of [[2,6],[2,30]] is 48, so the solution is unique";
    cert.steps.push_back(s);
  }
  if (pattern.family == Family::plane) {
    const P d = f.e_param;
    const P plane_t2 = d * k * (d * k - c(21) * d + c(30)) * frac(1, 12);
    const P plane_t6 = d * k * (d * k + c(3) * d - c(6)) * frac(1, 36);
    CertificateStep s = identity_step(T2, plane_t2, "t2 = dk(dk - 21d + 30)/12, t6 = dk(dk + 3d - 6)/36",
                                      "plane-double-sixfold");
    const CertificateStep s6 = identity_step(T6, plane_t6, "", "");
    s.verified = s.verified && s6.verified;
    s.detail += "; " + s6.detail;
    cert.steps.push_back(s);
  }

  const P reduced = c(4) * f.delta + (c(3) * a + b) * k;
  const P h2_forced = gap_form.substitute({{"t2", T2}, {"t6", T6}});
  cert.steps.push_back(identity_step(h2_forced, reduced, "H(2) at the forced (t2, t6) = 4delta(W) + (3a+b)k",
                                     "forced-gap"));

  const auto& bounds = f.bounds;
  switch (pattern.family) {
    case Family::hirzebruch: {
      const P lhs = (f.e_param + c(1)) * k + c(8);
      cert.steps.push_back(identity_step(reduced, c(2) * lhs, "4delta(W) + (3a+b)k = 2((e+1)k + 8)", "ruled-gap"));
      const std::string rel = "\u22128 = " + affine(pattern, 1, 1, "e") + "k";
      cert.steps.push_back(sign_step(lhs, SignClaim::positive, bounds, affine(pattern, 1, 1, "e") + "k + 8 > 0",
                                     "positivity"));
      cert.conclusion.relation = rel;
      cert.conclusion.verdict = pattern.symbolic ? "impossible for e >= 2, k >= 5: the left side is negative and the "
                                                   "right side positive"
                                                 : "impossible for k >= 5: the left side is negative and the right "
                                                   "side positive";
      break;
    }
    case Family::nef_canonical: {
      cert.steps.push_back(sign_step((c(3) * a + b) * k, SignClaim::positive, bounds, "(3a+b)k > 0", "positivity"));
      cert.steps.push_back(
          sign_step(c(4) * f.delta, SignClaim::nonnegative, bounds, "-4delta(W) <= 0", "base-bmy"));
      cert.conclusion.relation = "0 < (3a+b)k = \u22124\u03b4(W) \u2264 0";
      cert.conclusion.verdict = "impossible: a positive quantity equals a nonpositive one";
      break;
    }
    case Family::plane: {
      const P d = f.e_param;
      const P rhs = c(36) * d * (d - c(1));
      cert.steps.push_back(identity_step(c(12) * reduced, rhs * k, "12(3d^2 - 3d)k = 36d(d-1)k", "plane-gap"));
      cert.steps.push_back(sign_step(rhs, SignClaim::positive, bounds, "36d(d-1) > 0", "positivity"));
      if (pattern.symbolic) {
        cert.conclusion.relation = "36d(d-1) = 0";
        cert.conclusion.verdict = "impossible for d >= 2";
      } else {
        const std::int64_t dv = *pattern.d;
        cert.conclusion.relation = "36d(d-1) = 0 with d = " + str(dv) + ": " + str(36 * dv * (dv - 1)) + " = 0";
        cert.conclusion.verdict = "impossible";
      }
      break;
    }
  }
}

// Independent numeric route: closed-form H(n) from the invariants module on concrete
// inputs, and the forced counts from required_double_sixfold.
struct GridPoint {
  SurfaceParameters params;
  std::int64_t family_param = 0;
};

std::vector<GridPoint> grid_points(const FamilyPattern& pattern, const GridOptions& opt) {
  std::vector<GridPoint> out;
  auto add_ruled = [&](std::int64_t e) { out.push_back({surface_parameters(HirzebruchSurface{e}), e}); };
  auto add_plane = [&](std::int64_t d) { out.push_back({surface_parameters(ProjectivePlaneDeg{d}), d}); };
  switch (pattern.family) {
    case Family::hirzebruch:
      if (pattern.symbolic) {
        for (auto e = std::max<std::int64_t>(2, opt.param_lo); e <= opt.param_hi; ++e) add_ruled(e);
      } else {
        add_ruled(*pattern.e);
      }
      break;
    case Family::plane:
      if (pattern.symbolic) {
        for (auto d = std::max<std::int64_t>(2, opt.param_lo); d <= opt.param_hi; ++d) add_plane(d);
      } else {
        add_plane(*pattern.d);
      }
      break;
    case Family::nef_canonical: {
      auto add = [&](std::int64_t a, std::int64_t b, std::int64_t delta) {
        // Any (e(W), K_W^2) with 3e - K^2 = delta; only delta enters H.
        out.push_back({SurfaceParameters{a, b, delta, 2 * delta, delta}, 0});
      };
      if (pattern.symbolic) {
        for (std::int64_t a = 1; a <= opt.a_max; ++a)
          for (std::int64_t b = 0; b <= opt.b_max; ++b)
            if ((a + b) % 2 == 0)  // odd a + b violates adjunction
            for (std::int64_t delta = 0; delta <= opt.delta_max; ++delta) add(a, b, delta);
      } else {
        add(*pattern.a, *pattern.b, *pattern.delta);
      }
      break;
    }
  }
  return out;
}

struct GridTally {
  std::uint64_t cases = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t early = 0;
};

GridTally confirm_point(Family family, const GridPoint& pt, std::int64_t n, std::int64_t k, std::int64_t t_max) {
  GridTally tally;
  const SurfaceParameters& p = pt.params;
  const Rational K(k);
  if (n == 2) {
    ++tally.cases;
    const DoubleSixfoldRequirement req = required_double_sixfold(p.a, p.b, k);
    if (!req.feasible) ++tally.early;
    const Rational f0 = req.t2 + req.t6;
    const Rational f1 = 2 * req.t2 + 6 * req.t6;
    const Rational h = hirzebruch_from_moments(p, K, f0, f1, req.t2)(Rational(2));
    const Rational expected = Rational(4 * p.delta + (3 * p.a + p.b) * k);
    bool bad = h == 0 || h != expected;
    if (family == Family::hirzebruch) bad = bad || (pt.family_param + 1) * k == -8;
    if (family == Family::plane) bad = bad || 36 * pt.family_param * (pt.family_param - 1) == 0;
    if (family == Family::nef_canonical) bad = bad || (3 * p.a + p.b) * k <= 0 || -4 * p.delta > 0;
    if (bad) ++tally.counterexamples;
    return tally;
  }
  const int r_star = n == 3 ? 4 : 3;
  for (std::int64_t t2 = 0; t2 <= t_max; ++t2) {
    for (std::int64_t tr = 0; tr <= t_max; ++tr) {
      ++tally.cases;
      const Rational f0(t2 + tr);
      const Rational f1(2 * t2 + r_star * tr);
      const Rational h = hirzebruch_from_moments(p, K, f0, f1, Rational(t2))(Rational(n));
      if (h <= 0) ++tally.counterexamples;
    }
  }
  return tally;
}

GridConfirmation confirm_on_grid(const FamilyPattern& pattern, std::int64_t n, const GridOptions& opt) {
  GridConfirmation out;
  out.ran = true;
  const auto points = grid_points(pattern, opt);
  const std::int64_t k_lo = std::max<std::int64_t>(5, opt.k_lo);
  const std::int64_t k_hi = opt.k_hi;

  const unsigned workers = std::max(1u, opt.workers);
  std::vector<GridTally> partial(workers);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < points.size(); i += workers) {
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const GridTally t = confirm_point(pattern.family, points[i], n, k, opt.t_max);
        partial[w].cases += t.cases;
        partial[w].counterexamples += t.counterexamples;
        partial[w].early += t.early;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  for (const auto& t : partial) {
    out.cases += t.cases;
    out.counterexamples += t.counterexamples;
    out.early_witnesses += t.early;
  }

  std::string params;
  switch (pattern.family) {
    case Family::hirzebruch:
      params = pattern.symbolic ? "e in [" + str(std::max<std::int64_t>(2, opt.param_lo)) + ", " + str(opt.param_hi) + "]"
                                : "e = " + str(*pattern.e);
      break;
    case Family::plane:
      params = pattern.symbolic ? "d in [" + str(std::max<std::int64_t>(2, opt.param_lo)) + ", " + str(opt.param_hi) + "]"
                                : "d = " + str(*pattern.d);
      break;
    case Family::nef_canonical:
      params = pattern.symbolic ? "a in [1, " + str(opt.a_max) + "], b in [0, " + str(opt.b_max) + "], delta in [0, " +
                                      str(opt.delta_max) + "]"
                                : "a = " + str(*pattern.a) + ", b = " + str(*pattern.b) + ", delta = " + str(*pattern.delta);
      break;
  }
  out.domain = params + ", k in [" + str(k_lo) + ", " + str(k_hi) + "]";
  if (n != 2) out.domain += ", free counts in [0, " + str(opt.t_max) + "]";
  return out;
}

}  // namespace

std::string certificate_id(const FamilyPattern& pattern, std::int64_t n) {
  std::string id = family_name(pattern.family) + "/n=" + str(n) + "/";
  if (pattern.symbolic) return id + "symbolic";
  switch (pattern.family) {
    case Family::hirzebruch:
      return id + "e=" + (pattern.e ? str(*pattern.e) : "?");
    case Family::plane:
      return id + "d=" + (pattern.d ? str(*pattern.d) : "?");
    case Family::nef_canonical:
      return id + "a=" + (pattern.a ? str(*pattern.a) : "?") + ",b=" + (pattern.b ? str(*pattern.b) : "?") +
             ",delta=" + (pattern.delta ? str(*pattern.delta) : "?");
  }
  return id;
}

Certificate certify_nonexistence(const FamilyPattern& pattern, std::int64_t n, const GridOptions& grid) {
  if (n != 2 && n != 3 && n != 5) {
    throw UnsupportedCaseError("no certificate for n = " + str(n) + ": no admissible essential multiplicity exists");
  }
  const SymbolicFamily f = make_family(pattern);

  Certificate cert;
  cert.id = certificate_id(pattern, n);
  cert.family = f.label;
  cert.parameters = f.parameters;
  cert.n = n;
  if (n == 2) {
    build_double_sixfold_case(cert, pattern, f);
  } else {
    build_positive_case(cert, pattern, f, n);
  }

  const bool steps_ok =
      std::all_of(cert.steps.begin(), cert.steps.end(), [](const CertificateStep& s) { return s.verified; });
  if (grid.enabled) cert.grid = confirm_on_grid(pattern, n, grid);
  cert.conclusion.contradiction = steps_ok;
  cert.valid = steps_ok && (!cert.grid.ran || cert.grid.counterexamples == 0);
  return cert;
}

}  // namespace hk
