#include "hkcover/arrangements.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hkcover/errors.hpp"

namespace hk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

Family family_of(const SurfaceModel& surface) {
  return std::visit(overloaded{[](const HirzebruchSurface&) { return Family::hirzebruch; },
                               [](const NefEffectiveCanonical&) { return Family::nef_canonical; },
                               [](const ProjectivePlaneDeg&) { return Family::plane; }},
                    surface);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::hirzebruch:
      return "hirzebruch";
    case Family::nef_canonical:
      return "nef_canonical";
    case Family::plane:
      return "plane";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "hirzebruch") return Family::hirzebruch;
  if (name == "nef_canonical" || name == "nef") return Family::nef_canonical;
  if (name == "plane") return Family::plane;
  throw ValidationError("unknown surface family '" + std::string(name) + "'");
}

std::string describe(const SurfaceModel& surface) {
  return std::visit(
      overloaded{[](const HirzebruchSurface& s) { return "F_" + str(s.e); },
                 [](const NefEffectiveCanonical& s) {
                   return "W(e=" + str(s.euler) + ",K^2=" + str(s.ksq) + ",a=" + str(s.a) + ",b=" + str(s.b) + ")";
                 },
                 [](const ProjectivePlaneDeg& s) { return "P2(d=" + str(s.d) + ")"; }},
      surface);
}

SurfaceParameters surface_parameters(const SurfaceModel& surface) {
  return std::visit(
      overloaded{
          [](const HirzebruchSurface& s) {
            if (s.e < 0) throw ValidationError("hirzebruch surface requires e >= 0, got e = " + str(s.e));
            return SurfaceParameters{s.e + 2, -s.e - 4, 4, 8, 4};
          },
          [](const NefEffectiveCanonical& s) {
            if (s.a < 1) throw ValidationError("nef_canonical requires a >= 1 (A ample), got a = " + str(s.a));
            if (s.b < 0) throw ValidationError("nef_canonical requires b >= 0 (K_W nef), got b = " + str(s.b));
            if ((s.a + s.b) % 2 != 0) {
              throw ValidationError("nef_canonical requires a + b even (adjunction: 2g - 2 = A^2 + K.A), got " +
                                    str(s.a + s.b));
            }
            const std::int64_t delta = 3 * s.euler - s.ksq;
            if (delta < 0) {
              throw ValidationError("nef_canonical requires delta = 3e(W) - K_W^2 >= 0, got " + str(delta));
            }
            return SurfaceParameters{s.a, s.b, s.euler, s.ksq, delta};
          },
          [](const ProjectivePlaneDeg& s) {
            if (s.d < 2) throw ValidationError("plane configuration requires d >= 2, got d = " + str(s.d));
            return SurfaceParameters{s.d * s.d, -3 * s.d, 3, 9, 0};
          }},
      surface);
}

std::int64_t family_min_curves(Family family) { return family == Family::plane ? 3 : 5; }

ArrangementCombinatorics::ArrangementCombinatorics(std::int64_t k, std::map<int, std::int64_t> t, bool star_property)
    : k_(k), star_(star_property) {
  if (k < 1) throw ValidationError("k must be positive, got " + str(k));
  for (const auto& [r, count] : t) {
    if (r < 2) throw ValidationError("multiplicity r = " + str(r) + " is below 2");
    if (r > k) throw ValidationError("multiplicity r = " + str(r) + " exceeds k = " + str(k));
    if (count < 0) throw ValidationError("t_" + str(r) + " = " + str(count) + " is negative");
    if (count > 0) t_.emplace(r, count);
  }
}

std::int64_t ArrangementCombinatorics::t(int r) const {
  const auto it = t_.find(r);
  return it == t_.end() ? 0 : it->second;
}

std::vector<int> ArrangementCombinatorics::support() const {
  std::vector<int> out;
  out.reserve(t_.size());
  for (const auto& entry : t_) out.push_back(entry.first);
  return out;
}

std::string describe(const ArrangementCombinatorics& combo) {
  std::ostringstream os;
  os << "k=" << combo.k() << " {";
  bool first = true;
  for (const auto& [r, count] : combo.counts()) {
    os << (first ? "" : ", ") << "t" << r << "=" << count;
    first = false;
  }
  os << "}";
  return os.str();
}

FMoments f_moments(const ArrangementCombinatorics& combo) {
  FMoments m;
  for (const auto& [r, count] : combo.counts()) {
    const Integer t(static_cast<long>(count));
    m.f0 += t;
    m.f1 += r * t;
    m.f2 += Integer(static_cast<long>(r) * r) * t;
  }
  return m;
}

Integer pair_incidence_sum(const ArrangementCombinatorics& combo) {
  Integer s;
  for (const auto& [r, count] : combo.counts()) s += Integer(static_cast<long>(r) * (r - 1)) * count;
  return s;
}

std::int64_t CurveProfile::count(int r) const {
  const auto it = r_profile.find(r);
  return it == r_profile.end() ? 0 : it->second;
}

std::int64_t CurveProfile::singular_points() const {
  std::int64_t s = 0;
  for (const auto& entry : r_profile) s += entry.second;
  return s;
}

std::int64_t CurveProfile::essential_points() const { return singular_points() - double_points(); }

std::int64_t CurveProfile::double_points() const { return count(2); }

bool ValidationReport::ok() const {
  return std::none_of(rules.begin(), rules.end(),
                      [](const RuleOutcome& r) { return !r.passed && r.severity == Severity::error; });
}

const RuleOutcome* ValidationReport::find(std::string_view rule) const {
  for (const auto& r : rules) {
    if (r.rule == rule) return &r;
  }
  return nullptr;
}

std::vector<std::string> ValidationReport::failed_rules() const {
  std::vector<std::string> out;
  for (const auto& r : rules) {
    if (!r.passed) out.push_back(r.rule);
  }
  return out;
}

ValidationReport validate_combinatorics(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                        Strictness strictness) {
  ValidationReport report;
  const Family family = family_of(surface);
  const SurfaceParameters p = surface_parameters(surface);
  const std::int64_t k = combo.k();

  {
    const Integer lhs = Integer(static_cast<long>(p.a)) * Integer(static_cast<long>(k * k - k));
    const FMoments m = f_moments(combo);
    const Integer rhs = m.f2 - m.f1;
    report.rules.push_back({"R1", lhs == rhs, Severity::error,
                            "a(k^2-k) = " + to_string(lhs) + (lhs == rhs ? " == " : " != ") + "f2 - f1 = " +
                                to_string(rhs)});
  }

  {
    std::vector<int> offending;
    std::string bound;
    if (family == Family::hirzebruch) {
      bound = "multiplicities must stay below k-2 = " + str(k - 2);
      for (const auto& entry : combo.counts()) {
        if (entry.first >= k - 2) offending.push_back(entry.first);
      }
    } else {
      bound = "t_k must vanish (no point on all curves)";
      if (combo.t(static_cast<int>(k)) > 0) offending.push_back(static_cast<int>(k));
    }
    std::string detail = bound;
    if (!offending.empty()) {
      detail += "; offending r:";
      for (int r : offending) detail += " " + str(r);
    }
    report.rules.push_back({"R2", offending.empty(), Severity::error, detail});
  }

  {
    const std::int64_t need = family_min_curves(family);
    RuleOutcome rule{"R3", true, Severity::error, ""};
    if (k < 3) {
      rule.passed = false;
      rule.detail = "k = " + str(k) + " < 3: cover formulas degenerate";
    } else if (k < need) {
      rule.passed = false;
      rule.severity = strictness == Strictness::strict ? Severity::error : Severity::warning;
      rule.detail = "k = " + str(k) + " < " + str(need) + " required by the " + family_name(family) +
                    " family (admitted in permissive mode)";
    } else {
      rule.detail = "k = " + str(k) + " >= " + str(need);
    }
    report.rules.push_back(rule);
  }

  if (family == Family::hirzebruch) {
    const auto e = std::get<HirzebruchSurface>(surface).e;
    const Integer f0 = f_moments(combo).f0;
    const bool holds = f0 >= e + 6;
    report.rules.push_back({"R4", holds, Severity::warning,
                            "f0 = " + to_string(f0) + (holds ? " >= " : " < ") + "e + 6 = " + str(e + 6) +
                                " (holds for every realizable section arrangement)"});
  }
  return report;
}

ValidationReport validate_profiles(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                   std::span<const CurveProfile> profiles) {
  const std::int64_t k = combo.k();
  if (static_cast<std::int64_t>(profiles.size()) != k) {
    throw ValidationError("expected " + str(k) + " curve profiles, got " + str(static_cast<std::int64_t>(profiles.size())));
  }
  std::set<std::int64_t> seen;
  for (const auto& prof : profiles) {
    if (!seen.insert(prof.j).second) throw ValidationError("curve index j = " + str(prof.j) + " repeats");
    for (const auto& [r, count] : prof.r_profile) {
      if (r < 2 || r > k) throw ValidationError("curve " + str(prof.j) + ": multiplicity " + str(r) + " out of range");
      if (count < 0) throw ValidationError("curve " + str(prof.j) + ": negative count for r = " + str(r));
    }
  }

  const SurfaceParameters p = surface_parameters(surface);
  const Integer weight = Integer(static_cast<long>(p.a)) * (k - 1);
  ValidationReport report;

  std::vector<std::int64_t> bad_curves;
  Integer weight_total;
  for (const auto& prof : profiles) {
    Integer w;
    for (const auto& [r, count] : prof.r_profile) w += Integer(static_cast<long>(r - 1)) * count;
    weight_total += w;
    if (w != weight) bad_curves.push_back(prof.j);
  }
  {
    std::string detail = "each curve carries sum (r-1) r_{j,r} = a(k-1) = " + to_string(weight);
    if (!bad_curves.empty()) {
      detail += "; violated on curves:";
      for (auto j : bad_curves) detail += " " + str(j);
    }
    report.rules.push_back({"P1", bad_curves.empty(), Severity::error, detail});
  }

  std::set<int> all_r;
  for (const auto& entry : combo.counts()) all_r.insert(entry.first);
  for (const auto& prof : profiles) {
    for (const auto& entry : prof.r_profile) {
      if (entry.second != 0) all_r.insert(entry.first);
    }
  }
  std::vector<int> bad_r;
  for (int r : all_r) {
    std::int64_t s = 0;
    for (const auto& prof : profiles) s += prof.count(r);
    if (s != static_cast<std::int64_t>(r) * combo.t(r)) bad_r.push_back(r);
  }
  {
    std::string detail = "sum_j r_{j,r} = r t_r for every r";
    if (!bad_r.empty()) {
      detail += "; violated at r:";
      for (int r : bad_r) detail += " " + str(r);
    }
    report.rules.push_back({"P2", bad_r.empty(), Severity::error, detail});
  }

  {
    const Integer expected = Integer(static_cast<long>(p.a)) * (k * k - k);
    const Integer pairs = pair_incidence_sum(combo);
    const bool holds = weight_total == expected && expected == pairs;
    report.rules.push_back({"P3", holds, Severity::error,
                            "sum_j sum_r (r-1) r_{j,r} = " + to_string(weight_total) + ", a(k^2-k) = " +
                                to_string(expected) + ", sum r(r-1) t_r = " + to_string(pairs)});
  }
  return report;
}

}  // namespace hk
