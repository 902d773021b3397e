#include "hkcover/nc_cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hkcover/errors.hpp"

namespace hk {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

struct ModelSums {
  Integer euler_open;      // e(Z - D)
  Integer euler_strata;    // sum_j e(D_j) - (crossings on D_j)
  Integer crossings;       // N
  Integer canonical_degree;  // K_Z . D
  Integer divisor_square;    // D^2
};

ModelSums sums(const NormalCrossingModel& model) {
  ModelSums s;
  s.crossings = Integer(static_cast<long>(model.total_double_points()));
  Integer euler_total;
  Integer self_total;
  for (const auto& comp : model.components()) {
    euler_total += comp.euler;
    self_total += comp.self_int;
    s.canonical_degree += comp.k_deg;
  }
  // Each crossing removes one point from each of the two components it lies on.
  s.euler_strata = euler_total - 2 * s.crossings;
  s.euler_open = model.base_euler() - euler_total + s.crossings;
  s.divisor_square = self_total + 2 * s.crossings;
  return s;
}

void require_cover_domain(const NormalCrossingModel& model, std::int64_t n) {
  if (n < 2) throw DomainError("exponent n must be >= 2, got " + str(n));
  if (model.k() < 3) {
    throw ModelInconsistencyError("k = " + str(model.k()) + " < 3 leaves n^(k-3) fractional");
  }
}

}  // namespace

NormalCrossingModel::NormalCrossingModel(std::int64_t k, std::int64_t base_euler, std::int64_t base_ksq,
                                         std::vector<NcComponent> components, const std::vector<NcCrossing>& crossings)
    : k_(k), base_euler_(base_euler), base_ksq_(base_ksq), components_(std::move(components)) {
  if (k < 1) throw ValidationError("model k must be positive, got " + str(k));
  std::map<std::string, std::size_t> index;
  std::int64_t branch_curves = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.id.empty()) throw ValidationError("component " + str(static_cast<std::int64_t>(i)) + " has an empty id");
    if (!index.emplace(c.id, i).second) throw ValidationError("component id '" + c.id + "' repeats");
    const std::int64_t adj = c.self_int + c.k_deg;
    if (adj % 2 != 0) {
      throw ValidationError("component '" + c.id + "': D^2 + K.D = " + str(adj) + " is odd, genus not integral");
    }
    if (c.euler != -adj) {
      throw ValidationError("component '" + c.id + "' fails adjunction: e = " + str(c.euler) + " but -(D^2 + K.D) = " +
                            str(-adj));
    }
    if (!c.exceptional) ++branch_curves;
  }
  if (branch_curves != k) {
    throw ValidationError("model lists " + str(branch_curves) + " non-exceptional components but k = " + str(k));
  }
  std::set<std::pair<std::size_t, std::size_t>> listed;
  for (const auto& x : crossings) {
    const auto a = index.find(x.first);
    const auto b = index.find(x.second);
    if (a == index.end()) throw ValidationError("crossing names unknown component '" + x.first + "'");
    if (b == index.end()) throw ValidationError("crossing names unknown component '" + x.second + "'");
    if (a->second == b->second) throw ValidationError("crossing of '" + x.first + "' with itself");
    if (x.count < 0) throw ValidationError("negative crossing count between '" + x.first + "' and '" + x.second + "'");
    const auto key = std::minmax(a->second, b->second);
    if (!listed.insert(key).second) {
      throw ValidationError("crossing '" + x.first + "'/'" + x.second + "' listed twice");
    }
    if (x.count > 0) crossings_.emplace(key, x.count);
  }
}

std::int64_t NormalCrossingModel::total_double_points() const {
  std::int64_t n = 0;
  for (const auto& entry : crossings_) n += entry.second;
  return n;
}

std::int64_t NormalCrossingModel::double_points_on(std::size_t component) const {
  std::int64_t n = 0;
  for (const auto& [key, count] : crossings_) {
    if (key.first == component || key.second == component) n += count;
  }
  return n;
}

std::vector<NcCrossing> NormalCrossingModel::crossing_list() const {
  std::vector<NcCrossing> out;
  out.reserve(crossings_.size());
  for (const auto& [key, count] : crossings_) {
    out.push_back({components_[key.first].id, components_[key.second].id, count});
  }
  return out;
}

namespace {

struct Incidences {
  // For each essential point: the curves through it.
  std::vector<std::pair<int, std::vector<std::size_t>>> essential;
  // Crossing counts between strict transforms, keyed (i, j) with i < j.
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> doubles;
};

Incidences spread_cyclically(const ArrangementCombinatorics& combo) {
  Incidences inc;
  const auto k = static_cast<std::size_t>(combo.k());
  std::size_t start = 0;
  for (auto it = combo.counts().rbegin(); it != combo.counts().rend(); ++it) {
    const auto [r, count] = *it;
    if (r < 3) continue;
    for (std::int64_t p = 0; p < count; ++p) {
      std::vector<std::size_t> curves;
      for (int i = 0; i < r; ++i) curves.push_back((start + static_cast<std::size_t>(i)) % k);
      start = (start + static_cast<std::size_t>(r)) % k;
      inc.essential.emplace_back(r, std::move(curves));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  const std::int64_t t2 = combo.t(2);
  for (std::int64_t p = 0; p < t2 && !pairs.empty(); ++p) {
    ++inc.doubles[pairs[static_cast<std::size_t>(p) % pairs.size()]];
  }
  return inc;
}

Incidences realize_profiles(const ArrangementCombinatorics& combo, std::span<const CurveProfile> profiles) {
  Incidences inc;
  const std::size_t k = profiles.size();
  for (auto it = combo.counts().rbegin(); it != combo.counts().rend(); ++it) {
    const auto [r, count] = *it;
    if (r < 3) continue;
    std::vector<std::int64_t> remaining(k);
    for (std::size_t j = 0; j < k; ++j) remaining[j] = profiles[j].count(r);
    for (std::int64_t p = 0; p < count; ++p) {
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t x, std::size_t y) { return remaining[x] > remaining[y]; });
      std::vector<std::size_t> curves(order.begin(), order.begin() + r);
      for (std::size_t j : curves) {
        if (remaining[j] <= 0) {
          throw ValidationError("profiles cannot be realized: too few curves left for an " + std::to_string(r) +
                                "-fold point");
        }
        --remaining[j];
      }
      std::sort(curves.begin(), curves.end());
      inc.essential.emplace_back(r, std::move(curves));
    }
  }
  std::vector<std::int64_t> remaining(k);
  for (std::size_t j = 0; j < k; ++j) remaining[j] = profiles[j].count(2);
  while (true) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return remaining[x] > remaining[y]; });
    if (remaining[order[0]] == 0) break;
    if (k < 2 || remaining[order[1]] == 0) {
      throw ValidationError("profiles cannot be realized: double points left on a single curve");
    }
    --remaining[order[0]];
    --remaining[order[1]];
    ++inc.doubles[std::minmax(order[0], order[1])];
  }
  return inc;
}

}  // namespace

NormalCrossingModel blowup_homogeneous(const SurfaceModel& surface, const ArrangementCombinatorics& combo,
                                       std::optional<std::span<const CurveProfile>> profiles) {
  ValidationReport report = validate_combinatorics(surface, combo, Strictness::permissive);
  if (const RuleOutcome* r1 = report.find("R1"); r1 != nullptr && !r1->passed) {
    throw RejectedInput("combinatorics fail R1: " + r1->detail, std::move(report));
  }
  const SurfaceParameters p = surface_parameters(surface);

  Incidences inc;
  if (profiles) {
    const ValidationReport pr = validate_profiles(surface, combo, *profiles);
    if (!pr.ok()) {
      std::string failed;
      for (const auto& r : pr.failed_rules()) failed += " " + r;
      throw ValidationError("profile inconsistency:" + failed);
    }
    inc = realize_profiles(combo, *profiles);
  } else {
    inc = spread_cyclically(combo);
  }

  const auto k = static_cast<std::size_t>(combo.k());
  std::vector<std::int64_t> essential_on(k, 0);
  for (const auto& point : inc.essential) {
    for (std::size_t j : point.second) ++essential_on[j];
  }

  std::vector<NcComponent> comps;
  comps.reserve(k + inc.essential.size());
  for (std::size_t j = 0; j < k; ++j) {
    comps.push_back({"C" + std::to_string(j + 1), -(p.a + p.b), p.a - essential_on[j], p.b + essential_on[j], false});
  }
  std::vector<NcCrossing> crossings;
  for (const auto& [key, count] : inc.doubles) {
    crossings.push_back({comps[key.first].id, comps[key.second].id, count});
  }
  for (std::size_t e = 0; e < inc.essential.size(); ++e) {
    const std::string id = "E" + std::to_string(e + 1);
    comps.push_back({id, 2, -1, -1, true});
    for (std::size_t j : inc.essential[e].second) crossings.push_back({comps[j].id, id, 1});
  }
  const auto blown_up = static_cast<std::int64_t>(inc.essential.size());
  return NormalCrossingModel(combo.k(), p.euler + blown_up, p.ksq - blown_up, std::move(comps), crossings);
}

Integer cover_euler_nc(const NormalCrossingModel& model, std::int64_t n) {
  require_cover_domain(model, n);
  const ModelSums s = sums(model);
  const Integer nn(static_cast<long>(n));
  const Integer scale = ipow(nn, static_cast<unsigned long>(model.k() - 3));
  return scale * (nn * nn * s.euler_open + nn * s.euler_strata + s.crossings);
}

Integer cover_c1sq_nc(const NormalCrossingModel& model, std::int64_t n) {
  require_cover_domain(model, n);
  const ModelSums s = sums(model);
  const Rational ratio = make_rational(Integer(static_cast<long>(n - 1)), Integer(static_cast<long>(n)));
  const Rational square =
      Rational(model.base_ksq()) + 2 * ratio * s.canonical_degree + ratio * ratio * s.divisor_square;
  const Rational total = square * Rational(ipow(Integer(static_cast<long>(n)), static_cast<unsigned long>(model.k() - 1)));
  if (!is_integral(total)) {
    throw ModelInconsistencyError("c1^2 = " + to_string(total) + " is not an integer; intersection data is invalid");
  }
  return total.get_num();
}

Quadratic<Integer> nc_gap_quadratic(const NormalCrossingModel& model) {
  const ModelSums s = sums(model);
  const Integer ksq(static_cast<long>(model.base_ksq()));
  Quadratic<Integer> q;
  q.c2 = 3 * s.euler_open - ksq - 2 * s.canonical_degree - s.divisor_square;
  q.c1 = 3 * s.euler_strata + 2 * s.canonical_degree + 2 * s.divisor_square;
  q.c0 = 3 * s.crossings - s.divisor_square;
  return q;
}

}  // namespace hk
