#include "hkcover/serialize.hpp"

#include <fstream>
#include <sstream>

#include "hkcover/errors.hpp"

namespace hk {

namespace {

std::string where(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError("'" + (path.empty() ? std::string("<root>") : path) + "' must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing field '" + where(path, key) + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw SchemaError("field '" + name + "' must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t get_int(const json& obj, const std::string& key, const std::string& path) {
  return as_int(require(obj, key, path), where(path, key));
}

std::optional<std::int64_t> opt_int(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) return std::nullopt;
  return as_int(obj.at(key), where(path, key));
}

bool opt_bool(const json& obj, const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) throw SchemaError("field '" + key + "' must be a boolean");
  return obj.at(key).get<bool>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw SchemaError("field '" + where(path, key) + "' must be a string");
  return v.get<std::string>();
}

IntRange get_range(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  const std::string name = where(path, key);
  if (!v.is_array() || v.size() != 2) throw SchemaError("field '" + name + "' must be [lo, hi]");
  return IntRange{as_int(v[0], name + "[0]"), as_int(v[1], name + "[1]")};
}

std::map<int, std::int64_t> parse_counts(const json& v, const std::string& name) {
  if (!v.is_object()) throw SchemaError("field '" + name + "' must be an object keyed by multiplicity");
  std::map<int, std::int64_t> out;
  for (const auto& [key, count] : v.items()) {
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError("field '" + name + "' has non-integer key '" + key + "'");
    }
    out[r] = as_int(count, name + "." + key);
  }
  return out;
}

json counts_json(const std::map<int, std::int64_t>& counts) {
  json out = json::object();
  for (const auto& [r, c] : counts) out[std::to_string(r)] = c;
  return out;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string severity_name(Severity s) { return s == Severity::error ? "error" : "warning"; }

}  // namespace

json json_integer(const Integer& value) {
  if (fits_json_number(value)) return json(value.get_si());
  return json(to_string(value));
}

json json_rational(const Rational& value) { return json(to_string(value)); }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

ArrangementInput parse_arrangement(const json& doc) {
  const json& s = require(doc, "surface", "");
  const std::string type = get_string(s, "type", "surface");
  SurfaceModel surface;
  if (type == "hirzebruch") {
    surface = HirzebruchSurface{get_int(s, "e", "surface")};
  } else if (type == "nef_canonical") {
    surface = NefEffectiveCanonical{get_int(s, "euler", "surface"), get_int(s, "ksq", "surface"),
                                    get_int(s, "a", "surface"), get_int(s, "b", "surface")};
  } else if (type == "plane") {
    surface = ProjectivePlaneDeg{get_int(s, "d", "surface")};
  } else {
    throw SchemaError("field 'surface.type' must be hirzebruch, nef_canonical or plane, got '" + type + "'");
  }
  const std::int64_t k = get_int(doc, "k", "");
  const auto counts = parse_counts(require(doc, "t", ""), "t");
  ArrangementInput input{surface, ArrangementCombinatorics(k, counts, opt_bool(doc, "star_property", false)), {}};
  if (doc.contains("profiles")) {
    const json& arr = doc.at("profiles");
    if (!arr.is_array()) throw SchemaError("field 'profiles' must be an array");
    std::vector<CurveProfile> profiles;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "profiles[" + std::to_string(i) + "]";
      CurveProfile prof;
      prof.j = get_int(arr[i], "j", path);
      prof.r_profile = parse_counts(require(arr[i], "r_profile", path), path + ".r_profile");
      profiles.push_back(std::move(prof));
    }
    input.profiles = std::move(profiles);
  }
  return input;
}

NormalCrossingModel parse_model(const json& doc) {
  const std::int64_t k = get_int(doc, "k", "");
  const json& base = require(doc, "base", "");
  const json& comps = require(doc, "components", "");
  if (!comps.is_array()) throw SchemaError("field 'components' must be an array");
  std::vector<NcComponent> components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "components[" + std::to_string(i) + "]";
    NcComponent c;
    c.id = get_string(comps[i], "id", path);
    c.euler = get_int(comps[i], "euler", path);
    c.self_int = get_int(comps[i], "self_int", path);
    c.k_deg = get_int(comps[i], "k_deg", path);
    c.exceptional = opt_bool(comps[i], "exceptional", false);
    components.push_back(std::move(c));
  }
  std::vector<NcCrossing> crossings;
  if (doc.contains("pairwise")) {
    const json& pw = doc.at("pairwise");
    if (!pw.is_array()) throw SchemaError("field 'pairwise' must be an array");
    for (std::size_t i = 0; i < pw.size(); ++i) {
      const std::string name = "pairwise[" + std::to_string(i) + "]";
      const json& e = pw[i];
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
        throw SchemaError("field '" + name + "' must be [\"idA\", \"idB\", count]");
      }
      crossings.push_back({e[0].get<std::string>(), e[1].get<std::string>(), as_int(e[2], name + "[2]")});
    }
  }
  return NormalCrossingModel(k, get_int(base, "euler", "base"), get_int(base, "ksq", "base"), std::move(components),
                             crossings);
}

SearchSpec parse_search_spec(const json& doc) {
  SearchSpec spec;
  try {
    spec.mode = parse_search_mode(get_string(doc, "mode", ""));
  } catch (const ValidationError& e) {
    throw SchemaError(std::string("field 'mode': ") + e.what());
  }
  try {
    spec.family = parse_family(get_string(doc, "family", ""));
  } catch (const ValidationError& e) {
    throw SchemaError(std::string("field 'family': ") + e.what());
  }
  switch (spec.family) {
    case Family::hirzebruch:
      spec.param_range = get_range(doc, "e_range", "");
      break;
    case Family::plane:
      spec.param_range = get_range(doc, "d_range", "");
      break;
    case Family::nef_canonical:
      spec.a_range = get_range(doc, "a_range", "");
      spec.b_range = get_range(doc, "b_range", "");
      spec.euler = get_int(doc, "euler", "");
      spec.ksq = get_int(doc, "ksq", "");
      break;
  }
  spec.k_range = get_range(doc, "k_range", "");
  if (doc.contains("n")) {
    const json& ns = doc.at("n");
    if (!ns.is_array()) throw SchemaError("field 'n' must be an array of exponents");
    for (std::size_t i = 0; i < ns.size(); ++i) spec.n_set.push_back(as_int(ns[i], "n[" + std::to_string(i) + "]"));
  }
  if (doc.contains("caps")) {
    const json& caps = doc.at("caps");
    if (auto v = opt_int(caps, "max_sum", "caps")) spec.limits.max_sum = *v;
    if (auto v = opt_int(caps, "max_count", "caps")) spec.limits.max_count = static_cast<std::uint64_t>(*v);
    if (auto v = opt_int(caps, "time_budget_ms", "caps")) spec.limits.time_budget = std::chrono::milliseconds(*v);
    if (spec.limits.max_sum <= 0 || (caps.contains("max_count") && spec.limits.max_count == 0)) {
      throw SchemaError("field 'caps' must hold positive caps");
    }
  }
  if (auto w = opt_int(doc, "workers", "")) {
    if (*w < 1) throw SchemaError("field 'workers' must be positive");
    spec.workers = static_cast<unsigned>(*w);
  }
  return spec;
}

json to_json(const SurfaceModel& surface) {
  json out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HirzebruchSurface>) {
          out = {{"type", "hirzebruch"}, {"e", s.e}};
        } else if constexpr (std::is_same_v<T, NefEffectiveCanonical>) {
          out = {{"type", "nef_canonical"}, {"euler", s.euler}, {"ksq", s.ksq}, {"a", s.a}, {"b", s.b}};
        } else {
          out = {{"type", "plane"}, {"d", s.d}};
        }
      },
      surface);
  return out;
}

json to_json(const SurfaceParameters& p) {
  return {{"a", p.a}, {"b", p.b}, {"euler", p.euler}, {"ksq", p.ksq}, {"delta", p.delta}};
}

json to_json(const ArrangementCombinatorics& combo) {
  return {{"k", combo.k()}, {"t", counts_json(combo.counts())}};
}

json to_json(const ValidationReport& report) {
  json rules = json::array();
  for (const auto& r : report.rules) {
    rules.push_back({{"rule", r.rule}, {"passed", r.passed}, {"severity", severity_name(r.severity)}, {"detail", r.detail}});
  }
  return {{"ok", report.ok()}, {"rules", rules}};
}

json to_json(const ChernInvariants& inv) {
  return {{"n", inv.n},
          {"k", inv.k},
          {"scaled_c2", json_rational(inv.scaled_c2)},
          {"scaled_c1sq", json_rational(inv.scaled_c1sq)},
          {"total_c2", json_integer(inv.total_c2)},
          {"total_c1sq", json_integer(inv.total_c1sq)},
          {"bmy_gap_scaled", json_rational(inv.bmy_gap_scaled)}};
}

json to_json(const HirzebruchQuadratic& h) {
  return {{"c2", json_rational(h.c2)}, {"c1", json_rational(h.c1)}, {"c0", json_rational(h.c0)}};
}

json to_json(const ApplicabilityReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out = {{"status", to_string(report.status)}, {"checks", checks}};
  if (!report.curve_count_source.empty()) out["curve_count_source"] = report.curve_count_source;
  if (report.floor_bound) out["floor_bound"] = json_rational(*report.floor_bound);
  if (report.exceptional_coefficient_bound) {
    out["exceptional_coefficient_bound"] = json_rational(*report.exceptional_coefficient_bound);
  }
  if (report.strict_transform_coefficient_bound) {
    out["strict_transform_coefficient_bound"] = json_rational(*report.strict_transform_coefficient_bound);
  }
  if (!report.curves.empty()) {
    json curves = json::array();
    for (const auto& c : report.curves) {
      json entry = {{"j", c.j}, {"singular_points", c.singular_points}, {"lower_bound", json_rational(c.lower_bound)}};
      if (c.exact) entry["exact"] = json_rational(*c.exact);
      curves.push_back(entry);
    }
    out["curves"] = curves;
  }
  return out;
}

json to_json(const FilterResult& result) {
  return {{"passed", result.passed}, {"admissible_r", result.admissible_r}, {"offending", result.offending}};
}

json to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"relation", s.relation},
                     {"anchor", s.anchor},
                     {"method", s.method},
                     {"verified", s.verified},
                     {"detail", s.detail}});
  }
  json out = {{"id", cert.id},
              {"family", cert.family},
              {"parameters", cert.parameters},
              {"n", cert.n},
              {"steps", steps},
              {"conclusion",
               {{"relation", cert.conclusion.relation},
                {"verdict", cert.conclusion.verdict},
                {"contradiction", cert.conclusion.contradiction}}},
              {"valid", cert.valid}};
  if (cert.grid.ran) {
    out["grid"] = {{"domain", cert.grid.domain},
                   {"cases", cert.grid.cases},
                   {"counterexamples", cert.grid.counterexamples},
                   {"early_witnesses", cert.grid.early_witnesses}};
  }
  return out;
}

json to_json(const NormalCrossingModel& model) {
  json comps = json::array();
  for (const auto& c : model.components()) {
    comps.push_back({{"id", c.id},
                     {"euler", c.euler},
                     {"self_int", c.self_int},
                     {"k_deg", c.k_deg},
                     {"exceptional", c.exceptional}});
  }
  json pairwise = json::array();
  for (const auto& x : model.crossing_list()) pairwise.push_back(json::array({x.first, x.second, x.count}));
  return {{"k", model.k()},
          {"base", {{"euler", model.base_euler()}, {"ksq", model.base_ksq()}}},
          {"components", comps},
          {"pairwise", pairwise}};
}

json to_json(const LemmaReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    json ce = json::array();
    for (const auto& x : c.counterexamples) ce.push_back(to_json(x));
    json cell = {{"e", c.e},
                 {"k", c.k},
                 {"target", c.target},
                 {"enumerated", c.enumerated},
                 {"side_condition_holds", c.side_condition_holds},
                 {"counterexamples", ce},
                 {"complete", c.complete}};
    if (!c.complete) cell["stop_reason"] = c.stop_reason;
    cells.push_back(cell);
  }
  return {{"mode", "lemma_f0"},
          {"claim", "f0 >= e + 6"},
          {"assumed_side_conditions", report.assumed_side_conditions},
          {"cells", cells},
          {"complete", report.complete},
          {"valid", report.valid}};
}

json to_json(const ScanReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    json hits = json::array();
    for (const auto& h : c.hits) {
      hits.push_back({{"combinatorics", to_json(h.combo)}, {"matches_forced_counts", h.matches_forced_counts}});
    }
    json cell = {{"surface", to_json(c.surface)},
                 {"k", c.k},
                 {"n", c.n},
                 {"target", c.target},
                 {"multiplicities", c.multiplicities},
                 {"enumerated", c.enumerated},
                 {"hits", hits},
                 {"complete", c.complete},
                 {"certificate", {{"id", c.certificate_id}, {"valid", c.certificate_valid}}}};
    if (!c.complete) cell["stop_reason"] = c.stop_reason;
    if (c.double_sixfold) {
      const auto& d = *c.double_sixfold;
      cell["double_sixfold"] = {{"t2", json_rational(d.t2)},
                                {"t6", json_rational(d.t6)},
                                {"feasible", d.feasible},
                                {"enumerated", d.enumerated},
                                {"forced_gap", json_integer(d.forced_gap)}};
    }
    cells.push_back(cell);
  }
  return {{"mode", "theorem_scan"}, {"cells", cells}, {"complete", report.complete}, {"valid", report.valid}};
}

json to_json(const GapTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row = {{"surface", to_json(r.surface)},
                {"k", r.k},
                {"n", r.n},
                {"target", r.target},
                {"filter", r.filtered ? "admissible" : "none"},
                {"enumerated", r.enumerated},
                {"complete", r.complete}};
    if (r.min_gap) {
      row["min_gap"] = json_integer(*r.min_gap);
      row["witness"] = to_json(*r.witness);
    } else {
      row["min_gap"] = nullptr;
      row["note"] = "no feasible combinatorics";
    }
    if (!r.complete) row["stop_reason"] = r.stop_reason;
    rows.push_back(row);
  }
  return {{"mode", "gap_minimum"}, {"rows", rows}, {"complete", table.complete}};
}

std::string to_csv(const LemmaReport& report) {
  std::ostringstream os;
  os << "e,k,target,enumerated,side_condition_holds,counterexamples,complete\n";
  for (const auto& c : report.cells) {
    os << c.e << ',' << c.k << ',' << c.target << ',' << c.enumerated << ',' << c.side_condition_holds << ','
       << c.counterexamples.size() << ',' << (c.complete ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "surface,k,n,target,enumerated,hits,complete,certificate,certificate_valid,forced_t2,forced_t6,forced_feasible\n";
  for (const auto& c : report.cells) {
    os << csv_field(describe(c.surface)) << ',' << c.k << ',' << c.n << ',' << c.target << ',' << c.enumerated << ','
       << c.hits.size() << ',' << (c.complete ? "true" : "false") << ',' << csv_field(c.certificate_id) << ','
       << (c.certificate_valid ? "true" : "false") << ',';
    if (c.double_sixfold) {
      os << to_string(c.double_sixfold->t2) << ',' << to_string(c.double_sixfold->t6) << ','
         << (c.double_sixfold->feasible ? "true" : "false");
    } else {
      os << ",,";
    }
    os << '\n';
  }
  return os.str();
}

std::string to_csv(const GapTable& table) {
  std::ostringstream os;
  os << "surface,k,n,target,filter,enumerated,min_gap,witness,complete\n";
  for (const auto& r : table.rows) {
    os << csv_field(describe(r.surface)) << ',' << r.k << ',' << r.n << ',' << r.target << ','
       << (r.filtered ? "admissible" : "none") << ',' << r.enumerated << ',';
    if (r.min_gap) {
      os << to_string(*r.min_gap) << ',' << csv_field(describe(*r.witness));
    } else {
      os << "," << "no feasible combinatorics";
    }
    os << ',' << (r.complete ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace hk
