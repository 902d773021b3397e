#include <doctest.h>

#include <algorithm>

#include "hkcover/errors.hpp"
#include "hkcover/serialize.hpp"

using namespace hk;

namespace {

json arrangement_doc() {
  return json::parse(R"({
    "surface": {"type": "hirzebruch", "e": 2},
    "k": 5,
    "t": {"2": 40},
    "star_property": true
  })");
}

std::string schema_message(const json& doc) {
  try {
    (void)parse_arrangement(doc);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("integers leave the 53-bit range as strings") {
  CHECK(json_integer(Integer(42)) == json(42));
  CHECK(json_integer(ipow(Integer(3), 40)) == json("12157665459056928801"));
  CHECK(json_rational(Rational(-6, 4)) == json("-3/2"));
  CHECK(json_rational(Rational(5)) == json("5/1"));
}

TEST_CASE("arrangement documents") {
  const ArrangementInput in = parse_arrangement(arrangement_doc());
  CHECK(std::get<HirzebruchSurface>(in.surface).e == 2);
  CHECK(in.combo == ArrangementCombinatorics(5, {{2, 40}}, true));
  CHECK_FALSE(in.profiles.has_value());

  json with_profiles = arrangement_doc();
  with_profiles["profiles"] = json::array();
  for (int j = 1; j <= 5; ++j) with_profiles["profiles"].push_back({{"j", j}, {"r_profile", {{"2", 16}}}});
  const ArrangementInput p = parse_arrangement(with_profiles);
  REQUIRE(p.profiles.has_value());
  CHECK(p.profiles->size() == 5);
  CHECK(p.profiles->at(2).count(2) == 16);

  const json nef = json::parse(R"({"surface": {"type": "nef_canonical", "euler": 0, "ksq": 0, "a": 2, "b": 0},
                                   "k": 5, "t": {"2": 20}})");
  CHECK(std::get<NefEffectiveCanonical>(parse_arrangement(nef).surface).a == 2);
  CHECK_FALSE(parse_arrangement(nef).combo.star_property());
}

TEST_CASE("schema errors name the field") {
  json doc = arrangement_doc();
  doc.erase("k");
  CHECK(schema_message(doc).find("'k'") != std::string::npos);

  doc = arrangement_doc();
  doc["surface"]["e"] = "two";
  CHECK(schema_message(doc).find("'surface.e'") != std::string::npos);

  doc = arrangement_doc();
  doc["surface"]["type"] = "torus";
  CHECK(schema_message(doc).find("surface.type") != std::string::npos);

  doc = arrangement_doc();
  doc["t"] = {{"two", 40}};
  CHECK(schema_message(doc).find("'t'") != std::string::npos);

  doc = arrangement_doc();
  doc["t"]["2"] = 40.5;
  CHECK(schema_message(doc).find("'t.2'") != std::string::npos);

  doc = arrangement_doc();
  doc["profiles"] = json::array({{{"j", 1}}});
  CHECK(schema_message(doc).find("profiles[0].r_profile") != std::string::npos);

  doc = arrangement_doc();
  doc["t"]["9"] = 1;  // structural, not a schema problem
  CHECK_THROWS_AS(parse_arrangement(doc), ValidationError);
}

TEST_CASE("model documents") {
  const json doc = json::parse(R"({
    "k": 2, "base": {"euler": 3, "ksq": 9},
    "components": [{"id": "A", "euler": 2, "self_int": 1, "k_deg": -3},
                   {"id": "B", "euler": 2, "self_int": 1, "k_deg": -3}],
    "pairwise": [["A", "B", 1]]
  })");
  const NormalCrossingModel m = parse_model(doc);
  CHECK(m.total_double_points() == 1);
  CHECK(to_json(m)["pairwise"] == json::array({json::array({"A", "B", 1})}));

  json bad = doc;
  bad["pairwise"] = json::array({json::array({"A", "B"})});
  CHECK_THROWS_WITH_AS(parse_model(bad), doctest::Contains("pairwise[0]"), SchemaError);
  bad = doc;
  bad["components"][1].erase("k_deg");
  CHECK_THROWS_WITH_AS(parse_model(bad), doctest::Contains("components[1].k_deg"), SchemaError);
}

TEST_CASE("search spec documents") {
  const SearchSpec spec = parse_search_spec(json::parse(R"({
    "mode": "theorem_scan", "family": "plane", "d_range": [2, 3], "k_range": [5, 12], "n": [2, 3, 5],
    "caps": {"max_sum": 5000, "time_budget_ms": 1000}, "workers": 2
  })"));
  CHECK(spec.family == Family::plane);
  CHECK(spec.param_range.hi == 3);
  CHECK(spec.n_set == std::vector<std::int64_t>{2, 3, 5});
  CHECK(spec.limits.max_sum == 5000);
  CHECK(spec.limits.time_budget.count() == 1000);
  CHECK(spec.workers == 2);

  const SearchSpec nef = parse_search_spec(json::parse(R"({
    "mode": "gap_minimum", "family": "nef", "a_range": [1, 2], "b_range": [0, 1], "euler": 12, "ksq": 12,
    "k_range": [5, 6], "n": [4]
  })"));
  CHECK(nef.family == Family::nef_canonical);
  // (1, 0) and (2, 1) have a + b odd and are skipped
  CHECK(search_surfaces(nef).size() == 2);

  CHECK_THROWS_WITH_AS(parse_search_spec(json::parse(R"({"mode": "fast", "family": "plane"})")),
                       doctest::Contains("'mode'"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_search_spec(json::parse(R"({"mode": "theorem_scan", "family": "plane",
                                                         "d_range": [2], "k_range": [5, 6]})")),
                       doctest::Contains("'d_range'"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_search_spec(json::parse(R"({"mode": "theorem_scan", "family": "plane",
                                                         "d_range": [2, 3], "k_range": [5, 6], "workers": 0})")),
                       doctest::Contains("'workers'"), SchemaError);
}

TEST_CASE("reports serialize deterministically with sorted keys") {
  const Certificate c = certify_nonexistence(FamilyPattern{Family::plane, true, {}, {}, {}, {}, {}}, 3,
                                             GridOptions{true, 2, 4, 1, 1, 1, 5, 12, 1, 1});
  const std::string first = to_json(c).dump();
  CHECK(first == to_json(c).dump());
  const json parsed = json::parse(first);
  std::string prev;
  for (const auto& [key, value] : parsed.items()) {
    CHECK(prev < key);
    prev = key;
  }
  CHECK(parsed["valid"] == true);

  const ChernInvariants inv = cover_chern(ProjectivePlaneDeg{3}, ArrangementCombinatorics(30, {{2, 3915}}), 7);
  const json j = to_json(inv);
  CHECK(j["total_c2"].is_string());
  CHECK(j["scaled_c2"].is_string());
  CHECK(parse_integer(j["total_c2"].get<std::string>()) == inv.total_c2);
}

TEST_CASE("csv has a header and one row per cell") {
  const LemmaReport r = verify_lemma_f0({2, 2}, {5, 7});
  const std::string csv = to_csv(r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.rfind("e,k,target,", 0) == 0);
}
