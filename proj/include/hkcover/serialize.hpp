#pragma once

// JSON (and CSV) forms of every input and report. Object keys come out sorted, rationals
// as canonical "p/q" strings, integers as numbers only inside the 53-bit safe range.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hkcover/arrangements.hpp"
#include "hkcover/ball_quotient.hpp"
#include "hkcover/invariants.hpp"
#include "hkcover/nc_cover.hpp"
#include "hkcover/search.hpp"

namespace hk {

using json = nlohmann::json;

/// Input document that does not match its schema; the message names the field.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json json_integer(const Integer& value);
json json_rational(const Rational& value);

struct ArrangementInput {
  SurfaceModel surface;
  ArrangementCombinatorics combo;
  std::optional<std::vector<CurveProfile>> profiles;
};

ArrangementInput parse_arrangement(const json& doc);
NormalCrossingModel parse_model(const json& doc);
SearchSpec parse_search_spec(const json& doc);

/// Reads and parses a JSON file; throws SchemaError on I/O or syntax failure.
json load_json_file(const std::string& path);

json to_json(const SurfaceModel& surface);
json to_json(const SurfaceParameters& params);
json to_json(const ArrangementCombinatorics& combo);
json to_json(const ValidationReport& report);
json to_json(const ChernInvariants& inv);
json to_json(const HirzebruchQuadratic& h);
json to_json(const ApplicabilityReport& report);
json to_json(const FilterResult& result);
json to_json(const Certificate& cert);
json to_json(const NormalCrossingModel& model);
json to_json(const LemmaReport& report);
json to_json(const ScanReport& report);
json to_json(const GapTable& table);

std::string to_csv(const LemmaReport& report);
std::string to_csv(const ScanReport& report);
std::string to_csv(const GapTable& table);

}  // namespace hk
