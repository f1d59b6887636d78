#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pn/bounds.hpp"
#include "pn/curve.hpp"
#include "pn/factor.hpp"
#include "pn/pntest.hpp"

namespace pn {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Rat& r);
Json to_json(const PAdicProfile& pr);
Json to_json(const BoundReport& br);
Json to_json(const Verdict& v);
Json to_json(const SingularPoint& pt);
Json to_json(const Table1Report& rep);
Json to_json(const PNResult& r);
Json to_json(const ScanReport& rep);
Json to_json(const FactorizationResult& fr);
Json to_json(const std::vector<BandRow>& rows);

Json make_envelope(const std::string& command, Json inputs, Json outputs,
                   const std::vector<std::string>& warnings);

/// Structural validation against the subset of JSON Schema the shipped schema
/// file uses: type, required, properties, items, enum, additionalProperties.
bool validate_against_schema(const Json& doc, const Json& schema, std::string* why);

}  // namespace pn
