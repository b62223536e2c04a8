#pragma once

#include "toric/approx.hpp"
#include "toric/collections.hpp"
#include "toric/kleinschmidt.hpp"

#include <json.hpp>

#include <string>

namespace toric {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// {"dim": n, "rays": [[..],..], "max_cones": [[..],..]}, 0-based, bit-exact
// round trip.
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json divisor_to_json(const TDivisor& D);
TDivisor divisor_from_json(const Json& j, const Fan& fan);

// {"chart": c, "points": [[[num, den], ...], ...]}
Json points_to_json(const std::vector<RationalPoint>& pts);
std::vector<RationalPoint> points_from_json(const Json& j, const Fan& fan);

Json validation_to_json(const ValidationReport& rep);
Json positivity_to_json(const PositivityReport& rep);
Json effcone_to_json(const EffConeReport& rep);
Json collections_to_json(const Fan& fan, const TDivisor& D,
                         const CollectionsResult& cols);
Json locus_to_json(const AccumulatingLocus& locus);
Json diagnostics_to_json(const DiagnosticsReport& rep);
Json search_to_json(const SearchMin& m, const Rat& gamma);
Json accumulation_to_json(const AccumulationReport& rep);
Json slope_to_json(const SlopeEstimate& est);
Json splitting_to_json(const SplittingType& st);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace toric
