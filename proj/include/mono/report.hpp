#pragma once

#include <json.hpp>

#include "mono/bounds.hpp"
#include "mono/indet.hpp"
#include "mono/mixedvol.hpp"
#include "mono/search.hpp"

namespace mono {

// All reports use one JSON dialect: objects key-sorted (nlohmann default),
// integers as JSON numbers when they fit in 64 bits and as decimal strings
// otherwise, rationals always as "p/q" strings.

nlohmann::json json_int(const Int& v);
nlohmann::json json_rat(const Rat& v);
nlohmann::json json_matrix(const IntMatrix& m);

nlohmann::json to_json(const MonomialMap& f);
nlohmann::json to_json(const IndeterminacyLocus& locus);
nlohmann::json to_json(const WitnessCover& w);
nlohmann::json to_json(const MultidegreeVector& dvec);
nlohmann::json to_json(const BoundsReport& rep);
nlohmann::json to_json(const SearchReport& rep);
nlohmann::json to_json(const GapScanResult& gaps);

/// Wraps a report body with the schema version and the echoed command line.
nlohmann::json report_document(const std::string& command, nlohmann::json body);

}  // namespace mono
