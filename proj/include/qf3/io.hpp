#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qf3/descent.hpp"
#include "qf3/universality.hpp"

namespace qf3 {

using Json = nlohmann::ordered_json;

Json to_json(const Vec3i& v);
Json to_json(const UniversalityReport& r);
Json to_json(const SuiteEntry& e);
Json to_json(const ScaledIsometry& e);
Json to_json(const PipelineResult& r);
Json to_json(const DescentResult& r);
Json to_json(const EscapeResult& r);

/// Whole catalog, matrices as "p/q" strings.
Json catalog_json();

/// Drops every "elapsed_ms" key, recursively; what remains is deterministic.
Json strip_timing(Json j);

std::string csv_header_report();
std::string csv_row(const UniversalityReport& r, const std::string& id = {}, const std::string& status = {});

}  // namespace qf3
