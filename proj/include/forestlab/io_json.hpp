#pragma once

#include <json.hpp>

#include "forestlab/codes.hpp"
#include "forestlab/genfun.hpp"
#include "forestlab/multipoly.hpp"
#include "forestlab/statistics.hpp"
#include "forestlab/verify.hpp"

namespace forestlab {

// Flat JSON object; A/D-variant fields appear only when defined.
nlohmann::json stat_record_json(const StatRecord& record);

nlohmann::json code_json(const CodeSeq& code);
nlohmann::json sort_trace_json(const std::vector<SortStep>& trace);
nlohmann::json report_json(const Report& report);

// Term list sorted by exponent vector: [{coeff, q, p, t:[...]}, ...].
nlohmann::json poly_json(const MultiPoly& poly);

}  // namespace forestlab
