//
// Project     : mint
// Module      : io
// Description : JSON schemas for every domain object and the CSV sample
//               table; all output is byte-stable across runs
//
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mint/apps.hpp"
#include "mint/interp.hpp"

namespace mint {

using Json = nlohmann::json;

Json space_json(const MeasureSpace& space);
MeasureSpace space_from_json(const Json& j);

Json kernel_json(const Kernel& kernel);
Kernel kernel_from_json(const Json& j);

Json function_json(const SimpleFunction& f);
SimpleFunction function_from_json(const Json& j);

Json claim_json(const EstimateClaim& claim);

// One entry of a claims file: a tuple with an optional precomputed bound.
struct ClaimSpec {
  std::vector<double> alpha;
  std::optional<double> bound;
};

std::vector<ClaimSpec> claims_from_json(const Json& j);

Json trace_json(const ProofTrace& trace);
Json report_json(const TheoremReport& report, const ProofTrace* trace = nullptr);

Json region_json(const RegionDescription& region);
std::string region_csv(const RegionDescription& region);

Json cz_result_json(const CzCheckResult& result);

// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string render(const Json& j);

void write_text_file(const std::string& path, const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace mint
