#pragma once

// JSON and CSV forms of models, operators, campaigns and reports. Parsing is
// strict: unknown keys and wrong types raise parse_error. Complex numbers are
// [re, im] pairs.

#include <string>

#include <json.hpp>

#include "berezin/verification_harness.hpp"

namespace berezin::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);
void write_text_file(const std::string& path, const std::string& text);

Complex complex_from_json(const Json& j);
Json to_json(Complex z);

Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// {"matrix": [[[re, im], ...], ...]} or {"blocks": [[matrix, ...], ...]}.
Operator operator_from_json(const Json& j);
Json to_json(const Operator& a);

/// {"kind": "standard", "n": 2}
/// {"kind": "hardy", "N": 64, "radii": [...], "angles": 32}
/// {"kind": "onb", "evaluations": matrix}   rows basis functions, columns points
/// {"kind": "direct_sum", "n": 2, "copies": 2, "weight_steps": 5, "phase_steps": 8}
/// Omitted hardy fields take the default model's values.
ModelSpec model_spec_from_json(const Json& j);
Json to_json(const ModelSpec& spec);

ParamGrids grids_from_json(const Json& j);
Json to_json(const ParamGrids& g);

/// Every field optional; omitted fields keep their defaults.
CampaignConfig campaign_from_json(const Json& j);
Json to_json(const CampaignConfig& c);

/// {"orlicz": {"kind": "power", "r": 2}} or {"orlicz": {"kind": "hinge"}}
OrliczFn orlicz_from_json(const Json& j);
Json to_json(const OrliczFn& phi);
/// {"pair": {"s": 0.5}}
PowerPair pair_from_json(const Json& j);
Json to_json(const PowerPair& pair);
/// {"weight": {"alpha": 1.0}}
WeightFn weight_from_json(const Json& j);
Json to_json(const WeightFn& f);

Json to_json(const Failure& f);
Json to_json(const SuiteReport& r);
/// One row per tightness key: key,role,count,min_slack,mean_slack,improve_count,improve_frac.
std::string suite_csv(const SuiteReport& r);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double x);
/// 12 significant digits.
std::string format_text(double x);

}  // namespace berezin::io
