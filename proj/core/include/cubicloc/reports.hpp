#pragma once

#include <string>

#include <json.hpp>

#include "cubicloc/asymptotics.hpp"
#include "cubicloc/counting.hpp"
#include "cubicloc/local_solubility.hpp"
#include "cubicloc/oscillation.hpp"

// JSON encodings for every report type the CLI emits. parse(emit(x)) == x
// holds for each of them; high-precision values travel as strings carrying
// max_digits10 digits, doubles only in convenience fields.

namespace cubicloc {

using nlohmann::json;

std::string to_string(VerdictReason reason);
VerdictReason verdict_reason_from_string(const std::string& s);

std::string to_string(CountMode mode);
CountMode count_mode_from_string(const std::string& s);

void to_json(json& j, const LocalVerdict& v);
void from_json(const json& j, LocalVerdict& v);

void to_json(json& j, const LocalReport& r);
void from_json(const json& j, LocalReport& r);

void to_json(json& j, const CountResult& r);
void from_json(const json& j, CountResult& r);

void to_json(json& j, const ConstantEstimate& e);
void from_json(const json& j, ConstantEstimate& e);

void to_json(json& j, const ComparisonReport& r);
void from_json(const json& j, ComparisonReport& r);

void to_json(json& j, const OscillationSample& s);
void from_json(const json& j, OscillationSample& s);

// exact round-trip string for the 50-digit working type
std::string bigfloat_to_string(const BigFloat& v);
BigFloat bigfloat_from_string(const std::string& s);

// CSV rows for oscillation samples; all-numeric, comma separated
std::string oscillation_csv_header(bool single_variant);
std::string oscillation_csv_row(const OscillationSample& s, bool single_variant);

}  // namespace cubicloc
