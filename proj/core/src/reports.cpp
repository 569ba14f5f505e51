#include "cubicloc/reports.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cubicloc {

std::string to_string(VerdictReason reason) {
    switch (reason) {
        case VerdictReason::LargePrimeGood: return "LargePrimeGood";
        case VerdictReason::SmallPrimeWitness: return "SmallPrimeWitness";
        case VerdictReason::Mod27Witness: return "Mod27Witness";
        case VerdictReason::InertDividesGood: return "InertDividesGood";
        case VerdictReason::CubeTest: return "CubeTest";
        case VerdictReason::PreconditionViolated: return "PreconditionViolated";
        case VerdictReason::OracleSearch: return "OracleSearch";
    }
    throw std::logic_error("unknown verdict reason");
}

VerdictReason verdict_reason_from_string(const std::string& s) {
    for (auto r : {VerdictReason::LargePrimeGood, VerdictReason::SmallPrimeWitness,
                   VerdictReason::Mod27Witness, VerdictReason::InertDividesGood,
                   VerdictReason::CubeTest, VerdictReason::PreconditionViolated,
                   VerdictReason::OracleSearch})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown verdict reason '" + s + "'");
}

std::string to_string(CountMode mode) {
    return mode == CountMode::FastPath ? "FastPath" : "Oracle";
}

CountMode count_mode_from_string(const std::string& s) {
    if (s == "FastPath") return CountMode::FastPath;
    if (s == "Oracle") return CountMode::Oracle;
    throw std::invalid_argument("unknown count mode '" + s + "'");
}

std::string bigfloat_to_string(const BigFloat& v) {
    std::ostringstream ss;
    ss.precision(std::numeric_limits<BigFloat>::max_digits10);
    ss << std::scientific << v;
    return ss.str();
}

BigFloat bigfloat_from_string(const std::string& s) { return BigFloat(s); }

void to_json(json& j, const LocalVerdict& v) {
    j = json{{"prime", v.prime}, {"soluble", v.soluble}, {"reason", to_string(v.reason)}};
    if (v.witness) j["witness"] = *v.witness;
    if (v.tested_coefficient) j["tested_coefficient"] = std::string(1, v.tested_coefficient);
}

void from_json(const json& j, LocalVerdict& v) {
    v = LocalVerdict{};
    v.prime = j.at("prime").get<std::int64_t>();
    v.soluble = j.at("soluble").get<bool>();
    v.reason = verdict_reason_from_string(j.at("reason").get<std::string>());
    if (j.contains("witness")) v.witness = j.at("witness").get<std::array<int, 3>>();
    if (j.contains("tested_coefficient"))
        v.tested_coefficient = j.at("tested_coefficient").get<std::string>().at(0);
}

void to_json(json& j, const LocalReport& r) {
    j = json{{"a", r.form.a},
             {"b", r.form.b},
             {"everywhere_soluble", r.everywhere_soluble},
             {"verdicts", r.verdicts}};
}

void from_json(const json& j, LocalReport& r) {
    r = LocalReport{};
    r.form.a = j.at("a").get<std::int64_t>();
    r.form.b = j.at("b").get<std::int64_t>();
    r.everywhere_soluble = j.at("everywhere_soluble").get<bool>();
    r.verdicts = j.at("verdicts").get<std::vector<LocalVerdict>>();
}

void to_json(json& j, const CountResult& r) {
    j = json{{"A", r.A},
             {"B", r.B},
             {"count", r.count},
             {"method", to_string(r.method)},
             {"elapsed_seconds", r.elapsed_seconds}};
}

void from_json(const json& j, CountResult& r) {
    r = CountResult{};
    r.A = j.at("A").get<std::uint64_t>();
    r.B = j.at("B").get<std::uint64_t>();
    r.count = j.at("count").get<std::uint64_t>();
    r.method = count_mode_from_string(j.at("method").get<std::string>());
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
}

void to_json(json& j, const ConstantEstimate& e) {
    j = json{{"P", e.truncation_bound},
             {"partial_product", bigfloat_to_string(e.partial_product)},
             {"gamma_factor", bigfloat_to_string(e.gamma_factor)},
             {"c2", bigfloat_to_string(e.c2_estimate)},
             {"tail_estimate", bigfloat_to_string(e.tail_estimate)},
             {"digits", e.digits},
             {"c2_rounded", to_fixed_string(e.c2_estimate, e.digits)},
             {"c2_double", static_cast<double>(e.c2_estimate)}};
}

void from_json(const json& j, ConstantEstimate& e) {
    e = ConstantEstimate{};
    e.truncation_bound = j.at("P").get<std::uint64_t>();
    e.partial_product = bigfloat_from_string(j.at("partial_product").get<std::string>());
    e.gamma_factor = bigfloat_from_string(j.at("gamma_factor").get<std::string>());
    e.c2_estimate = bigfloat_from_string(j.at("c2").get<std::string>());
    e.tail_estimate = bigfloat_from_string(j.at("tail_estimate").get<std::string>());
    e.digits = j.at("digits").get<int>();
}

void to_json(json& j, const ComparisonReport& r) {
    j = json{{"A", r.A},
             {"B", r.B},
             {"N", r.observed},
             {"c2", r.c2},
             {"P", r.P},
             {"predicted", r.predicted},
             {"ratio", r.ratio},
             {"error_budget", r.error_budget},
             {"elapsed_seconds", r.elapsed_seconds}};
}

void from_json(const json& j, ComparisonReport& r) {
    r = ComparisonReport{};
    r.A = j.at("A").get<std::uint64_t>();
    r.B = j.at("B").get<std::uint64_t>();
    r.observed = j.at("N").get<std::uint64_t>();
    r.c2 = j.at("c2").get<double>();
    r.P = j.at("P").get<std::uint64_t>();
    r.predicted = j.at("predicted").get<double>();
    r.ratio = j.at("ratio").get<double>();
    r.error_budget = j.at("error_budget").get<double>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
}

void to_json(json& j, const OscillationSample& s) {
    j = json{{"A", s.A},
             {"B", s.B},
             {"s", s.s},
             {"t", s.t},
             {"m", s.m},
             {"residue_class", s.residue_class},
             {"d2", s.d2},
             {"d3", s.d3},
             {"weighted", s.weighted},
             {"x", s.x},
             {"y", s.y},
             {"denom_pow3", s.denom_pow3},
             {"term_count", s.term_count},
             {"re", s.re()},
             {"im", s.im()},
             {"normalized", s.normalized()}};
}

void from_json(const json& j, OscillationSample& s) {
    s = OscillationSample{};
    s.A = j.at("A").get<std::uint64_t>();
    s.B = j.at("B").get<std::uint64_t>();
    s.s = j.at("s").get<int>();
    s.t = j.at("t").get<int>();
    s.m = j.at("m").get<int>();
    s.residue_class = j.at("residue_class").get<int>();
    s.d2 = j.at("d2").get<std::int64_t>();
    s.d3 = j.at("d3").get<std::int64_t>();
    s.weighted = j.at("weighted").get<bool>();
    s.x = j.at("x").get<std::int64_t>();
    s.y = j.at("y").get<std::int64_t>();
    s.denom_pow3 = j.at("denom_pow3").get<int>();
    s.term_count = j.at("term_count").get<std::uint64_t>();
}

std::string oscillation_csv_header(bool single_variant) {
    return single_variant ? "B,m,d2,d3,i,weighted,term_count,re,im,normalized"
                          : "A,B,s,t,term_count,re,im,normalized";
}

std::string oscillation_csv_row(const OscillationSample& s, bool single_variant) {
    std::ostringstream ss;
    ss.precision(17);
    if (single_variant)
        ss << s.B << ',' << s.m << ',' << s.d2 << ',' << s.d3 << ',' << s.residue_class << ','
           << (s.weighted ? 1 : 0) << ',' << s.term_count << ',' << s.re() << ',' << s.im() << ','
           << s.normalized();
    else
        ss << s.A << ',' << s.B << ',' << s.s << ',' << s.t << ',' << s.term_count << ',' << s.re()
           << ',' << s.im() << ',' << s.normalized();
    return ss.str();
}

}  // namespace cubicloc
