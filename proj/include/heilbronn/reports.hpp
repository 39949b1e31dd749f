#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "heilbronn/config.hpp"
#include "heilbronn/criterion.hpp"
#include "heilbronn/local_density.hpp"
#include "heilbronn/survey.hpp"

namespace heilbronn {

// Insertion-ordered JSON so report bytes are stable across runs.
using Json = nlohmann::ordered_json;

/* Exact rationals travel as decimal numerator/denominator strings; a
 * clearly-labeled "approx" double rides along for plotting. */
Json rational_to_json(const Rational& r);
Json rational_to_json_approx(const Rational& r);
Rational rational_from_json(const Json& j);

Json config_to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);

// command-specific body + the config and version it was produced under
Json with_provenance(Json body, const RunConfig& config);

struct DensityReport {
    uint64_t p = 0;
    unsigned n = 0;
    BigInt rootless_count; // A_p(n)
    Rational rootless;     // C_p(n)
    Rational eisenstein;   // E_p(n)
    DensityBounds bounds;
    Rational eps;
    Rational eps_hat;
    Rational eps_refined;

    bool operator==(const DensityReport&) const = default;
};
DensityReport make_density_report(uint64_t p, unsigned n);
Json to_json(const DensityReport& r);
DensityReport density_report_from_json(const Json& j);

struct DecomposeReport {
    uint64_t p = 0, q1 = 0, q2 = 0;
    std::optional<Decomposition> found;

    bool operator==(const DecomposeReport&) const = default;
};
Json to_json(const DecomposeReport& r);
DecomposeReport decompose_report_from_json(const Json& j);

struct CheckReport {
    std::string poly;
    uint64_t p = 0;
    unsigned n = 0;
    uint64_t pair_bound = 0;
    HeilbronnVerdict verdict;

    bool operator==(const CheckReport&) const = default;
};
Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

struct Theorem2Report {
    uint64_t p = 0;
    unsigned n = 0;
    uint64_t q1 = 0, q2 = 0;
    uint64_t g = 0;
    uint64_t count = 0;
    MainTermError estimate;
    Theorem2Result search;
    GcdCondition gcd;

    bool operator==(const Theorem2Report&) const = default;
};
Json to_json(const Theorem2Report& r);
Theorem2Report theorem2_report_from_json(const Json& j);

struct CountReport {
    uint64_t p = 0;
    unsigned n = 0;
    std::vector<uint32_t> rootless;
    std::vector<uint32_t> rooted;
    uint64_t height_bound = 0;
    BigInt modulus;
    uint64_t k = 0;           // aligned box uses (-k*m, k*m]
    BigInt aligned_height;    // k*m
    BigInt exact;
    bool verified = false;
    Rational main;
    BigInt error_budget;

    bool operator==(const CountReport&) const = default;
};
Json to_json(const CountReport& r);
CountReport count_report_from_json(const Json& j);

Json to_json(const SurveyReport& r);
SurveyReport survey_report_from_json(const Json& j);

Json to_json(const LowerBoundReport& r);
LowerBoundReport lower_bound_report_from_json(const Json& j);

// p,n,X,mode,total,applies,delta_num,delta_den,bound
std::string survey_csv_header();
std::string survey_csv_row(const SurveyReport& r);

} // namespace heilbronn
