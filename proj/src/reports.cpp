#include "heilbronn/reports.hpp"

#include <sstream>

#include "heilbronn/version.hpp"

namespace heilbronn {

Json rational_to_json(const Rational& r)
{
    Json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
}

Json rational_to_json_approx(const Rational& r)
{
    Json j = rational_to_json(r);
    j["approx"] = to_double(r);
    return j;
}

Rational rational_from_json(const Json& j)
{
    return Rational(parse_bigint(j.at("num").get<std::string>()),
                    parse_bigint(j.at("den").get<std::string>()));
}

Json config_to_json(const RunConfig& c)
{
    Json j;
    j["pair_bound"] = c.pair_bound;
    j["pv_constant"] = c.pv_constant;
    j["enumeration_cap"] = c.enumeration_cap;
    j["seed"] = c.seed;
    j["format"] = c.format;
    j["threads"] = c.threads;
    return j;
}

RunConfig config_from_json(const Json& j)
{
    RunConfig c;
    c.pair_bound = j.at("pair_bound").get<uint64_t>();
    c.pv_constant = j.at("pv_constant").get<double>();
    c.enumeration_cap = j.at("enumeration_cap").get<uint64_t>();
    c.seed = j.at("seed").get<uint64_t>();
    c.format = j.at("format").get<std::string>();
    c.threads = j.at("threads").get<unsigned>();
    return c;
}

Json with_provenance(Json body, const RunConfig& config)
{
    body["config"] = config_to_json(config);
    body["version"] = kVersion;
    return body;
}

DensityReport make_density_report(uint64_t p, unsigned n)
{
    DensityReport r;
    r.p = p;
    r.n = n;
    r.rootless_count = count_rootless(p, n);
    r.rootless = rootless_density(p, n);
    r.eisenstein = eisenstein_density(p, n);
    r.bounds = n >= 2 ? density_bounds(p, n) : DensityBounds{};
    r.eps = epsilon(p);
    r.eps_hat = p >= 5 ? epsilon_hat(p) : Rational(1);
    r.eps_refined = n >= 2 ? epsilon_refined(p, n) : Rational(1);
    return r;
}

Json to_json(const DensityReport& r)
{
    Json j;
    j["command"] = "density";
    j["p"] = r.p;
    j["n"] = r.n;
    j["A"] = r.rootless_count.str();
    j["C"] = rational_to_json(r.rootless);
    j["E"] = rational_to_json(r.eisenstein);
    j["bounds"] = Json{{"lo", rational_to_json(r.bounds.lower)},
                       {"hi", rational_to_json(r.bounds.upper)}};
    j["epsilon"] = rational_to_json_approx(r.eps);
    j["epsilon_hat"] = rational_to_json_approx(r.eps_hat);
    j["epsilon_refined"] = rational_to_json_approx(r.eps_refined);
    return j;
}

DensityReport density_report_from_json(const Json& j)
{
    DensityReport r;
    r.p = j.at("p").get<uint64_t>();
    r.n = j.at("n").get<unsigned>();
    r.rootless_count = parse_bigint(j.at("A").get<std::string>());
    r.rootless = rational_from_json(j.at("C"));
    r.eisenstein = rational_from_json(j.at("E"));
    r.bounds.lower = rational_from_json(j.at("bounds").at("lo"));
    r.bounds.upper = rational_from_json(j.at("bounds").at("hi"));
    r.eps = rational_from_json(j.at("epsilon"));
    r.eps_hat = rational_from_json(j.at("epsilon_hat"));
    r.eps_refined = rational_from_json(j.at("epsilon_refined"));
    return r;
}

Json to_json(const DecomposeReport& r)
{
    Json j;
    j["command"] = "decompose";
    j["p"] = r.p;
    j["q1"] = r.q1;
    j["q2"] = r.q2;
    j["found"] = r.found.has_value();
    if (r.found) {
        j["u"] = r.found->u;
        j["v"] = r.found->v;
    }
    return j;
}

DecomposeReport decompose_report_from_json(const Json& j)
{
    DecomposeReport r;
    r.p = j.at("p").get<uint64_t>();
    r.q1 = j.at("q1").get<uint64_t>();
    r.q2 = j.at("q2").get<uint64_t>();
    if (j.at("found").get<bool>())
        r.found = Decomposition{r.p, r.q1, r.q2, j.at("u").get<uint64_t>(),
                                j.at("v").get<uint64_t>()};
    return r;
}

namespace {

Json witness_to_json(const HeilbronnWitness& w)
{
    Json j;
    j["p"] = w.p;
    j["n"] = w.n;
    j["q1"] = w.q1;
    j["q2"] = w.q2;
    j["u"] = w.u;
    j["v"] = w.v;
    j["a"] = w.a;
    j["b"] = w.b;
    j["g"] = w.g;
    j["adjusted"] = w.adjusted;
    return j;
}

HeilbronnWitness witness_from_json(const Json& j)
{
    HeilbronnWitness w;
    w.p = j.at("p").get<uint64_t>();
    w.n = j.at("n").get<unsigned>();
    w.q1 = j.at("q1").get<uint64_t>();
    w.q2 = j.at("q2").get<uint64_t>();
    w.u = j.at("u").get<uint64_t>();
    w.v = j.at("v").get<uint64_t>();
    w.a = j.at("a").get<uint64_t>();
    w.b = j.at("b").get<uint64_t>();
    w.g = j.at("g").get<uint64_t>();
    w.adjusted = j.at("adjusted").get<bool>();
    return w;
}

} // namespace

Json to_json(const CheckReport& r)
{
    Json j;
    j["command"] = "check";
    j["poly"] = r.poly;
    j["p"] = r.p;
    j["n"] = r.n;
    j["pair_bound"] = r.pair_bound;
    if (r.verdict.applies()) {
        j["verdict"] = "applies";
        j["witness"] = witness_to_json(*r.verdict.witness);
        j["assumption"] = kWitnessAssumption;
    } else {
        j["verdict"] = "inconclusive";
        j["reason"] = to_string(*r.verdict.reason);
    }
    return j;
}

CheckReport check_report_from_json(const Json& j)
{
    CheckReport r;
    r.poly = j.at("poly").get<std::string>();
    r.p = j.at("p").get<uint64_t>();
    r.n = j.at("n").get<unsigned>();
    r.pair_bound = j.at("pair_bound").get<uint64_t>();
    if (j.at("verdict").get<std::string>() == "applies") {
        r.verdict.witness = witness_from_json(j.at("witness"));
    } else {
        auto reason =
            inconclusive_reason_from_string(j.at("reason").get<std::string>());
        if (!reason)
            throw precondition_error("unknown verdict reason in report");
        r.verdict.reason = *reason;
    }
    return r;
}

Json to_json(const Theorem2Report& r)
{
    Json j;
    j["command"] = "theorem2";
    j["p"] = r.p;
    j["n"] = r.n;
    j["q1"] = r.q1;
    j["q2"] = r.q2;
    j["g"] = r.g;
    j["count"] = r.count;
    j["main"] = r.estimate.main;
    j["error"] = r.estimate.error;
    j["found"] = r.search.outcome == Theorem2Result::Outcome::found;
    if (r.search.decomp) {
        j["witness"] = Json{{"u", r.search.decomp->u},
                            {"v", r.search.decomp->v},
                            {"pre_adjust_u", r.search.pre_adjust_u},
                            {"adjusted", r.search.adjusted}};
    } else {
        j["reason"] = r.search.outcome == Theorem2Result::Outcome::p_too_small
                          ? "p-too-small"
                          : "no-admissible-u";
    }
    j["gcd_condition"] = Json{{"sufficient", r.gcd.sufficient},
                              {"sufficient_rhs", r.gcd.sufficient_rhs},
                              {"t2_hypothesis", r.gcd.hypothesis},
                              {"t2_hypothesis_rhs", r.gcd.hypothesis_rhs}};
    return j;
}

Theorem2Report theorem2_report_from_json(const Json& j)
{
    Theorem2Report r;
    r.p = j.at("p").get<uint64_t>();
    r.n = j.at("n").get<unsigned>();
    r.q1 = j.at("q1").get<uint64_t>();
    r.q2 = j.at("q2").get<uint64_t>();
    r.g = j.at("g").get<uint64_t>();
    r.count = j.at("count").get<uint64_t>();
    r.estimate.main = j.at("main").get<double>();
    r.estimate.error = j.at("error").get<double>();
    if (j.at("found").get<bool>()) {
        r.search.outcome = Theorem2Result::Outcome::found;
        const Json& w = j.at("witness");
        r.search.pre_adjust_u = w.at("pre_adjust_u").get<uint64_t>();
        r.search.adjusted = w.at("adjusted").get<bool>();
        r.search.decomp = Decomposition{r.p, r.q1, r.q2, w.at("u").get<uint64_t>(),
                                        w.at("v").get<uint64_t>()};
    } else {
        r.search.outcome = j.at("reason").get<std::string>() == "p-too-small"
                               ? Theorem2Result::Outcome::p_too_small
                               : Theorem2Result::Outcome::no_admissible_u;
    }
    r.gcd.g = r.g;
    r.gcd.sufficient = j.at("gcd_condition").at("sufficient").get<bool>();
    r.gcd.sufficient_rhs = j.at("gcd_condition").at("sufficient_rhs").get<double>();
    r.gcd.hypothesis = j.at("gcd_condition").at("t2_hypothesis").get<bool>();
    r.gcd.hypothesis_rhs =
        j.at("gcd_condition").at("t2_hypothesis_rhs").get<double>();
    return r;
}

Json to_json(const CountReport& r)
{
    Json j;
    j["command"] = "count";
    j["p"] = r.p;
    j["n"] = r.n;
    j["rootless"] = r.rootless;
    j["rooted"] = r.rooted;
    j["X"] = r.height_bound;
    j["m"] = r.modulus.str();
    j["k"] = r.k;
    j["aligned_X"] = r.aligned_height.str();
    j["exact"] = r.exact.str();
    j["verified"] = r.verified;
    j["main_term"] = rational_to_json_approx(r.main);
    j["error_bound"] = r.error_budget.str();
    return j;
}

CountReport count_report_from_json(const Json& j)
{
    CountReport r;
    r.p = j.at("p").get<uint64_t>();
    r.n = j.at("n").get<unsigned>();
    r.rootless = j.at("rootless").get<std::vector<uint32_t>>();
    r.rooted = j.at("rooted").get<std::vector<uint32_t>>();
    r.height_bound = j.at("X").get<uint64_t>();
    r.modulus = parse_bigint(j.at("m").get<std::string>());
    r.k = j.at("k").get<uint64_t>();
    r.aligned_height = parse_bigint(j.at("aligned_X").get<std::string>());
    r.exact = parse_bigint(j.at("exact").get<std::string>());
    r.verified = j.at("verified").get<bool>();
    r.main = rational_from_json(j.at("main_term"));
    r.error_budget = parse_bigint(j.at("error_bound").get<std::string>());
    return r;
}

Json to_json(const SurveyReport& r)
{
    Json j;
    j["command"] = "survey";
    j["p"] = r.p;
    j["n"] = r.n;
    j["X"] = r.height_bound;
    j["aligned_X"] = r.aligned_height;
    j["pair_bound"] = r.pair_bound;
    j["mode"] = to_string(r.mode);
    if (r.mode == SurveyMode::montecarlo) {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    j["total"] = r.total.str();
    j["applies"] = r.applies.str();
    j["delta"] = rational_to_json_approx(r.delta);
    if (r.mode == SurveyMode::montecarlo)
        j["delta_stderr"] = r.delta_stderr;
    j["main_pair"] = Json::array({r.main_q1, r.main_q2});
    j["main_term_density"] = rational_to_json_approx(r.main_term_density);
    Json lb = rational_to_json_approx(r.lower_bound);
    lb["vacuous"] = r.lower_bound_vacuous;
    j["lower_bound"] = lb;
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

SurveyReport survey_report_from_json(const Json& j)
{
    SurveyReport r;
    r.p = j.at("p").get<uint64_t>();
    r.n = j.at("n").get<unsigned>();
    r.height_bound = j.at("X").get<uint64_t>();
    r.aligned_height = j.at("aligned_X").get<uint64_t>();
    r.pair_bound = j.at("pair_bound").get<uint64_t>();
    r.mode = j.at("mode").get<std::string>() == "mc" ? SurveyMode::montecarlo
                                                     : SurveyMode::exhaustive;
    if (r.mode == SurveyMode::montecarlo) {
        r.seed = j.at("seed").get<uint64_t>();
        r.samples = j.at("samples").get<uint64_t>();
        r.delta_stderr = j.at("delta_stderr").get<double>();
    }
    r.total = parse_bigint(j.at("total").get<std::string>());
    r.applies = parse_bigint(j.at("applies").get<std::string>());
    r.delta = rational_from_json(j.at("delta"));
    r.main_q1 = j.at("main_pair").at(0).get<uint64_t>();
    r.main_q2 = j.at("main_pair").at(1).get<uint64_t>();
    r.main_term_density = rational_from_json(j.at("main_term_density"));
    r.lower_bound = rational_from_json(j.at("lower_bound"));
    r.lower_bound_vacuous = j.at("lower_bound").at("vacuous").get<bool>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
}

Json to_json(const LowerBoundReport& r)
{
    Json j;
    j["command"] = "bounds";
    j["p"] = r.p;
    j["n"] = r.n;
    j["g"] = r.g;
    j["gcd_ok"] = r.gcd_ok;
    j["t1_applicable"] = r.t1_applicable;
    j["bound_T1"] = rational_to_json_approx(r.bound_t1);
    j["epsilon"] = rational_to_json_approx(r.eps);
    j["bound_T2"] = rational_to_json_approx(r.bound_t2);
    j["epsilon_hat"] = rational_to_json_approx(r.eps_hat);
    j["epsilon_hat_cutoff"] = r.eps_hat_cutoff;
    j["t2_vacuous"] = r.t2_vacuous;
    j["t2_hypothesis"] = r.t2_hypothesis;
    return j;
}

LowerBoundReport lower_bound_report_from_json(const Json& j)
{
    LowerBoundReport r;
    r.p = j.at("p").get<uint64_t>();
    r.n = j.at("n").get<unsigned>();
    r.g = j.at("g").get<uint64_t>();
    r.gcd_ok = j.at("gcd_ok").get<bool>();
    r.t1_applicable = j.at("t1_applicable").get<bool>();
    r.bound_t1 = rational_from_json(j.at("bound_T1"));
    r.eps = rational_from_json(j.at("epsilon"));
    r.bound_t2 = rational_from_json(j.at("bound_T2"));
    r.eps_hat = rational_from_json(j.at("epsilon_hat"));
    r.eps_hat_cutoff = j.at("epsilon_hat_cutoff").get<double>();
    r.t2_vacuous = j.at("t2_vacuous").get<bool>();
    r.t2_hypothesis = j.at("t2_hypothesis").get<bool>();
    return r;
}

std::string survey_csv_header()
{
    return "p,n,X,mode,total,applies,delta_num,delta_den,bound";
}

std::string survey_csv_row(const SurveyReport& r)
{
    std::ostringstream os;
    os << r.p << ',' << r.n << ',' << r.height_bound << ','
       << to_string(r.mode) << ',' << r.total.str() << ',' << r.applies.str()
       << ',' << numerator(r.delta).str() << ',' << denominator(r.delta).str()
       << ',' << to_double(r.lower_bound);
    return os.str();
}

} // namespace heilbronn
