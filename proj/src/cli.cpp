#include "heilbronn/cli.hpp"

#include <filesystem>
#include <fstream>

#include "CLI11.hpp"

#include "heilbronn/poly.hpp"
#include "heilbronn/primes.hpp"
#include "heilbronn/reports.hpp"

namespace heilbronn {

namespace {

std::vector<uint32_t> parse_prime_list(const std::string& text)
{
    std::vector<uint32_t> out;
    if (text.empty())
        return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(
            static_cast<uint32_t>(parse_bigint(item).convert_to<uint64_t>()));
    return out;
}

void require_prime_arg(uint64_t value, const std::string& name)
{
    if (!is_prime(value))
        throw precondition_error(name + " = " + std::to_string(value)
                                 + " is not prime");
}

// Reports are one line each so pipelines compose; --out appends instead.
void emit(const std::string& line, const std::string& out_path,
          std::ostream& out, bool csv_header_wanted,
          const std::string& header)
{
    if (out_path.empty()) {
        if (csv_header_wanted)
            out << header << '\n';
        out << line << '\n';
        return;
    }
    const bool add_header = csv_header_wanted
                            && (!std::filesystem::exists(out_path)
                                || std::filesystem::file_size(out_path) == 0);
    std::ofstream file(out_path, std::ios::app);
    if (!file)
        throw precondition_error("cannot open output file " + out_path);
    if (add_header)
        file << header << '\n';
    file << line << '\n';
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err)
{
    CLI::App app{"screen p-Eisenstein polynomials against a norm-Euclidean "
                 "failure criterion; exact local densities and surveys"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file");

    RunConfig config;
    std::string out_path;
    app.add_option("--pair-bound", config.pair_bound,
                   "largest prime considered for the pair search")
        ->capture_default_str();
    app.add_option("--pv-constant", config.pv_constant,
                   "character-sum error constant")
        ->capture_default_str();
    app.add_option("--enumeration-cap", config.enumeration_cap,
                   "largest tuple count an exhaustive walk may visit")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "sampling seed")
        ->capture_default_str();
    app.add_option("--format", config.format, "json or csv")
        ->capture_default_str();
    app.add_option("--threads", config.threads,
                   "worker count (0 = hardware; HEILBRONN_THREADS overrides)")
        ->capture_default_str();
    app.add_option("--out", out_path, "append reports to this file");

    uint64_t p = 0, q1 = 0, q2 = 0, height = 0, samples = 10000;
    unsigned n = 0;
    std::string poly_text, mode = "exhaustive", rootless_text, rooted_text;

    CLI::App* density = app.add_subcommand("density", "exact local densities");
    density->fallthrough();
    density->add_option("--p", p, "prime")->required();
    density->add_option("--n", n, "degree")->required();

    CLI::App* decompose =
        app.add_subcommand("decompose", "split p = u*q1 + v*q2");
    decompose->fallthrough();
    decompose->add_option("p", p, "prime")->required();
    decompose->add_option("q1", q1, "smaller prime")->required();
    decompose->add_option("q2", q2, "larger prime")->required();

    CLI::App* check =
        app.add_subcommand("check", "screen one Eisenstein polynomial");
    check->fallthrough();
    check->add_option("--poly", poly_text, "ascending coefficients a0,a1,...")
        ->required();
    check->add_option("--p", p, "Eisenstein prime")->required();

    CLI::App* theorem2 = app.add_subcommand(
        "theorem2", "constrained witness search and its expected count");
    theorem2->fallthrough();
    theorem2->add_option("--p", p, "prime")->required();
    theorem2->add_option("--n", n, "degree")->required();
    theorem2->add_option("--q1", q1, "smaller prime")->required();
    theorem2->add_option("--q2", q2, "larger prime")->required();

    CLI::App* survey =
        app.add_subcommand("survey", "proportion of screened polynomials "
                                     "where the criterion applies");
    survey->fallthrough();
    survey->add_option("--p", p, "Eisenstein prime")->required();
    survey->add_option("--n", n, "degree")->required();
    survey->add_option("--X", height, "height bound")->required();
    survey->add_option("--mode", mode, "exhaustive or mc")
        ->check(CLI::IsMember({"exhaustive", "mc"}));
    survey->add_option("--samples", samples, "monte-carlo sample count");

    CLI::App* count = app.add_subcommand(
        "count", "exact aligned-box count with local conditions");
    count->fallthrough();
    count->add_option("--p", p, "Eisenstein prime")->required();
    count->add_option("--n", n, "degree")->required();
    count->add_option("--X", height, "height bound")->required();
    count->add_option("--rootless", rootless_text,
                      "primes where no root is allowed, e.g. 2,3");
    count->add_option("--rooted", rooted_text,
                      "primes where a root is required");

    CLI::App* bounds =
        app.add_subcommand("bounds", "effective lower bounds for the "
                                     "limiting criterion proportion");
    bounds->fallthrough();
    bounds->add_option("--p", p, "prime")->required();
    bounds->add_option("--n", n, "degree")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "run the brute-force oracle suite");
    verify->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        if (e.get_name() == "RequiredError" || e.get_name() == "ExtrasError")
            err << app.help();
        return 2;
    }

    try {
        config.validate();

        if (density->parsed()) {
            require_prime_arg(p, "p");
            Json j = to_json(make_density_report(p, n));
            emit(with_provenance(std::move(j), config).dump(), out_path, out,
                 false, "");
            return 0;
        }
        if (decompose->parsed()) {
            DecomposeReport r;
            r.p = p;
            r.q1 = q1;
            r.q2 = q2;
            r.found = frobenius_decompose(p, q1, q2);
            emit(with_provenance(to_json(r), config).dump(), out_path, out,
                 false, "");
            return 0;
        }
        if (check->parsed()) {
            require_prime_arg(p, "p");
            CheckReport r;
            r.poly = poly_text;
            r.p = p;
            MonicIntPolynomial f = MonicIntPolynomial::from_text(poly_text);
            r.n = f.degree();
            r.pair_bound = config.pair_bound;
            r.verdict = criterion_verdict(f, p, config.pair_bound);
            emit(with_provenance(to_json(r), config).dump(), out_path, out,
                 false, "");
            return 0;
        }
        if (theorem2->parsed()) {
            Theorem2Report r;
            r.p = p;
            r.n = n;
            r.q1 = q1;
            r.q2 = q2;
            r.g = residue_order(p, n);
            r.count = count_admissible(p, n, q1, q2);
            r.estimate = main_term_and_error(p, n, q1, q2, config.pv_constant);
            r.search = theorem2_witness(p, n, q1, q2);
            r.gcd = gcd_condition_holds(
                p, n, static_cast<double>(std::max<uint64_t>(q2, 2)),
                config.pv_constant);
            emit(with_provenance(to_json(r), config).dump(), out_path, out,
                 false, "");
            return 0;
        }
        if (survey->parsed()) {
            SurveyReport r;
            if (mode == "mc") {
                r = montecarlo_survey(p, n, height, config.pair_bound,
                                      config.seed, samples);
            } else {
                r = exhaustive_survey(p, n, height, config.pair_bound,
                                      config.enumeration_cap,
                                      resolve_threads(config.threads));
            }
            if (config.format == "csv")
                emit(survey_csv_row(r), out_path, out, true,
                     survey_csv_header());
            else
                emit(with_provenance(to_json(r), config).dump(), out_path, out,
                     false, "");
            return 0;
        }
        if (count->parsed()) {
            LocalSpec spec(p, n, parse_prime_list(rootless_text),
                           parse_prime_list(rooted_text));
            CountReport r;
            r.p = p;
            r.n = n;
            r.rootless = spec.rootless_at;
            r.rooted = spec.rooted_at;
            r.height_bound = height;
            r.modulus = spec.modulus();
            if (r.modulus > height)
                throw precondition_error(
                    "height bound below the condition modulus "
                    + r.modulus.str() + "; no aligned box fits");
            r.k = (BigInt(height) / r.modulus).convert_to<uint64_t>();
            r.aligned_height = r.k * r.modulus;
            AlignedCount c = exact_count_aligned(spec, r.k,
                                                 config.enumeration_cap);
            r.exact = c.count;
            r.verified = c.enumeration_verified;
            r.main = main_term(spec, height);
            r.error_budget = unaligned_error_budget(spec, height);
            emit(with_provenance(to_json(r), config).dump(), out_path, out,
                 false, "");
            return 0;
        }
        if (bounds->parsed()) {
            emit(with_provenance(to_json(lower_bound_report(p, n)), config)
                     .dump(),
                 out_path, out, false, "");
            return 0;
        }
        if (verify->parsed()) {
            int failures = run_verify_suite(out);
            return failures == 0 ? 0 : 4;
        }
    } catch (const precondition_error& e) {
        err << "precondition violated: " << e.what() << '\n';
        return 3;
    }
    err << "no subcommand selected\n";
    return 2;
}

} // namespace heilbronn
