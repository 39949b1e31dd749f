#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heilbronn/criterion.hpp"
#include "heilbronn/local_density.hpp"
#include "heilbronn/numeric.hpp"

namespace heilbronn {

/* Local conditions on a coefficient tuple: Eisenstein at p, no roots mod
 * each prime in rootless_at, at least one root mod each prime in
 * rooted_at. The combined condition lives mod m = p^2 * prod q. */
struct LocalSpec {
    uint64_t p = 0;
    unsigned n = 0;
    std::vector<uint32_t> rootless_at; // ascending, primes < p
    std::vector<uint32_t> rooted_at;   // ascending, disjoint from the above

    LocalSpec(uint64_t p, unsigned n, std::vector<uint32_t> rootless,
              std::vector<uint32_t> rooted);

    BigInt modulus() const;
    // E_p(n) * prod C_q(n) * prod (1 - C_q(n)), the density of the
    // condition set in (Z/m)^n.
    Rational density() const;
};

/* Exact number of coefficient tuples in the aligned box (-km, km]^n
 * meeting the spec. The box holds 2k full residue systems mod m per
 * coordinate, so the density formula is exact there; the enumeration path
 * recounts by brute force whenever (2km)^n fits under the cap. */
struct AlignedCount {
    BigInt count;
    bool enumeration_verified = false;
};
AlignedCount exact_count_aligned(const LocalSpec& spec, uint64_t k,
                                 uint64_t enumeration_cap = 100000000);

// density * (2X)^n, the smooth main term at an arbitrary height bound.
Rational main_term(const LocalSpec& spec, uint64_t height_bound);

// Explicit-constant budget 4 n 2^n m (2X)^{n-1} for |exact - main term|
// at unaligned heights.
BigInt unaligned_error_budget(const LocalSpec& spec, uint64_t height_bound);

enum class SurveyMode { exhaustive, montecarlo };
std::string to_string(SurveyMode m);

struct SurveyReport {
    uint64_t p = 0;
    unsigned n = 0;
    uint64_t height_bound = 0;   // requested X
    uint64_t aligned_height = 0; // box bound actually used
    uint64_t pair_bound = 0;
    SurveyMode mode = SurveyMode::exhaustive;
    uint64_t seed = 0;    // montecarlo only
    uint64_t samples = 0; // montecarlo only

    BigInt total;   // candidates examined (all p-Eisenstein by construction)
    BigInt applies; // criterion verdicts that carried a witness
    Rational delta; // applies / total
    double delta_stderr = 0; // binomial, montecarlo only

    uint64_t main_q1 = 0, main_q2 = 0; // first usable pair, 0 when none
    Rational main_term_density;        // prod C_q(n) over that pair

    Rational lower_bound; // theoretical bound for the limiting proportion
    bool lower_bound_vacuous = false;

    double wall_seconds = 0;

    bool operator==(const SurveyReport&) const = default;
};

/* Walk every p-Eisenstein coefficient tuple in (-X, X]^n (a_0 over
 * integers exactly divisible by p, the rest over multiples of p), screen
 * each with the criterion, and report the exact proportion. The a_0 axis
 * is split into contiguous chunks across workers; merging is pure count
 * addition, so results do not depend on the worker count. */
SurveyReport exhaustive_survey(uint64_t p, unsigned n, uint64_t height_bound,
                               uint64_t pair_bound, uint64_t enumeration_cap,
                               unsigned threads = 1);

/* Seeded estimate of the same proportion: tuples drawn uniformly from the
 * p-Eisenstein subset of the aligned box (-p*floor(X/p), p*floor(X/p)]^n.
 * Byte-identical reports for identical arguments. */
SurveyReport montecarlo_survey(uint64_t p, unsigned n, uint64_t height_bound,
                               uint64_t pair_bound, uint64_t seed,
                               uint64_t samples);

/* The two effective lower bounds for the limiting criterion proportion,
 * with their applicability flags. bound_t1 = max(2/27, 1 - eps(p)) needs
 * n >= 3 odd and gcd(p-1, n) = 1; bound_t2 = 1 - eps_hat(p) is clamped to
 * [0, 1] and flagged when vacuous. */
struct LowerBoundReport {
    uint64_t p = 0;
    unsigned n = 0;
    uint64_t g = 0;
    bool gcd_ok = false;       // g == 1
    bool t1_applicable = false;
    Rational bound_t1;         // meaningful when t1_applicable
    Rational eps;
    Rational bound_t2;
    Rational eps_hat;
    double eps_hat_cutoff = 0;
    bool t2_vacuous = false;
    bool t2_hypothesis = false; // g < sqrt(p)/(log p)^2

    bool operator==(const LowerBoundReport&) const = default;
};
LowerBoundReport lower_bound_report(uint64_t p, unsigned n);

} // namespace heilbronn
