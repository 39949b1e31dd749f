#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heilbronn/decomposition.hpp"
#include "heilbronn/numeric.hpp"
#include "heilbronn/poly.hpp"

namespace heilbronn {

// g = gcd(p-1, n); the n-th power residues form a subgroup of index g.
uint64_t residue_order(uint64_t p, uint64_t n);

// True iff a is an n-th power mod p, via a^{(p-1)/g} == 1. Requires p
// not dividing a.
bool is_nth_power_residue(uint64_t a, uint64_t p, uint64_t n);
bool is_nth_power_residue(const BigInt& a, uint64_t p, uint64_t n);

enum class InconclusiveReason {
    no_prime_pair,          // no pair below the bound admits a decomposition
    all_pairs_have_roots,   // usable pairs exist but f has a root at each
    no_residue_admissible_u,// decompositions exist, none passes the residue test
    p_too_small,            // as above and the constrained scan range is empty
};
std::string to_string(InconclusiveReason r);
std::optional<InconclusiveReason> inconclusive_reason_from_string(const std::string& s);

/* Everything needed to certify one application of the criterion:
 * p = a + b with a = u*q1, b = v*q2, a an n-th power residue mod p, and
 * the screened polynomial rootless mod q1 and q2. */
struct HeilbronnWitness {
    uint64_t p = 0;
    unsigned n = 0;
    uint64_t q1 = 0, q2 = 0;
    uint64_t u = 0, v = 0;
    uint64_t a = 0, b = 0;
    uint64_t g = 0;
    bool adjusted = false; // u was shifted by q2 or 2q2 during the q2|v repair

    bool operator==(const HeilbronnWitness&) const = default;
};

struct HeilbronnVerdict {
    std::optional<HeilbronnWitness> witness; // set iff the criterion applies
    std::optional<InconclusiveReason> reason;

    bool applies() const { return witness.has_value(); }

    bool operator==(const HeilbronnVerdict&) const = default;
};

// An Applies verdict asserts the field generated by f is not norm-Euclidean,
// under the standing assumption that rootlessness mod q certifies q (and
// its multiples u*q1, v*q2 below p) as non-norms.
extern const char* const kWitnessAssumption;

// From-scratch recheck of every witness invariant.
bool verify_witness(const MonicIntPolynomial& f, const HeilbronnWitness& w);
bool verify_witness(std::span<const int64_t> coeffs, const HeilbronnWitness& w);

/* Pair-level search state for fixed (p, n, pair bound): which prime pairs
 * q1 < q2 <= min(Y, p-1) admit a residue-admissible decomposition. All of
 * it is independent of the screened polynomial, so one engine serves a
 * whole survey; immutable after construction and safe to share across
 * worker threads. */
class CriterionEngine {
  public:
    CriterionEngine(uint64_t p, unsigned n, uint64_t pair_bound);

    uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    uint64_t pair_bound() const { return pair_bound_; }
    uint64_t residue_order() const { return g_; }

    // Primes eligible as q1/q2, ascending.
    const std::vector<uint32_t>& search_primes() const { return primes_; }

    struct PairState {
        uint64_t q1 = 0, q2 = 0;
        unsigned idx1 = 0, idx2 = 0; // positions in search_primes()
        std::optional<Decomposition> usable; // minimal u, residue-admissible
        InconclusiveReason gap = InconclusiveReason::no_prime_pair;
    };
    const std::vector<PairState>& pairs() const { return pairs_; }

    HeilbronnVerdict verdict(const MonicIntPolynomial& f) const;
    HeilbronnVerdict verdict(std::span<const int64_t> ascending_coeffs) const;

    /* Bitmask fast path for enumeration loops: bit i set iff f has a root
     * mod search_primes()[i]. The verdict of f depends on f only through
     * this mask. Available while search_primes().size() <= 16. */
    bool mask_table_available() const { return !mask_applies_.empty(); }
    uint32_t root_mask(std::span<const int64_t> ascending_coeffs) const;
    bool mask_applies(uint32_t mask) const;

  private:
    HeilbronnVerdict verdict_from_roots(
        const std::function<bool(uint32_t)>& poly_has_root_mod) const;

    uint64_t p_;
    unsigned n_;
    uint64_t pair_bound_;
    uint64_t g_;
    std::vector<uint32_t> primes_;
    std::vector<PairState> pairs_;
    std::vector<uint8_t> mask_applies_;
};

/* One-shot form: screen one p-Eisenstein polynomial. Throws
 * precondition_error unless f is Eisenstein at p and p >= 5. */
HeilbronnVerdict criterion_verdict(const MonicIntPolynomial& f, uint64_t p,
                                   uint64_t pair_bound);

/* The constrained witness search: positive u below X = p/q1 - 2*q2 with
 * gcd(u, q1) = 1, q1*u = p (mod q2) and u*q1 an n-th power residue mod p,
 * followed by the q2|v repair. When gcd(p-1, n) = 1 the residue condition
 * is vacuous and the plain minimal-u decomposition scan answers instead
 * (this also covers primes too small for the constrained range). */
struct Theorem2Result {
    enum class Outcome { found, p_too_small, no_admissible_u };
    Outcome outcome = Outcome::no_admissible_u;
    std::optional<Decomposition> decomp;
    uint64_t pre_adjust_u = 0;
    bool adjusted = false;

    bool operator==(const Theorem2Result&) const = default;
};
Theorem2Result theorem2_witness(uint64_t p, unsigned n, uint64_t q1, uint64_t q2);

// Exact count of u < X satisfying the three conditions above (no repair).
uint64_t count_admissible(uint64_t p, unsigned n, uint64_t q1, uint64_t q2);

/* Expected count X*(q1-1)/q1 * 1/q2 * 1/g and the character-sum error
 * budget pv_constant * sqrt(m) * log(m), m = p*q1*q2. */
struct MainTermError {
    double main = 0;
    double error = 0;

    bool operator==(const MainTermError&) const = default;
};
MainTermError main_term_and_error(uint64_t p, unsigned n, uint64_t q1,
                                  uint64_t q2, double pv_constant);

/* Whether g = gcd(p-1, n) is small enough that the main term provably
 * beats the error for every prime pair below the cutoff, plus the cruder
 * hypothesis g < sqrt(p)/(log p)^2. Floating-point diagnostic. */
struct GcdCondition {
    uint64_t g = 0;
    bool sufficient = false;
    double sufficient_rhs = 0;
    bool hypothesis = false;
    double hypothesis_rhs = 0;

    bool operator==(const GcdCondition&) const = default;
};
GcdCondition gcd_condition_holds(uint64_t p, uint64_t n, double pair_cutoff,
                                 double pv_constant);

} // namespace heilbronn
