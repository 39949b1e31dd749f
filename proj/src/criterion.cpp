#include "heilbronn/criterion.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include "heilbronn/primes.hpp"

namespace heilbronn {

const char* const kWitnessAssumption =
    "rootlessness mod q is taken as the certificate that q1, q2 (hence the "
    "summands u*q1, v*q2) are not norms of the generated field";

uint64_t residue_order(uint64_t p, uint64_t n)
{
    if (p < 3 || !is_prime(p))
        throw precondition_error("residue_order needs a prime p >= 3");
    if (n < 1)
        throw precondition_error("residue_order needs n >= 1");
    return std::gcd(p - 1, n);
}

bool is_nth_power_residue(uint64_t a, uint64_t p, uint64_t n)
{
    if (!is_prime(p))
        throw precondition_error("is_nth_power_residue needs a prime modulus");
    uint64_t r = a % p;
    if (r == 0)
        throw precondition_error("is_nth_power_residue needs p not dividing a");
    uint64_t g = std::gcd(p - 1, n);
    return pow_mod(r, (p - 1) / g, p) == 1;
}

bool is_nth_power_residue(const BigInt& a, uint64_t p, uint64_t n)
{
    BigInt r = a % p;
    if (r < 0)
        r += p;
    return is_nth_power_residue(r.convert_to<uint64_t>(), p, n);
}

std::string to_string(InconclusiveReason r)
{
    switch (r) {
    case InconclusiveReason::no_prime_pair: return "no-prime-pair";
    case InconclusiveReason::all_pairs_have_roots: return "all-pairs-have-roots";
    case InconclusiveReason::no_residue_admissible_u: return "no-residue-admissible-u";
    case InconclusiveReason::p_too_small: return "p-too-small";
    }
    return "unknown";
}

std::optional<InconclusiveReason>
inconclusive_reason_from_string(const std::string& s)
{
    for (auto r : {InconclusiveReason::no_prime_pair,
                   InconclusiveReason::all_pairs_have_roots,
                   InconclusiveReason::no_residue_admissible_u,
                   InconclusiveReason::p_too_small})
        if (to_string(r) == s)
            return r;
    return std::nullopt;
}

namespace {

bool witness_arithmetic_ok(const HeilbronnWitness& w)
{
    if (!(w.q1 < w.q2 && w.q2 < w.p))
        return false;
    if (!is_prime(w.p) || !is_prime(w.q1) || !is_prime(w.q2))
        return false;
    if (w.u < 1 || w.v < 1)
        return false;
    if (w.a != w.u * w.q1 || w.b != w.v * w.q2 || w.a + w.b != w.p)
        return false;
    if (std::gcd(w.u, w.q1) != 1 || std::gcd(w.v, w.q2) != 1)
        return false;
    if (w.n < 1 || w.g != std::gcd(w.p - 1, static_cast<uint64_t>(w.n)))
        return false;
    return pow_mod(w.a % w.p, (w.p - 1) / w.g, w.p) == 1;
}

} // namespace

bool verify_witness(const MonicIntPolynomial& f, const HeilbronnWitness& w)
{
    return witness_arithmetic_ok(w) && f.degree() == w.n
           && !has_root_mod(f, static_cast<uint32_t>(w.q1))
           && !has_root_mod(f, static_cast<uint32_t>(w.q2));
}

bool verify_witness(std::span<const int64_t> coeffs, const HeilbronnWitness& w)
{
    return witness_arithmetic_ok(w) && coeffs.size() == w.n
           && !has_root_mod(coeffs, static_cast<uint32_t>(w.q1))
           && !has_root_mod(coeffs, static_cast<uint32_t>(w.q2));
}

CriterionEngine::CriterionEngine(uint64_t p, unsigned n, uint64_t pair_bound)
    : p_(p)
    , n_(n)
    , pair_bound_(pair_bound)
{
    if (!is_prime(p) || p < 5)
        throw precondition_error("criterion needs a prime p >= 5");
    if (n < 1)
        throw precondition_error("criterion needs degree >= 1");
    if (pair_bound > 1000)
        throw precondition_error("pair bound too large (max 1000)");
    g_ = std::gcd(p - 1, static_cast<uint64_t>(n));

    const uint64_t limit = std::min<uint64_t>(pair_bound, p - 1);
    primes_ = primes_up_to(static_cast<uint32_t>(limit));

    for (unsigned i = 0; i < primes_.size(); ++i) {
        for (unsigned j = i + 1; j < primes_.size(); ++j) {
            PairState ps;
            ps.q1 = primes_[i];
            ps.q2 = primes_[j];
            ps.idx1 = i;
            ps.idx2 = j;

            bool saw_decomposition = false;
            ps.usable = frobenius_decompose_if(
                p_, ps.q1, ps.q2, [&](uint64_t u, uint64_t) {
                    saw_decomposition = true;
                    if (g_ == 1)
                        return true; // every residue is an n-th power
                    return pow_mod((u * ps.q1) % p_, (p_ - 1) / g_, p_) == 1;
                });
            if (!ps.usable) {
                if (!saw_decomposition)
                    ps.gap = InconclusiveReason::no_prime_pair;
                else if (p_ <= ps.q1 + 2 * ps.q1 * ps.q2) // constrained range empty
                    ps.gap = InconclusiveReason::p_too_small;
                else
                    ps.gap = InconclusiveReason::no_residue_admissible_u;
            }
            pairs_.push_back(std::move(ps));
        }
    }

    if (primes_.size() <= 16) {
        mask_applies_.assign(std::size_t(1) << primes_.size(), 0);
        for (uint32_t mask = 0; mask < mask_applies_.size(); ++mask) {
            for (const PairState& ps : pairs_) {
                if (!ps.usable)
                    continue;
                if (!(mask & (1u << ps.idx1)) && !(mask & (1u << ps.idx2))) {
                    mask_applies_[mask] = 1;
                    break;
                }
            }
        }
    }
}

HeilbronnVerdict CriterionEngine::verdict_from_roots(
    const std::function<bool(uint32_t)>& poly_has_root_mod) const
{
    if (pairs_.empty())
        return HeilbronnVerdict{std::nullopt, InconclusiveReason::no_prime_pair};

    std::vector<int8_t> root(primes_.size(), -1);
    auto has_root_at = [&](unsigned idx) {
        if (root[idx] < 0)
            root[idx] = poly_has_root_mod(primes_[idx]) ? 1 : 0;
        return root[idx] == 1;
    };

    std::array<uint64_t, 4> blocked{0, 0, 0, 0};
    for (const PairState& ps : pairs_) {
        if (!ps.usable) {
            ++blocked[static_cast<unsigned>(ps.gap)];
            continue;
        }
        if (has_root_at(ps.idx1) || has_root_at(ps.idx2)) {
            ++blocked[static_cast<unsigned>(InconclusiveReason::all_pairs_have_roots)];
            continue;
        }
        const Decomposition& d = *ps.usable;
        HeilbronnWitness w;
        w.p = p_;
        w.n = n_;
        w.q1 = d.q1;
        w.q2 = d.q2;
        w.u = d.u;
        w.v = d.v;
        w.a = d.u * d.q1;
        w.b = d.v * d.q2;
        w.g = g_;
        w.adjusted = false;
        return HeilbronnVerdict{w, std::nullopt};
    }

    unsigned dominant = 0;
    for (unsigned r = 1; r < blocked.size(); ++r)
        if (blocked[r] > blocked[dominant])
            dominant = r;
    return HeilbronnVerdict{std::nullopt, static_cast<InconclusiveReason>(dominant)};
}

HeilbronnVerdict CriterionEngine::verdict(const MonicIntPolynomial& f) const
{
    if (f.degree() != n_)
        throw precondition_error("polynomial degree does not match the engine");
    if (!is_eisenstein_at(f, p_))
        throw precondition_error("criterion needs a p-Eisenstein polynomial");
    auto verdict = verdict_from_roots(
        [&](uint32_t q) { return has_root_mod(f, q); });
    if (verdict.applies() && !verify_witness(f, *verdict.witness))
        throw std::logic_error("witness failed re-verification");
    return verdict;
}

HeilbronnVerdict CriterionEngine::verdict(std::span<const int64_t> coeffs) const
{
    if (coeffs.size() != n_)
        throw precondition_error("polynomial degree does not match the engine");
    if (!is_eisenstein_at(coeffs, p_))
        throw precondition_error("criterion needs a p-Eisenstein polynomial");
    auto verdict = verdict_from_roots(
        [&](uint32_t q) { return has_root_mod(coeffs, q); });
    if (verdict.applies() && !verify_witness(coeffs, *verdict.witness))
        throw std::logic_error("witness failed re-verification");
    return verdict;
}

uint32_t CriterionEngine::root_mask(std::span<const int64_t> coeffs) const
{
    uint32_t mask = 0;
    for (unsigned i = 0; i < primes_.size(); ++i)
        if (has_root_mod(coeffs, primes_[i]))
            mask |= 1u << i;
    return mask;
}

bool CriterionEngine::mask_applies(uint32_t mask) const
{
    if (mask_applies_.empty())
        throw precondition_error("mask table needs at most 16 search primes; "
                                 "lower the pair bound");
    return mask_applies_[mask] != 0;
}

HeilbronnVerdict criterion_verdict(const MonicIntPolynomial& f, uint64_t p,
                                   uint64_t pair_bound)
{
    return CriterionEngine(p, f.degree(), pair_bound).verdict(f);
}

Theorem2Result theorem2_witness(uint64_t p, unsigned n, uint64_t q1, uint64_t q2)
{
    require_decomposable_triple(p, q1, q2);
    if (n < 1)
        throw precondition_error("theorem2_witness needs n >= 1");
    const uint64_t g = std::gcd(p - 1, static_cast<uint64_t>(n));

    Theorem2Result res;
    if (g == 1) {
        // Residue condition is vacuous; the plain scan already yields a
        // decomposition with q2 coprime to v, no repair step needed.
        if (auto d = frobenius_decompose(p, q1, q2)) {
            res.outcome = Theorem2Result::Outcome::found;
            res.decomp = d;
            res.pre_adjust_u = d->u;
        }
        return res;
    }

    if (p <= q1 + 2 * q1 * q2) { // X = p/q1 - 2*q2 <= 1
        res.outcome = Theorem2Result::Outcome::p_too_small;
        return res;
    }
    const uint64_t e = (p - 1) / g;
    const uint64_t p_mod_q2 = p % q2;
    for (uint64_t u = 1; u * q1 < p - 2 * q1 * q2; ++u) {
        if (u % q1 == 0)
            continue;
        const uint64_t a = u * q1;
        if (a % q2 != p_mod_q2)
            continue;
        if (pow_mod(a % p, e, p) != 1)
            continue;
        const uint64_t v = (p - a) / q2;
        Decomposition repaired =
            adjust_for_criterion(Decomposition{p, q1, q2, u, v});
        if (repaired.u != u
            && pow_mod((repaired.u * q1) % p, e, p) != 1)
            continue; // the shifted summand lost the residue property
        res.outcome = Theorem2Result::Outcome::found;
        res.decomp = repaired;
        res.pre_adjust_u = u;
        res.adjusted = repaired.u != u;
        return res;
    }
    return res;
}

uint64_t count_admissible(uint64_t p, unsigned n, uint64_t q1, uint64_t q2)
{
    require_decomposable_triple(p, q1, q2);
    if (n < 1)
        throw precondition_error("count_admissible needs n >= 1");
    const uint64_t g = std::gcd(p - 1, static_cast<uint64_t>(n));
    if (p <= 2 * q1 * q2)
        return 0;
    const uint64_t e = (p - 1) / g;
    const uint64_t p_mod_q2 = p % q2;
    uint64_t count = 0;
    for (uint64_t u = 1; u * q1 < p - 2 * q1 * q2; ++u) {
        if (u % q1 == 0)
            continue;
        const uint64_t a = u * q1;
        if (a % q2 != p_mod_q2)
            continue;
        if (g > 1 && pow_mod(a % p, e, p) != 1)
            continue;
        ++count;
    }
    return count;
}

MainTermError main_term_and_error(uint64_t p, unsigned n, uint64_t q1,
                                  uint64_t q2, double pv_constant)
{
    require_decomposable_triple(p, q1, q2);
    if (!(pv_constant >= 0))
        throw precondition_error("pv constant must be >= 0");
    const auto g = static_cast<double>(std::gcd(p - 1, static_cast<uint64_t>(n)));
    const double x = static_cast<double>(p) / static_cast<double>(q1)
                     - 2.0 * static_cast<double>(q2);
    const double m = static_cast<double>(p) * static_cast<double>(q1)
                     * static_cast<double>(q2);
    MainTermError out;
    out.main = x * (static_cast<double>(q1) - 1) / static_cast<double>(q1)
               / static_cast<double>(q2) / g;
    out.error = pv_constant * std::sqrt(m) * std::log(m);
    return out;
}

GcdCondition gcd_condition_holds(uint64_t p, uint64_t n, double pair_cutoff,
                                 double pv_constant)
{
    if (!is_prime(p) || p < 5)
        throw precondition_error("gcd_condition_holds needs a prime p >= 5");
    if (!(pair_cutoff >= 2))
        throw precondition_error("gcd_condition_holds needs cutoff >= 2");
    if (!(pv_constant > 0))
        throw precondition_error("pv constant must be positive");
    GcdCondition out;
    out.g = std::gcd(p - 1, n);
    const double dp = static_cast<double>(p);
    const double sqrt_p = std::sqrt(dp);
    const double y = pair_cutoff;
    out.sufficient_rhs =
        sqrt_p / (2 * pv_constant * y * y * y * std::log(dp * y * y))
        - 1.0 / (pv_constant * sqrt_p * std::log(dp));
    out.sufficient = static_cast<double>(out.g) < out.sufficient_rhs;
    out.hypothesis_rhs = sqrt_p / (std::log(dp) * std::log(dp));
    out.hypothesis = static_cast<double>(out.g) < out.hypothesis_rhs;
    return out;
}

} // namespace heilbronn
