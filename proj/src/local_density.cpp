#include "heilbronn/local_density.hpp"

#include <cmath>

#include "heilbronn/primes.hpp"

namespace heilbronn {

namespace {

void require_prime(uint64_t p, const char* who)
{
    if (!is_prime(p))
        throw precondition_error(std::string(who) + " needs a prime modulus");
}

} // namespace

BigInt count_rootless(uint64_t p, unsigned n)
{
    require_prime(p, "count_rootless");
    if (n < 1)
        throw precondition_error("count_rootless needs n >= 1");
    if (n >= p) {
        // binom(p,k) vanishes for k > p, closing the alternating sum.
        return bigint_pow(BigInt(p) - 1, static_cast<unsigned>(p))
               * bigint_pow(BigInt(p), n - static_cast<unsigned>(p));
    }
    BigInt acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigInt term = binomial(p, k) * bigint_pow(BigInt(p), n - k);
        if (k & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

Rational rootless_density(uint64_t p, unsigned n)
{
    return Rational(count_rootless(p, n), bigint_pow(BigInt(p), n));
}

Rational eisenstein_density(uint64_t p, unsigned n)
{
    require_prime(p, "eisenstein_density");
    if (n < 1)
        throw precondition_error("eisenstein_density needs n >= 1");
    return Rational(BigInt(p) - 1, bigint_pow(BigInt(p), n + 1));
}

RationalInterval dubickas_density(unsigned n, uint64_t truncation_bound)
{
    if (n < 2)
        throw precondition_error("dubickas_density needs n >= 2");
    if (truncation_bound < 2)
        throw precondition_error("dubickas_density needs truncation bound >= 2");
    if (truncation_bound > (1ULL << 31))
        throw precondition_error("truncation bound too large to sieve");

    Rational product = 1;
    for (uint32_t q : primes_up_to(static_cast<uint32_t>(truncation_bound))) {
        BigInt qn = bigint_pow(BigInt(q), n);
        // 1 - 1/q^n + 1/q^{n+1} = (q^{n+1} - q + 1) / q^{n+1}
        product *= Rational(qn * q - q + 1, qn * q);
    }
    Rational lo = 1 - product;
    Rational tail(BigInt(1),
                  BigInt(n - 1) * bigint_pow(BigInt(truncation_bound), n - 1));
    return RationalInterval(lo, lo + tail);
}

DensityBounds density_bounds(uint64_t p, unsigned n)
{
    require_prime(p, "density_bounds");
    if (n < 2)
        throw precondition_error("density_bounds needs n >= 2");
    const BigInt bp(p);
    return DensityBounds{Rational(bp * bp - 1, 3 * bp * bp),
                         Rational(bp - 1, 2 * bp)};
}

namespace {

Rational epsilon_from_prime_count(uint64_t t)
{
    // (1 + t) * (3/4)^t
    return Rational(BigInt(t + 1) * bigint_pow(BigInt(3), static_cast<unsigned>(t)),
                    bigint_pow(BigInt(4), static_cast<unsigned>(t)));
}

// Largest integer Y with Y^4 < p (never a tie: no prime is a fourth power).
uint64_t fourth_root_cutoff(uint64_t p)
{
    auto fourth = [](uint64_t y) {
        unsigned __int128 s = static_cast<unsigned __int128>(y) * y;
        return s * s;
    };
    uint64_t y = static_cast<uint64_t>(std::pow(static_cast<double>(p), 0.25));
    while (y > 0 && fourth(y) >= p)
        --y;
    while (fourth(y + 1) < p)
        ++y;
    return y;
}

} // namespace

Rational epsilon(uint64_t p)
{
    require_prime(p, "epsilon");
    uint64_t y = fourth_root_cutoff(p);
    return epsilon_from_prime_count(prime_count(static_cast<uint32_t>(y)));
}

Rational epsilon_hat(uint64_t p, double pair_cutoff)
{
    require_prime(p, "epsilon_hat");
    if (p < 5)
        throw precondition_error("epsilon_hat needs p >= 5");
    if (!(pair_cutoff >= 1))
        throw precondition_error("epsilon_hat needs cutoff >= 1");
    auto y = static_cast<uint32_t>(std::floor(pair_cutoff));
    return epsilon_from_prime_count(prime_count(y));
}

double epsilon_hat_default_cutoff(uint64_t p)
{
    return std::pow(std::log(static_cast<double>(p)), 0.25);
}

Rational epsilon_hat(uint64_t p)
{
    require_prime(p, "epsilon_hat");
    if (p < 5)
        throw precondition_error("epsilon_hat needs p >= 5");
    double y = epsilon_hat_default_cutoff(p);
    return epsilon_hat(p, y < 1 ? 1.0 : y);
}

Rational epsilon_refined(uint64_t p, unsigned n)
{
    require_prime(p, "epsilon_refined");
    if (n < 2)
        throw precondition_error("epsilon_refined needs n >= 2");
    uint64_t y = fourth_root_cutoff(p);
    auto primes = primes_up_to(static_cast<uint32_t>(y));
    Rational product = 1;
    Rational ratio_max = 0;
    for (uint32_t q : primes) {
        Rational c = rootless_density(q, n);
        product *= 1 - c;
        Rational ratio = c / (1 - c);
        if (ratio > ratio_max)
            ratio_max = ratio;
    }
    return (1 + Rational(primes.size()) * ratio_max) * product;
}

} // namespace heilbronn
