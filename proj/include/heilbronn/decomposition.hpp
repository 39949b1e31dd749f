#pragma once

#include <cstdint>
#include <numeric>
#include <optional>

#include "heilbronn/errors.hpp"

namespace heilbronn {

/* A certified splitting p = u*q1 + v*q2 of a prime over two smaller
 * primes q1 < q2 < p, with q1 coprime to u and q2 coprime to v. */
struct Decomposition {
    uint64_t p = 0;
    uint64_t q1 = 0;
    uint64_t q2 = 0;
    uint64_t u = 0;
    uint64_t v = 0;

    // Full invariant re-check, independent of how the fields were produced.
    bool valid() const
    {
        return q1 < q2 && q2 < p && u >= 1 && v >= 1 && p == u * q1 + v * q2
               && std::gcd(u, q1) == 1 && std::gcd(v, q2) == 1;
    }

    bool operator==(const Decomposition&) const = default;
};

void require_decomposable_triple(uint64_t p, uint64_t q1, uint64_t q2);

/* Minimal-u decomposition whose (u, v) additionally satisfies `accept`.
 * Plain scan over u; every hit is already coprime-filtered. */
template <typename Pred>
std::optional<Decomposition> frobenius_decompose_if(uint64_t p, uint64_t q1,
                                                    uint64_t q2, Pred&& accept)
{
    require_decomposable_triple(p, q1, q2);
    for (uint64_t u = 1; u * q1 + q2 <= p; ++u) {
        if (u % q1 == 0)
            continue;
        uint64_t rest = p - u * q1;
        if (rest % q2 != 0)
            continue;
        uint64_t v = rest / q2;
        if (v % q2 == 0)
            continue;
        if (!accept(u, v))
            continue;
        return Decomposition{p, q1, q2, u, v};
    }
    return std::nullopt;
}

// Minimal-u decomposition, or nothing (e.g. p in {7, 11, 19} for q1=2, q2=3).
std::optional<Decomposition> frobenius_decompose(uint64_t p, uint64_t q1,
                                                 uint64_t q2);

// q1^2 q2^2; every prime at or above it is guaranteed a decomposition.
uint64_t guarantee_threshold(uint64_t q1, uint64_t q2);

/* Repair q2 | v: returns the first of (u, v), (u+q2, v-q1), (u+2q2, v-2q1)
 * meeting both coprimality conditions with positive parts. The input must
 * satisfy p = u*q1 + v*q2, gcd(u, q1) = 1, v >= 1 and leave headroom
 * u + 2*q2 < p/q1; otherwise this throws. */
Decomposition adjust_for_criterion(const Decomposition& d);

} // namespace heilbronn
