#include "heilbronn/decomposition.hpp"

#include "heilbronn/primes.hpp"

namespace heilbronn {

void require_decomposable_triple(uint64_t p, uint64_t q1, uint64_t q2)
{
    if (!(q1 < q2 && q2 < p))
        throw precondition_error("decomposition needs q1 < q2 < p");
    if (!is_prime(p) || !is_prime(q1) || !is_prime(q2))
        throw precondition_error("decomposition needs three primes");
}

std::optional<Decomposition> frobenius_decompose(uint64_t p, uint64_t q1,
                                                 uint64_t q2)
{
    return frobenius_decompose_if(p, q1, q2, [](uint64_t, uint64_t) { return true; });
}

uint64_t guarantee_threshold(uint64_t q1, uint64_t q2)
{
    if (!(q1 < q2) || !is_prime(q1) || !is_prime(q2))
        throw precondition_error("guarantee_threshold needs primes q1 < q2");
    return q1 * q1 * q2 * q2;
}

Decomposition adjust_for_criterion(const Decomposition& d)
{
    if (d.v < 1 || std::gcd(d.u, d.q1) != 1 || d.p != d.u * d.q1 + d.v * d.q2)
        throw precondition_error("adjust_for_criterion input is not a splitting "
                                 "with gcd(u,q1)=1 and v>=1");
    for (uint64_t step = 0; step <= 2; ++step) {
        uint64_t u = d.u + step * d.q2;
        if (d.v <= step * d.q1)
            break;
        uint64_t v = d.v - step * d.q1;
        Decomposition candidate{d.p, d.q1, d.q2, u, v};
        if (candidate.valid())
            return candidate;
    }
    // Reachable only when the u + 2*q2 < p/q1 headroom was not honoured.
    throw precondition_error("adjust_for_criterion: no candidate validates");
}

} // namespace heilbronn
