#pragma once

#include <cstdint>
#include <vector>

namespace heilbronn {

// Primes <= limit, ascending (sieve of Eratosthenes).
std::vector<uint32_t> primes_up_to(uint32_t limit);

// pi(limit), by sieve.
uint64_t prime_count(uint32_t limit);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

} // namespace heilbronn
