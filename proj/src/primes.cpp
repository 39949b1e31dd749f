#include "heilbronn/primes.hpp"

#include "heilbronn/numeric.hpp"

namespace heilbronn {

std::vector<uint32_t> primes_up_to(uint32_t limit)
{
    std::vector<uint32_t> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (uint64_t j = i * i; j <= limit; j += i)
                composite[j] = true;
    for (uint32_t i = 2; i <= limit; ++i)
        if (!composite[i])
            out.push_back(i);
    return out;
}

uint64_t prime_count(uint32_t limit)
{
    return primes_up_to(limit).size();
}

bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                       23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    // n-1 = d * 2^r with d odd
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality exactly for all n < 2^64.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                       23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

} // namespace heilbronn
