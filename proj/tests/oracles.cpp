#include "oracles.hpp"

#include <numeric>

namespace oracle {

namespace {

uint64_t slow_pow(uint64_t r, unsigned e, uint64_t q)
{
    uint64_t acc = 1 % q;
    for (unsigned i = 0; i < e; ++i)
        acc = acc * (r % q) % q;
    return acc;
}

uint64_t nonneg_residue(int64_t a, uint64_t q)
{
    int64_t r = a % static_cast<int64_t>(q);
    if (r < 0)
        r += static_cast<int64_t>(q);
    return static_cast<uint64_t>(r);
}

} // namespace

bool has_root(const std::vector<int64_t>& ascending_coeffs, uint64_t q)
{
    const auto n = static_cast<unsigned>(ascending_coeffs.size());
    for (uint64_t r = 0; r < q; ++r) {
        uint64_t value = slow_pow(r, n, q);
        for (unsigned i = 0; i < n; ++i)
            value = (value + nonneg_residue(ascending_coeffs[i], q) * slow_pow(r, i, q)) % q;
        if (value == 0)
            return true;
    }
    return false;
}

uint64_t count_rootless(uint64_t p, unsigned n)
{
    std::vector<int64_t> coeffs(n, 0);
    uint64_t hits = 0;
    auto walk = [&](auto&& self, unsigned axis) -> void {
        if (axis == n) {
            if (!has_root(coeffs, p))
                ++hits;
            return;
        }
        for (uint64_t c = 0; c < p; ++c) {
            coeffs[axis] = static_cast<int64_t>(c);
            self(self, axis + 1);
        }
    };
    walk(walk, 0);
    return hits;
}

uint64_t eisenstein_tuples_mod_p2(uint64_t p, unsigned n)
{
    const uint64_t p2 = p * p;
    std::vector<uint64_t> coeffs(n, 0);
    uint64_t hits = 0;
    auto walk = [&](auto&& self, unsigned axis) -> void {
        if (axis == n) {
            if (coeffs[0] % p != 0 || coeffs[0] % p2 == 0)
                return;
            for (unsigned i = 1; i < n; ++i)
                if (coeffs[i] % p != 0)
                    return;
            ++hits;
            return;
        }
        for (uint64_t c = 0; c < p2; ++c) {
            coeffs[axis] = c;
            self(self, axis + 1);
        }
    };
    walk(walk, 0);
    return hits;
}

std::set<uint64_t> power_residues(uint64_t p, unsigned n)
{
    std::set<uint64_t> out;
    for (uint64_t x = 1; x < p; ++x)
        out.insert(slow_pow(x, n, p));
    return out;
}

std::optional<std::pair<uint64_t, uint64_t>> min_decomposition(uint64_t p,
                                                               uint64_t q1,
                                                               uint64_t q2)
{
    for (uint64_t u = 1; u * q1 < p; ++u) {
        if (std::gcd(u, q1) != 1)
            continue;
        const uint64_t rest = p - u * q1;
        if (rest % q2 != 0 || rest == 0)
            continue;
        const uint64_t v = rest / q2;
        if (std::gcd(v, q2) != 1)
            continue;
        return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::vector<uint64_t> admissible_us(uint64_t p, unsigned n, uint64_t q1,
                                    uint64_t q2)
{
    std::vector<uint64_t> out;
    if (p <= 2 * q1 * q2)
        return out;
    const uint64_t g = std::gcd(p - 1, static_cast<uint64_t>(n));
    const auto residues = power_residues(p, static_cast<unsigned>(g));
    // x^n and x^g reach the same subgroup, so membership via the g-th powers
    for (uint64_t u = 1; u * q1 < p - 2 * q1 * q2; ++u) {
        if (std::gcd(u, q1) != 1)
            continue;
        if ((u * q1) % q2 != p % q2)
            continue;
        if (residues.count(u * q1 % p) == 0)
            continue;
        out.push_back(u);
    }
    return out;
}

namespace {

bool tuple_satisfies(const std::vector<int64_t>& coeffs, uint64_t p,
                     const std::vector<uint32_t>& rootless,
                     const std::vector<uint32_t>& rooted)
{
    const auto sp = static_cast<int64_t>(p);
    if (coeffs[0] % sp != 0 || (coeffs[0] / sp) % sp == 0)
        return false;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] % sp != 0)
            return false;
    for (uint32_t q : rootless)
        if (has_root(coeffs, q))
            return false;
    for (uint32_t q : rooted)
        if (!has_root(coeffs, q))
            return false;
    return true;
}

} // namespace

uint64_t count_box(uint64_t p, unsigned n, int64_t bound,
                   const std::vector<uint32_t>& rootless,
                   const std::vector<uint32_t>& rooted)
{
    std::vector<int64_t> coeffs(n, 0);
    uint64_t hits = 0;
    auto walk = [&](auto&& self, unsigned axis) -> void {
        if (axis == n) {
            if (tuple_satisfies(coeffs, p, rootless, rooted))
                ++hits;
            return;
        }
        for (int64_t a = -bound + 1; a <= bound; ++a) {
            coeffs[axis] = a;
            self(self, axis + 1);
        }
    };
    walk(walk, 0);
    return hits;
}

uint64_t count_residue_classes(uint64_t p, unsigned n, uint64_t m,
                               const std::vector<uint32_t>& rootless,
                               const std::vector<uint32_t>& rooted)
{
    std::vector<int64_t> coeffs(n, 0);
    uint64_t hits = 0;
    auto walk = [&](auto&& self, unsigned axis) -> void {
        if (axis == n) {
            // a residue class is Eisenstein iff its least representative is:
            // both conditions only involve values mod p^2 | m
            if (tuple_satisfies(coeffs, p, rootless, rooted))
                ++hits;
            return;
        }
        for (uint64_t a = 0; a < m; ++a) {
            coeffs[axis] = static_cast<int64_t>(a);
            self(self, axis + 1);
        }
    };
    walk(walk, 0);
    return hits;
}

} // namespace oracle
