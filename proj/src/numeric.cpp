#include "heilbronn/numeric.hpp"

#include <cctype>

namespace heilbronn {

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

RationalInterval::RationalInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_))
    , hi(std::move(hi_))
{
    if (lo > hi)
        throw precondition_error("interval requires lo <= hi");
}

Rational rational_pow(const Rational& x, unsigned k)
{
    Rational acc = 1;
    Rational base = x;
    for (; k; k >>= 1) {
        if (k & 1)
            acc *= base;
        if (k > 1)
            base *= base;
    }
    return acc;
}

BigInt bigint_pow(const BigInt& x, unsigned k)
{
    return boost::multiprecision::pow(x, k);
}

BigInt binomial(uint64_t n, uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i; // exact: prefix products of binomials are integers
    }
    return acc;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m)
{
    if (m == 1)
        return 0;
    uint64_t acc = 1;
    base %= m;
    for (; exp; exp >>= 1) {
        if (exp & 1)
            acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
    }
    return acc;
}

BigInt parse_bigint(const std::string& text)
{
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    std::size_t end = text.size();
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    if (i == end)
        throw precondition_error("empty integer literal");
    std::size_t digits_from = i;
    if (text[i] == '+' || text[i] == '-')
        ++digits_from;
    if (digits_from == end)
        throw precondition_error("integer literal has no digits: '" + text + "'");
    for (std::size_t j = digits_from; j < end; ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw precondition_error("bad integer literal: '" + text + "'");
    return BigInt(text.substr(i, end - i));
}

} // namespace heilbronn
