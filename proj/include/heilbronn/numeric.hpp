#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "heilbronn/errors.hpp"

namespace heilbronn {

// All counts and coefficients that may leave the 64-bit range are carried
// as cpp_int; every density is an exact reduced rational.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

double to_double(const Rational& r);

// Certified enclosure of a real number, lo <= hi.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval(Rational lo_, Rational hi_);

    Rational width() const { return hi - lo; }
    bool contains(const RationalInterval& inner) const
    {
        return lo <= inner.lo && inner.hi <= hi;
    }
};

// x^k with k >= 0.
Rational rational_pow(const Rational& x, unsigned k);
BigInt bigint_pow(const BigInt& x, unsigned k);

BigInt binomial(uint64_t n, uint64_t k);

// (a * b) mod m and (base^exp) mod m for m < 2^63, via 128-bit products.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Strict integer parse (optional sign, digits only); throws precondition_error.
BigInt parse_bigint(const std::string& text);

} // namespace heilbronn
