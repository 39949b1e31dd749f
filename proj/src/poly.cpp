#include "heilbronn/poly.hpp"

#include <sstream>

namespace heilbronn {

MonicIntPolynomial::MonicIntPolynomial(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs))
{
    if (coeffs_.empty())
        throw precondition_error("monic polynomial needs degree >= 1");
}

MonicIntPolynomial MonicIntPolynomial::from_text(const std::string& text)
{
    std::vector<BigInt> coeffs;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        coeffs.push_back(parse_bigint(item));
    if (!text.empty() && text.back() == ',')
        throw precondition_error("trailing comma in polynomial '" + text + "'");
    return MonicIntPolynomial(std::move(coeffs));
}

std::string MonicIntPolynomial::to_text() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out += ',';
        out += coeffs_[i].str();
    }
    return out;
}

BigInt height(const MonicIntPolynomial& f)
{
    BigInt h = 1; // leading coefficient
    for (const BigInt& a : f.coeffs()) {
        BigInt abs_a = a < 0 ? BigInt(-a) : a;
        if (abs_a > h)
            h = abs_a;
    }
    return h;
}

bool is_eisenstein_at(const MonicIntPolynomial& f, uint64_t p)
{
    if (p < 2)
        throw precondition_error("Eisenstein test needs p >= 2");
    const BigInt bp(p);
    for (const BigInt& a : f.coeffs())
        if (a % bp != 0)
            return false;
    return (f.coeff(0) / bp) % bp != 0;
}

bool is_eisenstein_at(std::span<const int64_t> ascending_coeffs, uint64_t p)
{
    if (p < 2)
        throw precondition_error("Eisenstein test needs p >= 2");
    if (ascending_coeffs.empty())
        return false;
    const auto sp = static_cast<int64_t>(p);
    for (int64_t a : ascending_coeffs)
        if (a % sp != 0)
            return false;
    return (ascending_coeffs[0] / sp) % sp != 0;
}

bool ResiduePolynomial::has_root() const
{
    const uint64_t q = modulus;
    for (uint64_t r = 0; r < q; ++r) {
        uint64_t acc = 1; // implicit leading coefficient
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = (acc * r + coeffs[i]) % q;
        if (acc == 0)
            return true;
    }
    return false;
}

ResiduePolynomial reduce_mod(const MonicIntPolynomial& f, uint32_t q)
{
    if (q < 2)
        throw precondition_error("reduction needs modulus >= 2");
    ResiduePolynomial r;
    r.modulus = q;
    r.coeffs.reserve(f.degree());
    for (const BigInt& a : f.coeffs()) {
        auto residue = static_cast<int64_t>(a % q);
        if (residue < 0)
            residue += q;
        r.coeffs.push_back(static_cast<uint32_t>(residue));
    }
    return r;
}

ResiduePolynomial reduce_mod(std::span<const int64_t> ascending_coeffs, uint32_t q)
{
    if (q < 2)
        throw precondition_error("reduction needs modulus >= 2");
    ResiduePolynomial r;
    r.modulus = q;
    r.coeffs.reserve(ascending_coeffs.size());
    for (int64_t a : ascending_coeffs) {
        int64_t residue = a % q;
        if (residue < 0)
            residue += q;
        r.coeffs.push_back(static_cast<uint32_t>(residue));
    }
    return r;
}

bool has_root_mod(const MonicIntPolynomial& f, uint32_t q)
{
    return reduce_mod(f, q).has_root();
}

bool has_root_mod(std::span<const int64_t> ascending_coeffs, uint32_t q)
{
    return reduce_mod(ascending_coeffs, q).has_root();
}

} // namespace heilbronn
