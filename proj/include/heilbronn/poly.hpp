#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heilbronn/numeric.hpp"

namespace heilbronn {

/* Monic polynomial x^n + a_{n-1} x^{n-1} + ... + a_1 x + a_0 over Z,
 * stored as the ascending coefficient list (a_0, ..., a_{n-1}); the
 * leading 1 is implicit. Immutable after construction. */
class MonicIntPolynomial {
  public:
    explicit MonicIntPolynomial(std::vector<BigInt> ascending_coeffs);

    // "a0,a1,...,a{n-1}" <-> the same text form used by the CLI.
    static MonicIntPolynomial from_text(const std::string& text);
    std::string to_text() const;

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(std::size_t i) const { return coeffs_[i]; }

    bool operator==(const MonicIntPolynomial&) const = default;

  private:
    std::vector<BigInt> coeffs_;
};

// max(1, |a_0|, ..., |a_{n-1}|); the implicit leading 1 contributes.
BigInt height(const MonicIntPolynomial& f);

// p | a_i for all i < n and p^2 does not divide a_0.
bool is_eisenstein_at(const MonicIntPolynomial& f, uint64_t p);
bool is_eisenstein_at(std::span<const int64_t> ascending_coeffs, uint64_t p);

/* Reduction of a monic polynomial mod a small prime q: residues of
 * a_0..a_{n-1} in [0, q-1], leading 1 still implicit. */
struct ResiduePolynomial {
    uint32_t modulus = 0;
    std::vector<uint32_t> coeffs; // ascending, length n

    bool has_root() const; // exists r in [0, q-1] with f(r) = 0 in F_q
};

ResiduePolynomial reduce_mod(const MonicIntPolynomial& f, uint32_t q);
ResiduePolynomial reduce_mod(std::span<const int64_t> ascending_coeffs, uint32_t q);

bool has_root_mod(const MonicIntPolynomial& f, uint32_t q);
bool has_root_mod(std::span<const int64_t> ascending_coeffs, uint32_t q);

} // namespace heilbronn
