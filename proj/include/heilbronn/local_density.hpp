#pragma once

#include <cstdint>

#include "heilbronn/numeric.hpp"

namespace heilbronn {

/* Exact local densities for monic degree-n polynomials.
 *
 *   A_p(n)  count of monic degree-n polynomials over F_p without a root
 *   C_p(n)  = A_p(n) / p^n, the rootless density
 *   E_p(n)  = (p-1) / p^{n+1}, the p-Eisenstein density
 */

// A_p(n) = sum_{k=0}^{n} (-1)^k binom(p,k) p^{n-k}; equals (p-1)^p p^{n-p}
// once n >= p.
BigInt count_rootless(uint64_t p, unsigned n);

Rational rootless_density(uint64_t p, unsigned n);

Rational eisenstein_density(uint64_t p, unsigned n);

/* Certified enclosure of 1 - prod_p (1 - 1/p^n + 1/p^{n+1}), the density of
 * monic degree-n polynomials that are Eisenstein at some prime. lo is the
 * truncated product over p <= B; the tail correction is bounded by
 * sum_{m>B} m^-n <= 1/((n-1) B^{n-1}). */
RationalInterval dubickas_density(unsigned n, uint64_t truncation_bound);

// (p^2-1)/(3p^2) <= C_p(n) <= (p-1)/(2p) for all n >= 2.
struct DensityBounds {
    Rational lower;
    Rational upper;

    bool operator==(const DensityBounds&) const = default;
};
DensityBounds density_bounds(uint64_t p, unsigned n);

/* Effective bound eps(p) = (1 + pi(Y)) (3/4)^{pi(Y)} with Y the largest
 * integer satisfying Y^4 < p; the criterion-applies proportion is at least
 * 1 - eps(p) in the limit. Values above 1 are vacuous. */
Rational epsilon(uint64_t p);

// Same shape with a caller-chosen cutoff; pi is evaluated at floor(Y).
Rational epsilon_hat(uint64_t p, double pair_cutoff);

// Default cutoff Y = (log p)^{1/4}.
Rational epsilon_hat(uint64_t p);
double epsilon_hat_default_cutoff(uint64_t p);

// Sharper n-aware diagnostic: (1 + t*D) prod_{q <= Y(p)} (1 - C_q(n)) with
// D = max C_q(n)/(1-C_q(n)). Not the published bound; reported separately.
Rational epsilon_refined(uint64_t p, unsigned n);

} // namespace heilbronn
