#pragma once

#include "cifb/coefficients.hpp"
#include "cifb/polynomial.hpp"

namespace cifb {

// Causal rational transfer function num(z)/den(z) with exact integer
// polynomial coefficients (ascending powers of z).
struct RationalTransfer {
  Polynomial numerator;
  Polynomial denominator;
};

// (z - 1)^k expanded in powers of z, exact signed binomials.  k in 0..64.
Polynomial expand_shifted_power(int k);

// D(z) = (z - 1)^L + sum_{k=1..L} c_k (z - 1)^{k-1}, ascending powers of z.
// With binomial c this is exactly z^L.
Polynomial expand_denominator(const IntVec& c, int L);

// NTF(z) = (z - 1)^L / D(z).
RationalTransfer ntf(const IntVec& c, int L);

// STF(z) = (sum_{k=1..L+1} d_k (z - 1)^{k-1}) / D(z); binomial c and
// d = [1, 0, ...] reduce it to exactly 1 / z^L.
RationalTransfer stf(const IntVec& c, const IntVec& d, int L);

// |num(e^{jw})| / |den(e^{jw})| in double precision, 0 <= omega <= pi.
// Each polynomial is evaluated in whichever of the z or u = z - 1 bases
// carries the smaller floating-point error bound, so heavily cancellative
// cases like (z - 1)^30 near omega = 0 stay accurate to ~1e-12 relative.
double eval_magnitude(const RationalTransfer& tf, double omega);

}  // namespace cifb
