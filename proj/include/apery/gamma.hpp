#pragma once

#include "apery/complex.hpp"
#include "apery/precision.hpp"

namespace apery {

// Complex gamma-family functions. Everything is computed in the log domain
// and ratios are assembled before exponentiating, so arguments up to the
// 1e5 range used by the bilateral series never overflow.

// Principal-branch log Gamma; exp of the result matches Gamma on the real
// axis. Throws PoleError at non-positive integers.
Complex log_gamma(const Complex& z, const PrecisionContext& ctx);

// psi(z) and its derivatives psi^{(j)}(z), j <= 12 (higher orders are not
// needed by any identity here).
Complex digamma(const Complex& z, const PrecisionContext& ctx);
Complex polygamma(unsigned j, const Complex& z, const PrecisionContext& ctx);

// Generalized binomial coefficient Gamma(a+1)/(Gamma(b+1)Gamma(a-b+1)) for
// a, b, a-b not negative integers.
Complex gen_binom(const Complex& a, const Complex& b, const PrecisionContext& ctx);

// 1/binom(2n+2a, n+a) as a total function of the integer n: when a is a
// half-integer and 2n+2a is a non-positive integer the value is exactly 0
// by convention; for n < 0 the reflection of both gamma factors is folded
// into a single branch-consistent expression.
Complex recip_central_binom(long n, const Complex& a, const PrecisionContext& ctx);

} // namespace apery
