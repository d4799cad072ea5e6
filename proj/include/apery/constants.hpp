#pragma once

#include "apery/precision.hpp"

namespace apery::constants {

// Fundamental constants at the thread's current working precision.
// Values are cached per precision; caches are immutable once filled and
// safe for concurrent reads.
Real pi();
Real euler_gamma();
Real log2();

// Bernoulli number B_{2n}, computed from zeta(2n) (stable at all orders,
// unlike the defining recurrence).
Real bernoulli_2n(unsigned n);

// Riemann zeta at a positive integer >= 2 via mpfr. This is the reference
// route; polylog::zeta provides the independent Euler-Maclaurin route.
Real zeta_ref(unsigned k);

} // namespace apery::constants
