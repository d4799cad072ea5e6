#pragma once

#include <functional>

#include "apery/complex.hpp"
#include "apery/precision.hpp"
#include "apery/root_of_unity.hpp"

namespace apery {

struct SeriesResult {
    Complex value;
    Real err_estimate;    // heuristic, not a proved enclosure
    long terms_used = 0;
    bool converged = false;
};

// Term callbacks are invoked with consecutive, strictly increasing indices,
// so stateful lambdas may advance internal recurrences in O(1) per call.
using TermFn = std::function<Complex(long)>;

// Plain summation for series whose terms eventually decrease fast enough
// for a geometric tail bound. Stops when |term| < tol/8 for 4 consecutive
// indices and the ratio bound (estimated from the last 8 terms, capped at
// 0.99) puts the tail below tol/2.
SeriesResult sum_series(const TermFn& term, long start, const PrecisionContext& ctx);

// Levin u-transform applied to partial sums of `group` consecutive terms.
// Handles algebraically convergent and (once grouped) conditionally
// convergent series. Falls back to Richardson extrapolation of the grouped
// partial sums if the transform's loss-of-precision monitor trips.
SeriesResult sum_series_levin(const TermFn& term, long start, const PrecisionContext& ctx,
                              unsigned group = 1);

// Full term is term_mag(n) * x^n, summed from n=1, grouped by the order of
// x so that the root-of-unity oscillation cancels before acceleration.
SeriesResult sum_grouped_unit_circle(const TermFn& term_mag, const RootOfUnity& x,
                                     const PrecisionContext& ctx);

// Tail-model extrapolation for series whose partial sums satisfy
//   S(N) = S + sum_{i,j} c_ij log^j(N) / N^{decay-1+i},  j <= max_log_pow,
// the shape of multiple-polylogarithm sums on the unit circle, where the
// harmonic inner sums defeat Levin's remainder model. Partial sums are
// sampled on a geometric grid (rounded to multiples of `group`) and the
// model is solved directly; estimates from increasing model orders must
// agree to the target tolerance.
SeriesResult sum_log_power(const TermFn& term, long start, const PrecisionContext& ctx,
                           unsigned group, unsigned decay, unsigned max_log_pow);

} // namespace apery
