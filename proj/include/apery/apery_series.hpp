#pragma once

#include "apery/complex.hpp"
#include "apery/precision.hpp"
#include "apery/root_of_unity.hpp"
#include "apery/series.hpp"

namespace apery {

// Parameters of the bilateral central-binomial series
//   sum_{n=-inf}^{inf} 4^{n+a} x^{-n} / ((n+b)^q binom(2n+2a, n+a)).
struct CpasParams {
    unsigned q = 1;
    Complex a;
    RootOfUnity x;
    Complex b; // defaults to a (set by make())

    static CpasParams make(unsigned q, Complex a, RootOfUnity x);
    static CpasParams make(unsigned q, Complex a, RootOfUnity x, Complex b);

    void validate() const;
};

// Fuss-Catalan series parameters; radius(m) = (m-1)^{m-1}/m^m, with the
// m = 1 convention radius = 1.
struct FussParams {
    long m = 2;
    unsigned p = 0;
    Complex x;

    static Real radius(long m);
    void validate() const;
};

// The bilateral series split at n = 0, each side summed by a term-ratio
// recurrence with grouped acceleration. The positive side decays like
// n^{1/2-q} (conditionally convergent for q = 1), the negative side like
// n^{-q-1/2}.
SeriesResult cpas_lhs(const CpasParams& params, const PrecisionContext& ctx);

// sum_{n>=1} binom(2n,n) x^n / (n^{p+1} 4^n) for p >= -1, |x| <= 1,
// (p, x) != (-1, 1).
SeriesResult cb_series(int p, const Complex& x, const PrecisionContext& ctx);

// Corollary limit a -> 1/2 of the bilateral series:
// sum_{n>=1} n/(n-1/2)^q binom(2n,n)/4^n x^{1-n}, (q, x) != (1, 1).
SeriesResult half_integer_lhs(unsigned q, const RootOfUnity& x, const PrecisionContext& ctx);

// Fuss-Catalan generating function: the branch of G = 1 + x G^m with
// G(0) = 1, by Newton iteration (fixed point near the branch radius).
Complex fc_G(long m, const Complex& x, const PrecisionContext& ctx);

// sum_{n>=1} binom(mn,n) x^n / n^{p+1} inside (and on) the radius.
SeriesResult fc_series(long m, unsigned p, const Complex& x, const PrecisionContext& ctx);

// Gamma(a)^2 4^a / (2 Gamma(2a)), the closed form of
// sum_{n>=0} binom(2n,n)/((n+a) 4^n); the direct sum is exposed separately
// as a verification mode.
Complex param_cb_closed(const Complex& a, const PrecisionContext& ctx);
SeriesResult param_cb_direct(const Complex& a, const PrecisionContext& ctx);

} // namespace apery
