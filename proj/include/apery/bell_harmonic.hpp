#pragma once

#include <vector>

#include "apery/complex.hpp"
#include "apery/precision.hpp"

namespace apery {

// Exponential complete Bell polynomial Y_n(x_1,...,x_n) with Y_0 = 1, via
// the recurrence Y_n = sum_j binom(n-1,j) x_{n-j} Y_j; exact in the inputs.
Complex bell_Y(const std::vector<Complex>& xs);

// Dynamic-programming table of the nested harmonic sums zeta_n({1}_k)
// (strict) and zeta_n^*({1}_k) (non-strict) for n <= n_max, k <= k_max.
// Built once, then read-only.
class HarmonicTable {
  public:
    HarmonicTable(long n_max, unsigned k_max);

    Real mhs(long n, unsigned k) const;      // zeta_n({1}_k)
    Real mhs_star(long n, unsigned k) const; // zeta_n^*({1}_k)

    long n_max() const { return n_max_; }
    unsigned k_max() const { return k_max_; }

  private:
    long n_max_;
    unsigned k_max_;
    std::vector<Real> strict_, star_; // row-major (n, k)
};

// One-off accessors; build a HarmonicTable when many values are needed.
Real mhs(long n, unsigned k, const PrecisionContext& ctx);
Real mhs_star(long n, unsigned k, const PrecisionContext& ctx);

// Constant sequences C_n = Y_n(0, 1! zeta(2), -2! zeta(3), ...) and D_n with
// all slots negated; their exponential generating functions are
// Gamma(1+s) e^{gamma s} and its reciprocal.
Real c_const(unsigned n, const PrecisionContext& ctx);
Real d_const(unsigned n, const PrecisionContext& ctx);

// Parametric generalizations: C_n(x) = Gamma(x+1) Y_n(psi(x+1)+gamma,
// psi'(x+1), ..., psi^{(n-1)}(x+1)) and D_n(x) = Y_n of the negated slots
// divided by Gamma(x+1). C_n(0) = C_n and D_n(0) = D_n.
Complex c_param(unsigned n, const Complex& x, const PrecisionContext& ctx);
Complex d_param(unsigned n, const Complex& x, const PrecisionContext& ctx);

// Laurent-expansion coefficients A_k(n) = sum_{k1+k2=k}
// zeta_n^*({1}_{k1}) C_{k2}/k2! and B_k(n) = sum (-1)^{k1}
// zeta_n({1}_{k1}) D_{k2}/k2!.
Real a_coeff(unsigned k, long n, const PrecisionContext& ctx);
Real b_coeff(unsigned k, long n, const PrecisionContext& ctx);

} // namespace apery
