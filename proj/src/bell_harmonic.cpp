#include "apery/bell_harmonic.hpp"

#include <map>
#include <mutex>

#include "apery/constants.hpp"
#include "apery/gamma.hpp"
#include "apery/polylog.hpp"

namespace apery {

namespace {

unsigned working_digits() {
    return boost::multiprecision::mpfr_float::default_precision();
}

// Binomial row builder for the Bell recurrence.
std::vector<Real> binom_row(unsigned n) {
    std::vector<Real> row(n + 1);
    row[0] = 1;
    for (unsigned j = 1; j <= n; ++j)
        row[j] = row[j - 1] * Real(n - j + 1) / Real(j);
    return row;
}

Real factorial(unsigned n) {
    Real f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Slots of the C generating function Gamma(1+s)e^{gamma s}: slot 1 is 0 and
// slot k is psi^{(k-1)}(1) = (-1)^k (k-1)! zeta(k) for k >= 2. D negates
// every slot.
std::vector<Complex> c_slots(unsigned n, const PrecisionContext& ctx, int sign) {
    std::vector<Complex> xs(n);
    if (n >= 1)
        xs[0] = Complex(0);
    Real fact = 1; // (k-1)!
    for (unsigned k = 2; k <= n; ++k) {
        fact *= (k - 1);
        Real v = fact * zeta(k, ctx);
        if (k % 2 == 1)
            v = -v;
        xs[k - 1] = Complex(sign * v);
    }
    return xs;
}

} // namespace

Complex bell_Y(const std::vector<Complex>& xs) {
    unsigned n = static_cast<unsigned>(xs.size());
    std::vector<Complex> Y(n + 1);
    Y[0] = Complex(1);
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Real> row = binom_row(m - 1);
        Complex acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Complex(row[j]) * xs[m - j - 1] * Y[j];
        Y[m] = acc;
    }
    return Y[n];
}

HarmonicTable::HarmonicTable(long n_max, unsigned k_max)
    : n_max_(n_max), k_max_(k_max),
      strict_((n_max + 1) * (k_max + 1)),
      star_((n_max + 1) * (k_max + 1)) {
    if (n_max < 0)
        throw InvalidInput("HarmonicTable: n_max must be >= 0");
    auto at = [&](std::vector<Real>& t, long n, unsigned k) -> Real& {
        return t[n * (k_max_ + 1) + k];
    };
    for (long n = 0; n <= n_max; ++n) {
        at(strict_, n, 0) = 1;
        at(star_, n, 0) = 1;
    }
    for (long n = 1; n <= n_max; ++n) {
        Real inv_n = Real(1) / Real(n);
        for (unsigned k = 1; k <= k_max; ++k) {
            at(strict_, n, k) = at(strict_, n - 1, k) + at(strict_, n - 1, k - 1) * inv_n;
            // star uses the already-updated row n at k-1
            at(star_, n, k) = at(star_, n - 1, k) + at(star_, n, k - 1) * inv_n;
        }
    }
}

Real HarmonicTable::mhs(long n, unsigned k) const {
    if (k == 0)
        return Real(1);
    if (n < 0 || k > k_max_)
        throw InvalidInput("HarmonicTable::mhs: index out of range");
    if (static_cast<long>(k) > n)
        return Real(0);
    if (n > n_max_)
        throw InvalidInput("HarmonicTable::mhs: n exceeds n_max");
    return strict_[n * (k_max_ + 1) + k];
}

Real HarmonicTable::mhs_star(long n, unsigned k) const {
    if (k == 0)
        return Real(1);
    if (n < 0 || k > k_max_)
        throw InvalidInput("HarmonicTable::mhs_star: index out of range");
    if (n == 0)
        return Real(0);
    if (n > n_max_)
        throw InvalidInput("HarmonicTable::mhs_star: n exceeds n_max");
    return star_[n * (k_max_ + 1) + k];
}

Real mhs(long n, unsigned k, const PrecisionContext& ctx) {
    ctx.validate();
    if (n < 0)
        throw InvalidInput("mhs: n must be >= 0");
    return HarmonicTable(n, k).mhs(n, k);
}

Real mhs_star(long n, unsigned k, const PrecisionContext& ctx) {
    ctx.validate();
    if (n < 0)
        throw InvalidInput("mhs_star: n must be >= 0");
    return HarmonicTable(n, k).mhs_star(n, k);
}

Real c_const(unsigned n, const PrecisionContext& ctx) {
    static std::map<std::pair<unsigned, unsigned>, Real> cache;
    static std::mutex mu;
    unsigned d = working_digits();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({d, n});
        if (it != cache.end())
            return it->second;
    }
    Real v = bell_Y(c_slots(n, ctx, +1)).real();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(d, n), v);
    return v;
}

Real d_const(unsigned n, const PrecisionContext& ctx) {
    static std::map<std::pair<unsigned, unsigned>, Real> cache;
    static std::mutex mu;
    unsigned d = working_digits();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({d, n});
        if (it != cache.end())
            return it->second;
    }
    Real v = bell_Y(c_slots(n, ctx, -1)).real();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(d, n), v);
    return v;
}

Complex c_param(unsigned n, const Complex& x, const PrecisionContext& ctx) {
    Complex xp1 = x + Complex(1);
    std::vector<Complex> xs(n);
    if (n >= 1)
        xs[0] = digamma(xp1, ctx) + Complex(constants::euler_gamma());
    for (unsigned k = 2; k <= n; ++k)
        xs[k - 1] = polygamma(k - 1, xp1, ctx);
    return exp(log_gamma(xp1, ctx)) * bell_Y(xs);
}

Complex d_param(unsigned n, const Complex& x, const PrecisionContext& ctx) {
    Complex xp1 = x + Complex(1);
    std::vector<Complex> xs(n);
    if (n >= 1)
        xs[0] = -(digamma(xp1, ctx) + Complex(constants::euler_gamma()));
    for (unsigned k = 2; k <= n; ++k)
        xs[k - 1] = -polygamma(k - 1, xp1, ctx);
    return bell_Y(xs) / exp(log_gamma(xp1, ctx));
}

Real a_coeff(unsigned k, long n, const PrecisionContext& ctx) {
    if (n < 0)
        throw InvalidInput("a_coeff: n must be >= 0");
    HarmonicTable tab(n, k);
    Real acc(0);
    for (unsigned k1 = 0; k1 <= k; ++k1) {
        unsigned k2 = k - k1;
        acc += tab.mhs_star(n, k1) * c_const(k2, ctx) / factorial(k2);
    }
    return acc;
}

Real b_coeff(unsigned k, long n, const PrecisionContext& ctx) {
    if (n < 0)
        throw InvalidInput("b_coeff: n must be >= 0");
    HarmonicTable tab(n, k);
    Real acc(0);
    for (unsigned k1 = 0; k1 <= k; ++k1) {
        unsigned k2 = k - k1;
        Real t = tab.mhs(n, k1) * d_const(k2, ctx) / factorial(k2);
        if (k1 % 2 == 1)
            t = -t;
        acc += t;
    }
    return acc;
}

} // namespace apery
