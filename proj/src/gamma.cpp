#include "apery/gamma.hpp"

#include "apery/constants.hpp"

namespace apery {

namespace {

unsigned working_digits() {
    return boost::multiprecision::mpfr_float::default_precision();
}

Real working_eps() {
    return pow(Real(10), -static_cast<long>(working_digits() - 2));
}

// Stirling series tail of log Gamma at w, assuming |w| is above the shift
// threshold. Terms are added until they drop below eps.
Complex stirling_tail(const Complex& w) {
    Real eps = working_eps();
    Complex w2 = w * w;
    Complex p = Complex(1) / w;
    Complex acc(0);
    Real scale = abs(p);
    for (unsigned n = 1; n < 1000; ++n) {
        Complex t = Complex(constants::bernoulli_2n(n) / (2 * n * (2 * n - 1))) * p;
        acc += t;
        if (abs(t) < eps * (scale + abs(acc)))
            return acc;
        p /= w2;
    }
    throw NonConvergence("stirling_tail: asymptotic series failed");
}

// log Gamma for Re(z) >= 1/2: upward recurrence past the shift threshold,
// then the Stirling series.
Complex log_gamma_right(const Complex& z) {
    Real threshold = Real(working_digits()) * Real("0.4") + 10;
    Complex shift_sum(0);
    Complex w = z;
    while (abs(w) < threshold || w.real() < 2) {
        shift_sum += log(w);
        w += Complex(1);
    }
    Complex lg = (w - Complex(Real("0.5"))) * log(w) - w +
                 Complex(log(2 * constants::pi()) / 2) + stirling_tail(w);
    return lg - shift_sum;
}

} // namespace

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
    ctx.validate();
    if (is_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() >= Real("0.5"))
        return ensure_finite(log_gamma_right(z), "log_gamma");
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    Real pi = constants::pi();
    Complex refl = Complex(log(pi)) - log(sin(Complex(pi) * z)) - log_gamma_right(Complex(1) - z);
    return ensure_finite(refl, "log_gamma");
}

Complex digamma(const Complex& z, const PrecisionContext& ctx) {
    ctx.validate();
    if (is_nonpositive_integer(z))
        throw PoleError("digamma: pole at non-positive integer");
    if (z.real() < Real("0.5")) {
        // psi(z) = psi(1-z) - pi*cot(pi*z)
        Real pi = constants::pi();
        return ensure_finite(digamma(Complex(1) - z, ctx) - Complex(pi) * cot(Complex(pi) * z),
                             "digamma");
    }
    Real threshold = Real(working_digits()) * Real("0.4") + 10;
    Complex shift_sum(0);
    Complex w = z;
    while (abs(w) < threshold || w.real() < 2) {
        shift_sum += Complex(1) / w;
        w += Complex(1);
    }
    // psi(w) = log w - 1/(2w) - sum B_{2n}/(2n w^{2n})
    Real eps = working_eps();
    Complex w2 = w * w;
    Complex p = Complex(1) / w2;
    Complex acc = log(w) - Complex(1) / (2 * w);
    for (unsigned n = 1; n < 1000; ++n) {
        Complex t = Complex(constants::bernoulli_2n(n) / (2 * n)) * p;
        acc -= t;
        if (abs(t) < eps * abs(acc))
            return ensure_finite(acc - shift_sum, "digamma");
        p /= w2;
    }
    throw NonConvergence("digamma: asymptotic series failed");
}

Complex polygamma(unsigned j, const Complex& z, const PrecisionContext& ctx) {
    if (j == 0)
        return digamma(z, ctx);
    if (j > 12)
        throw UnsupportedOrder("polygamma: order capped at 12");
    ctx.validate();
    if (is_nonpositive_integer(z))
        throw PoleError("polygamma: pole at non-positive integer");

    Real fact_j = 1; // j!
    for (unsigned i = 2; i <= j; ++i)
        fact_j *= i;
    Real sign = (j % 2 == 0) ? 1 : -1; // (-1)^j

    Real threshold = Real(working_digits()) * Real("0.4") + 10;
    Complex shift_sum(0);
    Complex w = z;
    while (abs(w) < threshold || w.real() < 2) {
        shift_sum += Complex(sign * fact_j) * pow(Complex(1) / w, static_cast<long>(j) + 1);
        w += Complex(1);
    }
    // psi^{(j)}(w) = (-1)^{j-1} [ (j-1)!/w^j + j!/(2 w^{j+1})
    //                + sum_n B_{2n} (2n+j-1)!/(2n)! w^{-2n-j} ]
    Real eps = working_eps();
    Complex inv_w = Complex(1) / w;
    Complex w_mj = pow(inv_w, static_cast<long>(j)); // w^{-j}
    Complex acc = Complex(fact_j / j) * w_mj + Complex(fact_j / 2) * w_mj * inv_w;
    Complex w2 = w * w;
    Complex p = w_mj / w2; // w^{-2n-j} at n=1
    Real rising = fact_j * (j + 1); // (2n+j-1)!/(2n)! * (2n)!/... built incrementally
    // rising at n: (2n+j-1)! / (2n)!  -> n=1: (j+1)!/2
    Real coeff = rising / 2;
    for (unsigned n = 1; n < 1000; ++n) {
        Complex t = Complex(constants::bernoulli_2n(n) * coeff) * p;
        acc += t;
        if (abs(t) < eps * abs(acc)) {
            Complex val = Complex(-sign) * acc; // (-1)^{j-1} acc
            return ensure_finite(val - shift_sum, "polygamma");
        }
        p /= w2;
        // coeff_{n+1}/coeff_n = (2n+j)(2n+j+1) / ((2n+1)(2n+2))
        coeff *= Real(2 * n + j) * Real(2 * n + j + 1) / (Real(2 * n + 1) * Real(2 * n + 2));
    }
    throw NonConvergence("polygamma: asymptotic series failed");
}

Complex gen_binom(const Complex& a, const Complex& b, const PrecisionContext& ctx) {
    Complex amb = a - b;
    if ((is_exact_integer(a) && a.real() < 0) || (is_exact_integer(b) && b.real() < 0) ||
        (is_exact_integer(amb) && amb.real() < 0))
        throw DomainError("gen_binom: a, b, a-b must avoid negative integers");
    Complex lg = log_gamma(a + Complex(1), ctx) - log_gamma(b + Complex(1), ctx) -
                 log_gamma(amb + Complex(1), ctx);
    return ensure_finite(exp(lg), "gen_binom");
}

Complex recip_central_binom(long n, const Complex& a, const PrecisionContext& ctx) {
    ctx.validate();
    Complex num_arg = Complex(n) + a + Complex(1);     // n+a+1
    Complex den_arg = Complex(2 * n) + 2 * a + Complex(1); // 2n+2a+1

    bool num_pole = is_nonpositive_integer(num_arg);
    bool den_pole = is_nonpositive_integer(den_arg);
    if (den_pole && !num_pole)
        return Complex(0); // denominator pole only: the reciprocal vanishes
    if (num_pole)
        throw NonFinite("recip_central_binom: divergent at integer a with n+a negative");

    if (num_arg.real() >= Real("0.5")) {
        Complex lg = 2 * log_gamma(num_arg, ctx) - log_gamma(den_arg, ctx);
        return ensure_finite(exp(lg), "recip_central_binom");
    }
    // n well below zero: reflect both gamma factors at once, so the branch
    // terms cancel inside a single expression:
    //   Gamma(n+a+1)^2/Gamma(2n+2a+1) = -2 pi cot(pi a)
    //       * Gamma(-2n-2a) / Gamma(-n-a)^2
    Real pi = constants::pi();
    Complex lg = log_gamma(Complex(-2 * n) - 2 * a, ctx) -
                 2 * log_gamma(Complex(-n) - a, ctx);
    Complex val = Complex(-2 * pi) * cot(Complex(pi) * a) * exp(lg);
    return ensure_finite(val, "recip_central_binom");
}

} // namespace apery
