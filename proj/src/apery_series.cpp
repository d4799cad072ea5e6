#include "apery/apery_series.hpp"

#include "apery/constants.hpp"
#include "apery/gamma.hpp"
#include "apery/polylog.hpp"

namespace apery {

namespace {

unsigned working_digits() {
    return boost::multiprecision::mpfr_float::default_precision();
}

Complex pow_q(const Complex& base, unsigned q) {
    return pow(base, static_cast<long>(q));
}

} // namespace

CpasParams CpasParams::make(unsigned q, Complex a, RootOfUnity x) {
    CpasParams p{q, a, x, a};
    p.validate();
    return p;
}

CpasParams CpasParams::make(unsigned q, Complex a, RootOfUnity x, Complex b) {
    CpasParams p{q, std::move(a), x, std::move(b)};
    p.validate();
    return p;
}

void CpasParams::validate() const {
    if (q < 1)
        throw InvalidInput("CpasParams: q must be >= 1");
    if (is_exact_integer(a))
        throw InvalidInput("CpasParams: a must not be an integer");
    if (is_exact_integer(b))
        throw InvalidInput("CpasParams: b must not be an integer");
    if (q == 1 && x.is_one())
        throw InvalidInput("CpasParams: (q, x) = (1, 1) diverges");
}

SeriesResult cpas_lhs(const CpasParams& params, const PrecisionContext& ctx) {
    ctx.validate();
    params.validate();
    const unsigned q = params.q;
    const Complex& a = params.a;
    const Complex& b = params.b;
    unsigned group = static_cast<unsigned>(params.x.order);
    Complex x = params.x.embed();
    Complex x_bar = params.x.inverse().embed();

    Complex total = pow(Complex(4), a) * recip_central_binom(0, a, ctx) / pow_q(b, q);
    Real err(0);
    long terms = 1;

    // Positive side: first term exact, then the one-step ratio
    //   t_{n+1}/t_n = 4 (n+a+1)^2 / ((2n+2a+1)(2n+2a+2)) * x^{-1}
    //                 * ((n+b)/(n+1+b))^q.
    {
        Complex cur;
        auto term = [&](long n) {
            if (n == 1) {
                cur = pow(Complex(4), Complex(1) + a) * recip_central_binom(1, a, ctx) *
                      x_bar / pow_q(Complex(1) + b, q);
            } else {
                long m = n - 1;
                Complex na = Complex(m) + a;
                cur *= Complex(4) * (na + Complex(1)) * (na + Complex(1)) /
                       ((2 * na + Complex(1)) * (2 * na + Complex(2))) * x_bar *
                       pow_q((Complex(m) + b) / (Complex(n) + b), q);
            }
            return cur;
        };
        SeriesResult pos = sum_series_levin(term, 1, ctx, group);
        total += pos.value;
        err += pos.err_estimate;
        terms += pos.terms_used;
    }

    // Negative side n = -m, m >= 1; vanishes identically for half-integer a
    // by the central-binomial convention.
    if (!is_exact_integer(2 * a)) {
        Real pi = constants::pi();
        Complex pref = Complex(-2 * pi) * cot(Complex(pi) * a);
        Complex cur;
        auto term = [&](long m) {
            if (m == 1) {
                Complex lg = log_gamma(Complex(2) - 2 * a, ctx) -
                             2 * log_gamma(Complex(1) - a, ctx);
                cur = pow(Complex(4), a - Complex(1)) * pref * exp(lg) * x /
                      pow_q(b - Complex(1), q);
            } else {
                long j = m - 1;
                Complex ma = Complex(j) - a;
                cur *= (2 * ma) * (2 * ma + Complex(1)) / (4 * ma * ma) * x *
                       pow_q((b - Complex(j)) / (b - Complex(m)), q);
            }
            return cur;
        };
        SeriesResult neg = sum_series_levin(term, 1, ctx, group);
        total += neg.value;
        err += neg.err_estimate;
        terms += neg.terms_used;
    }

    return {ensure_finite(total, "cpas_lhs"), err, terms, true};
}

SeriesResult cb_series(int p, const Complex& x, const PrecisionContext& ctx) {
    ctx.validate();
    if (p < -1)
        throw InvalidInput("cb_series: p must be >= -1");
    Real nx = abs(x);
    Real eps = pow(Real(10), -static_cast<long>(working_digits() / 2));
    if (nx > 1 + eps)
        throw DomainError("cb_series: |x| must be <= 1");
    if (nx.is_zero())
        return {Complex(0), Real(0), 0, true};
    bool boundary = abs(nx - 1) <= eps;
    if (boundary && p == -1 && abs(x - Complex(1)) <= eps)
        throw DomainError("cb_series: (p, x) = (-1, 1) diverges");

    Complex cur;
    auto term = [&, p](long n) {
        if (n == 1) {
            cur = x / Complex(2);
        } else {
            long m = n - 1;
            cur *= x * Complex(2 * m + 1) / Complex(2 * n) *
                   pow_q(Complex(m) / Complex(n), static_cast<unsigned>(p + 1));
        }
        return cur;
    };
    if (boundary || nx > Real("0.999")) {
        auto root = detect_root_of_unity(x);
        unsigned group = (boundary && root) ? static_cast<unsigned>(root->order) : 1;
        return sum_series_levin(term, 1, ctx, group);
    }
    return sum_series(term, 1, ctx);
}

SeriesResult half_integer_lhs(unsigned q, const RootOfUnity& x, const PrecisionContext& ctx) {
    ctx.validate();
    if (q < 1)
        throw InvalidInput("half_integer_lhs: q must be >= 1");
    if (q == 1 && x.is_one())
        throw InvalidInput("half_integer_lhs: (q, x) = (1, 1) diverges");
    Complex x_bar = x.inverse().embed();
    Complex cur;
    auto term = [&, q](long n) {
        if (n == 1) {
            cur = Complex(pow(Real(2), static_cast<int>(q) - 1));
        } else {
            long m = n - 1;
            cur *= Complex(2 * m + 1) / Complex(2 * n) * Complex(n) / Complex(m) *
                   pow_q((Complex(m) - Complex(Real("0.5"))) /
                             (Complex(n) - Complex(Real("0.5"))),
                         q) *
                   x_bar;
        }
        return cur;
    };
    return sum_series_levin(term, 1, ctx, static_cast<unsigned>(x.order));
}

Real FussParams::radius(long m) {
    if (m < 1)
        throw InvalidInput("FussParams: m must be >= 1");
    if (m == 1)
        return Real(1);
    return pow(Real(m - 1), m - 1) / pow(Real(m), m);
}

void FussParams::validate() const {
    Real r = radius(m);
    Real eps = pow(Real(10), -static_cast<long>(working_digits() / 2));
    if (abs(x) > r + eps)
        throw DomainError("FussParams: |x| exceeds the branch radius");
}

Complex fc_G(long m, const Complex& x, const PrecisionContext& ctx) {
    ctx.validate();
    if (m < 1)
        throw InvalidInput("fc_G: m must be >= 1");
    if (m == 1) {
        if (abs(x) >= 1)
            throw DomainError("fc_G: |x| < 1 required for m = 1");
        return Complex(1) / (Complex(1) - x);
    }
    Real r = FussParams::radius(m);
    Real tiny = pow(Real(10), -static_cast<long>(working_digits() - 5));
    if (abs(x) > r + tiny)
        throw DomainError("fc_G: |x| exceeds the branch radius");
    if (abs(x - Complex(r)) < tiny) {
        // Branch point: G = m/(m-1) exactly, where Newton degenerates.
        return Complex(Real(m) / Real(m - 1));
    }

    Real eps = pow(Real(10), -static_cast<long>(working_digits() - 5));
    Complex G(1);
    bool newton_ok = false;
    for (int it = 0; it < 200; ++it) {
        Complex Gm1 = pow(G, m - 1);
        Complex f = Complex(1) + x * Gm1 * G - G;
        Complex fp = Complex(m) * x * Gm1 - Complex(1);
        Complex step = f / fp;
        G -= step;
        if (abs(step) < eps * (1 + abs(G))) {
            newton_ok = true;
            break;
        }
    }
    if (!newton_ok) {
        G = Complex(1);
        for (int it = 0; it < 500; ++it)
            G = Complex(1) + x * pow(G, m);
        Complex f = Complex(1) + x * pow(G, m) - G;
        if (abs(f) > pow(Real(10), -static_cast<long>(working_digits() / 2)))
            throw NonConvergence("fc_G: neither Newton nor fixed point converged");
    }
    if (x.imag().is_zero()) {
        Real gr = G.real();
        if (gr <= Real("0.5") || gr > Real(2) + tiny || abs(G.imag()) > tiny)
            throw RangeViolation("fc_G: solved root left (1/2, 2]");
    }
    return ensure_finite(G, "fc_G");
}

SeriesResult fc_series(long m, unsigned p, const Complex& x, const PrecisionContext& ctx) {
    ctx.validate();
    if (m < 1)
        throw InvalidInput("fc_series: m must be >= 1");
    Real r = FussParams::radius(m);
    Real eps = pow(Real(10), -static_cast<long>(working_digits() / 2));
    Real nx = abs(x);
    if (nx > r + eps)
        throw DomainError("fc_series: |x| exceeds the branch radius");
    if (nx.is_zero())
        return {Complex(0), Real(0), 0, true};

    Complex cur;
    auto term = [&](long n) {
        if (n == 1) {
            cur = Complex(m) * x;
        } else {
            long k = n - 1; // advancing from index k to n = k+1
            Complex num(1), den(1);
            for (long j = 1; j <= m; ++j)
                num *= Complex(m * k + j);
            den = Complex(n);
            for (long j = 1; j + 1 <= m; ++j)
                den *= Complex((m - 1) * k + j);
            cur *= x * num / den * pow_q(Complex(k) / Complex(n), p + 1);
        }
        return cur;
    };
    if (nx > r * Real("0.999"))
        return sum_series_levin(term, 1, ctx, 1);
    return sum_series(term, 1, ctx);
}

Complex param_cb_closed(const Complex& a, const PrecisionContext& ctx) {
    ctx.validate();
    if (is_nonpositive_integer(a))
        throw PoleError("param_cb_closed: a must avoid non-positive integers");
    Complex lg = 2 * log_gamma(a, ctx) - log_gamma(2 * a, ctx);
    return ensure_finite(exp(lg) * pow(Complex(4), a) / Complex(2), "param_cb_closed");
}

SeriesResult param_cb_direct(const Complex& a, const PrecisionContext& ctx) {
    ctx.validate();
    if (is_nonpositive_integer(a))
        throw PoleError("param_cb_direct: a must avoid non-positive integers");
    Complex cur;
    auto term = [&](long n) {
        if (n == 0) {
            cur = Complex(1) / a;
        } else {
            long m = n - 1;
            cur *= Complex(2 * m + 1) / Complex(2 * n) * (Complex(m) + a) / (Complex(n) + a);
        }
        return cur;
    };
    return sum_series_levin(term, 0, ctx, 1);
}

} // namespace apery
