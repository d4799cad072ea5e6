// Acceptance checks for the verification suite. Each criterion prints one
// PASS/FAIL line; the exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "apery/bell_harmonic.hpp"
#include "apery/constants.hpp"
#include "apery/identities.hpp"
#include "apery/polylog.hpp"
#include "apery/runner.hpp"
#include "support/quadrature.hpp"

using namespace apery;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok)
        ++g_failures;
}

double dd(const Real& r) { return static_cast<double>(r); }

Real factorial(unsigned n) {
    Real f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

struct Worst {
    double res = 0;
    double max_ms = 0;
    bool ok = true;
    std::string what;
};

void fold(Worst& w, const IdentityReport& rep, double bound, const char* tag) {
    double r = rep.error.empty() ? dd(rep.residual) : 1.0;
    if (r > w.res)
        w.res = r;
    if (rep.elapsed_ms > w.max_ms)
        w.max_ms = rep.elapsed_ms;
    if (!rep.error.empty() || r > bound) {
        w.ok = false;
        if (w.what.empty())
            w.what = std::string(tag) + (rep.error.empty() ? "" : ": " + rep.error);
    }
}

Worst run_grid(IdentityId id, unsigned digits, double bound) {
    auto ctx = PrecisionContext::with_digits(digits);
    ScopedPrecision sp(ctx.eval_digits());
    Worst w;
    for (const auto& params : default_grid(id))
        fold(w, verify(id, params, ctx), bound, identity_info(id).name);
    return w;
}

std::string fmt(const Worst& w, double bound) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "worst residual %.2e (bound %.0e)%s%s", w.res,
                  bound, w.what.empty() ? "" : " ", w.what.c_str());
    return buf;
}

void criterion1() {
    auto ctx = PrecisionContext::with_digits(40);
    ScopedPrecision sp(ctx.eval_digits());
    auto rep = verify(IdentityId::ZETA3_APERY, IdentityParams{}, ctx);
    bool ok = rep.error.empty() && dd(rep.residual) <= 1e-30 && rep.elapsed_ms < 1000;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "accelerated zeta(3) series: residual %.2e in %.0f ms",
                  dd(rep.residual), rep.elapsed_ms);
    report(1, ok, buf);
}

void criterion2() {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Real z2 = constants::zeta_ref(2), z3 = constants::zeta_ref(3),
         z4 = constants::zeta_ref(4);
    Real C[5] = {Real(1), Real(0), z2, -2 * z3, Real(27) / 2 * z4};
    Real D[5] = {Real(1), Real(0), -z2, 2 * z3, Real(3) / 2 * z4};
    Real worst(0);
    for (unsigned n = 0; n < 5; ++n) {
        worst = std::max(worst, Real(abs(c_const(n, ctx) - C[n])));
        worst = std::max(worst, Real(abs(d_const(n, ctx) - D[n])));
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "gamma-expansion constants C0..C4, D0..D4: worst error %.2e",
                  dd(worst));
    report(2, dd(worst) <= 1e-35, buf);
}

void criterion3() {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    std::vector<Complex> as = {Complex(Real(1) / 3), Complex(Real(1) / 4),
                               Complex(Real(2) / 7), Complex(Real("0.3"), Real("0.2"))};
    std::vector<RootOfUnity> xs = {RootOfUnity::minus_one(), RootOfUnity(1, 4),
                                   RootOfUnity(1, 3), RootOfUnity(1, 5)};
    Worst w;
    for (unsigned q : {2u, 3u, 4u})
        for (const auto& a : as)
            for (const auto& x : xs) {
                IdentityParams p;
                p.q = q;
                p.a = a;
                p.x_root = x;
                fold(w, verify(IdentityId::THM21, p, ctx), 1e-35, "THM21");
            }
    bool ok = w.ok && w.max_ms < 10000;
    report(3, ok, fmt(w, 1e-35) + ", slowest point " +
                      std::to_string(static_cast<long>(w.max_ms)) + " ms");
}

void criterion4() {
    Worst w23 = run_grid(IdentityId::COR23, 50, 1e-20);
    Worst w24 = run_grid(IdentityId::COR24, 50, 1e-35);
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Worst w25;
    for (const auto& params : default_grid(IdentityId::COR25)) {
        double bound = (*params.q == 1) ? 1e-20 : 1e-35;
        fold(w25, verify(IdentityId::COR25, params, ctx), bound, "COR25");
    }
    Worst wq1 = run_grid(IdentityId::COR25_Q1, 50, 1e-20);
    Worst wq2 = run_grid(IdentityId::COR25_Q2, 50, 1e-35);
    bool ok = w23.ok && w24.ok && w25.ok && wq1.ok && wq2.ok;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "half-integer corollaries: worst residuals %.2e %.2e %.2e %.2e %.2e",
                  w23.res, w24.res, w25.res, wq1.res, wq2.res);
    report(4, ok, buf);
}

void criterion5() {
    Worst w = run_grid(IdentityId::THM26, 50, 1e-35);
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Real pi = constants::pi();
    Complex I(Real(0), Real(1));
    Complex a(Real(1) / 4);
    Real theta = 4 * pi / 5;
    Complex xa = exp(I * a * Complex(theta));
    Complex c = cot(Complex(pi) * a);
    Complex snv = sin(Complex(pi) * a);
    Complex disp = Complex(pi * pi) / (snv * snv) * xa +
                   Complex(pi) * (I - c) * xa * I * Complex(theta);
    Real derr = abs(cot_deriv_combo(1, a, theta, ctx) - disp);
    bool ok = w.ok && dd(derr) <= 1e-35;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "derivative family: %s, csc^2 display error %.2e",
                  fmt(w, 1e-35).c_str(), dd(derr));
    report(5, ok, buf);
}

void criterion6() {
    Worst w = run_grid(IdentityId::THM41, 50, 1e-30);
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    auto grid = default_grid(IdentityId::THM41_BHALF);
    auto rep = verify(IdentityId::THM41_BHALF, grid[0], ctx);
    bool ok = w.ok && rep.error.empty() && dd(rep.residual) <= 1e-18;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "parametric family: %s, half-shift limit residual %.2e",
                  fmt(w, 1e-30).c_str(), dd(rep.residual));
    report(6, ok, buf);
}

void criterion7() {
    Worst wp = run_grid(IdentityId::PROP22, 50, 1e-35);
    Worst w1 = run_grid(IdentityId::EQ_CASE1, 50, 1e-35);
    Worst w2 = run_grid(IdentityId::EQ_CASE2, 50, 1e-35);
    bool ok = wp.ok && w1.ok && w2.ok;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "central-binomial double sums: worst residuals %.2e %.2e %.2e",
                  wp.res, w1.res, w2.res);
    report(7, ok, buf);
}

void criterion8() {
    IdentityId ids[] = {IdentityId::THM51,   IdentityId::THM52,
                        IdentityId::COR53,   IdentityId::COR54,
                        IdentityId::DILOG_A, IdentityId::DILOG_B,
                        IdentityId::LI21_X,  IdentityId::EQ_CASE2_1,
                        IdentityId::EQ_CASE2_2};
    Worst w;
    for (auto id : ids) {
        Worst wi = run_grid(id, 50, 1e-35);
        if (wi.res > w.res)
            w.res = wi.res;
        if (!wi.ok) {
            w.ok = false;
            if (w.what.empty())
                w.what = wi.what;
        }
    }
    Worst wh = run_grid(IdentityId::LI2_HALF, 50, 1e-40);
    bool ok = w.ok && wh.ok;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "generating-function suite: worst residual %.2e, Li2(1/2) %.2e%s%s",
                  w.res, wh.res, w.what.empty() ? "" : " ", w.what.c_str());
    report(8, ok, buf);
}

void criterion9() {
    Worst w = run_grid(IdentityId::PARAM_CB_X1, 50, 1e-30);
    report(9, w.ok, "parametric sum at x = 1: " + fmt(w, 1e-30));
}

void criterion10() {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    bool ok = true;
    std::string what;
    auto need = [&](bool cond, const char* tag) {
        if (!cond) {
            ok = false;
            if (what.empty())
                what = tag;
        }
    };

    // log-power moments against the Bell star sums
    {
        testsupport::TanhSinh quad;
        Real tol = pow(Real(10), -60);
        HarmonicTable tab(20, 5);
        Real worst(0);
        for (long n = 1; n <= 20; ++n)
            for (unsigned k = 0; k <= 5; ++k) {
                Real I = quad.integrate(
                    [&](const Real& t, const Real& omt) {
                        Real lg = log(omt);
                        Real p = pow(t, n - 1);
                        for (unsigned j = 0; j < k; ++j)
                            p *= lg;
                        return p;
                    },
                    tol);
                Real want = factorial(k) * tab.mhs_star(n, k) / Real(n);
                if (k % 2 == 1)
                    want = -want;
                worst = std::max(worst, Real(abs(I - want)));
            }
        need(dd(worst) <= 1e-30, "log-power moments");
    }

    // Laurent scaling of the extended trigonometric function at a pole
    {
        RootOfUnity x(1, 4);
        Complex xe = x.embed();
        Complex xbar = x.inverse().embed();
        long n = 2;
        auto err = [&](const Real& eps) {
            Complex s(Real(n) + eps);
            Complex trunc = Complex(1) / Complex(eps);
            for (unsigned m = 0; m <= 6; ++m) {
                Complex c = li(m + 1, xe, ctx);
                if (m % 2 == 1)
                    c = -c;
                c -= li(m + 1, xbar, ctx);
                trunc += c * pow(Complex(eps), static_cast<long>(m));
            }
            trunc *= pow(xe, -n);
            return abs(ext_trig(s, x, ctx) - trunc);
        };
        double ratio = dd(err(pow(Real(10), -2) / 2) / err(pow(Real(10), -2)));
        need(ratio >= 1.0 / 512 && ratio <= 1.0 / 32, "pole expansion scaling");
    }

    // Shifted expansion around -n with a fractional offset
    {
        RootOfUnity x(1, 5);
        Complex a(Real(1) / 3);
        long n = 1;
        auto err = [&](const Real& eps) {
            Complex s(-Real(n) + eps);
            Complex trunc(0);
            for (unsigned m = 0; m <= 4; ++m) {
                Complex c = li_hurwitz(m + 1, x, -a, ctx);
                if (m % 2 == 1)
                    c = -c;
                c -= x.embed() * li_hurwitz(m + 1, x.inverse(), a - Complex(1), ctx);
                trunc += c * pow(Complex(eps), static_cast<long>(m));
            }
            trunc *= pow(x.embed(), n);
            return abs(ext_trig(s - a, x, ctx) - trunc);
        };
        double ratio = dd(err(pow(Real(10), -3)) / err(pow(Real(10), -2)));
        need(ratio >= 1e-7 && ratio <= 1e-3, "shifted expansion scaling");
    }

    // Fuss-Catalan branch sanity on the real interval
    {
        for (long m : {2l, 3l, 4l}) {
            Real rad = FussParams::radius(m);
            Real upper = Real(m) / Real(m - 1);
            Real prev(0);
            for (int i = 0; i <= 50; ++i) {
                Real t = -rad + 2 * rad * i / 50;
                Real g = fc_G(m, Complex(t), ctx).real();
                need(dd(g) > 0.5 && dd(g - upper) <= 1e-40, "branch range");
                if (i > 0)
                    need(dd(g - prev) > 0.0, "branch monotonicity");
                prev = g;
            }
        }
    }

    // depth-p ones compositions collapse to log powers
    {
        Real pi = constants::pi();
        Real worst(0);
        for (int j : {2, 5, 9, 13}) {
            Real r = Real(4 * j) / 100;
            Real th = 2 * pi * j / 7;
            Complex z(r * cos(th), r * sin(th));
            Complex lg = -log(Complex(1) - z);
            for (unsigned p = 1; p <= 6; ++p) {
                std::vector<unsigned> ks(p, 1);
                Complex got = li_multi(Composition(ks), z, ctx);
                Complex want = pow(lg, static_cast<long>(p)) / Complex(factorial(p));
                worst = std::max(worst, Real(abs(got - want)));
            }
        }
        need(dd(worst) <= 1e-35, "ones compositions");
    }

    report(10, ok, ok ? "structural property suites hold"
                      : "structural property failure: " + what);
}

void criterion11() {
    RunConfig config;
    config.digits = 30;
    config.jobs = std::max(1u, std::thread::hardware_concurrency());
    auto start = std::chrono::steady_clock::now();
    auto reports = run_suite(config);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    size_t failed = 0;
    for (const auto& rep : reports)
        if (!rep.pass)
            ++failed;
    bool ok = failed == 0 && secs <= 600;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "full suite at 30 digits: %zu points, %zu failed, %.1f s",
                  reports.size(), failed, secs);
    report(11, ok, buf);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    return g_failures;
}
