#include <doctest.h>

#include "apery/constants.hpp"
#include "apery/series.hpp"

using namespace apery;

namespace {

double dd(const Real& r) { return static_cast<double>(r); }

} // namespace

TEST_SUITE("numerics") {

TEST_CASE("plain summation meets the context tolerance at two precisions") {
    for (unsigned digits : {30u, 50u}) {
        auto ctx = PrecisionContext::with_digits(digits);
        ScopedPrecision sp(ctx.eval_digits());
        Complex cur;
        auto term = [&](long n) {
            if (n == 1)
                cur = Complex(Real(1) / 2);
            else
                cur *= Complex(Real(1) / 2);
            return cur;
        };
        auto r = sum_series(term, 1, ctx);
        CHECK(r.converged);
        CHECK(dd(abs(r.value - Complex(1))) <= dd(ctx.target_tol));
    }
}

TEST_CASE("levin acceleration reaches zeta(2) from the raw 1/n^2 series") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    auto term = [](long n) { return Complex(Real(1) / (Real(n) * Real(n))); };
    auto r = sum_series_levin(term, 1, ctx);
    CHECK(r.converged);
    CHECK(dd(abs(r.value - Complex(constants::zeta_ref(2)))) <= dd(ctx.target_tol));
}

TEST_CASE("grouped acceleration sums the conditionally convergent log series") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    RootOfUnity x(1, 5);
    Complex xe = x.embed();
    Complex cur(1);
    auto term = [&](long n) {
        cur *= xe;
        return cur / Complex(n);
    };
    auto r = sum_series_levin(term, 1, ctx, static_cast<unsigned>(x.order));
    Complex want = -log(Complex(1) - xe);
    CHECK(r.converged);
    CHECK(dd(abs(r.value - want)) <= dd(ctx.target_tol));
}

TEST_CASE("log-power tail model sums the harmonic-weighted zeta(2,1) series") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Real H(0);
    auto term = [&](long n) {
        // H_{n-1}/n^2
        Real t = H / (Real(n) * Real(n));
        H += Real(1) / Real(n);
        return Complex(t);
    };
    auto r = sum_log_power(term, 1, ctx, 1, 2, 2);
    CHECK(r.converged);
    CHECK(dd(abs(r.value - Complex(constants::zeta_ref(3)))) <= dd(ctx.target_tol));
}

TEST_CASE("grouped levin handles square-root decay with alternating signs") {
    auto ctx = PrecisionContext::with_digits(40);
    ScopedPrecision sp(ctx.eval_digits());
    // sum (-1)^{n-1} n^{-1/2} = (1 - sqrt(2)) zeta(1/2)
    auto term = [](long n) {
        Real t = 1 / sqrt(Real(n));
        return Complex(n % 2 == 1 ? t : -t);
    };
    auto r = sum_series_levin(term, 1, ctx, 2);
    Real zh;
    {
        Real half = Real(1) / 2;
        zh = Real(0);
        mpfr_zeta(zh.backend().data(), half.backend().data(), MPFR_RNDN);
    }
    Complex want((1 - sqrt(Real(2))) * zh);
    CHECK(dd(abs(r.value - want)) <= dd(ctx.target_tol));
}

} // TEST_SUITE
