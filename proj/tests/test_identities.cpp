#include <doctest.h>

#include "apery/constants.hpp"
#include "apery/identities.hpp"
#include "apery/polylog.hpp"

using namespace apery;

namespace {

double dd(const Real& r) { return static_cast<double>(r); }

} // namespace

TEST_SUITE("identities") {

TEST_CASE("the two double-sum representations agree with the series") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    for (long m : {2l, 3l})
        for (unsigned p : {1u, 2u, 3u}) {
            Complex x(FussParams::radius(m) / 2);
            Complex series = fc_series(m, p, -x, ctx).value;
            Complex via51 = rhs_thm51(m, p, -x, ctx);
            Complex via52 = rhs_thm52(m, p, x, ctx);
            CHECK(dd(abs(series - via51)) <= 10 * dd(ctx.target_tol));
            CHECK(dd(abs(series - via52)) <= 10 * dd(ctx.target_tol));
            CHECK(dd(abs(via51 - via52)) <= 10 * dd(ctx.target_tol));
        }
}

TEST_CASE("cotangent derivative combination satisfies the derivative ladder") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Complex a(Real(1) / 3, Real(1) / 10);
    Real theta = constants::pi() / 3;
    Real h = pow(Real(10), -15);
    for (unsigned m = 0; m <= 3; ++m) {
        Complex fp = cot_deriv_combo(m, a + Complex(h), theta, ctx);
        Complex fm = cot_deriv_combo(m, a - Complex(h), theta, ctx);
        Complex deriv = (fp - fm) / Complex(2 * h);
        Complex want = Complex(Real(m + 1)) * cot_deriv_combo(m + 1, a, theta, ctx);
        // central difference: O(h^2) truncation dominates
        CHECK(dd(abs(deriv - want)) <= 1e-25);
    }
}

TEST_CASE("first derivative case matches the csc^2 closed form") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Real pi = constants::pi();
    Complex I(Real(0), Real(1));
    Complex a(Real(1) / 4);
    Real theta = 4 * pi / 5;
    Complex xa = exp(I * a * Complex(theta));
    Complex c = cot(Complex(pi) * a);
    Complex snv = sin(Complex(pi) * a);
    Complex want = Complex(pi * pi) / (snv * snv) * xa +
                   Complex(pi) * (I - c) * xa * I * Complex(theta);
    CHECK(dd(abs(cot_deriv_combo(1, a, theta, ctx) - want)) <= 1e-35);
}

TEST_CASE("parametric convolution degenerates to the unshifted one") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Complex a(Real(1) / 3);
    RootOfUnity x(1, 4);
    for (unsigned q : {2u, 3u}) {
        Complex base = rhs_thm21(q, a, x, ctx);
        Complex near = rhs_thm41(q, a, a + Complex(pow(Real(10), -10)), x, ctx);
        // first order in the shift only
        CHECK(dd(abs(near - base)) <= 1e-6);
    }
}

TEST_CASE("integer shift of the parametric identity is rejected") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    Complex a(Real(1) / 3);
    RootOfUnity x(1, 4);
    CHECK_THROWS(rhs_thm41(2, a, a, x, ctx));
    CHECK_THROWS(rhs_thm41(2, a, a + Complex(1), x, ctx));
    CHECK_THROWS(rhs_thm41(2, a, a + Complex(Real(3) / 2), x, ctx));
}

TEST_CASE("dilogarithm corollary equals the order-one double sum") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    for (long m : {2l, 3l}) {
        Complex x(FussParams::radius(m) * 2 / 5);
        Complex G = fc_G(m, -x, ctx);
        Complex closed = Complex(-m) * li(2, Complex(1) - G, ctx) -
                         Complex(Real(m) * Real(m) / 2) * pow(log(G), 2l);
        CHECK(dd(abs(closed - rhs_thm52(m, 1, x, ctx))) <= 10 * dd(ctx.target_tol));
    }
}

TEST_CASE("verify passes at the x = 1 endpoint of the alternating family") {
    auto ctx = PrecisionContext::with_digits(40);
    ScopedPrecision sp(ctx.eval_digits());
    IdentityParams params;
    params.x_val = Complex(1);
    auto rep = verify(IdentityId::DILOG_B, params, ctx);
    CHECK(rep.error.empty());
    CHECK(rep.pass);
}

TEST_CASE("verify reports evaluation failures instead of throwing") {
    auto ctx = PrecisionContext::with_digits(30);
    ScopedPrecision sp(ctx.eval_digits());
    IdentityParams params;
    params.q = 2;
    params.a = Complex(1); // pole of the bilateral series
    params.x_root = RootOfUnity::minus_one();
    auto rep = verify(IdentityId::THM21, params, ctx);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.error.empty());
}

TEST_CASE("tolerance classes distinguish conditional convergence") {
    IdentityParams q1, q2;
    q1.q = 1;
    q2.q = 2;
    Real t1 = class_tolerance(IdentityId::COR25, q1, 50);
    Real t2 = class_tolerance(IdentityId::COR25, q2, 50);
    CHECK(dd(abs(t1 - pow(Real(10), -25))) <= 1e-40);
    CHECK(dd(abs(t2 - pow(Real(10), -40))) <= 1e-55);
    Real tb = class_tolerance(IdentityId::THM41_BHALF, IdentityParams{}, 50);
    CHECK(dd(abs(tb - pow(Real(10), -18))) <= 1e-33);
}

TEST_CASE("catalog lookup is total and invertible") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() == 24);
    for (const auto& info : cat) {
        auto id = identity_from_name(info.name);
        REQUIRE(id.has_value());
        CHECK(*id == info.id);
        CHECK(identity_info(info.id).name == std::string(info.name));
        CHECK_FALSE(default_grid(info.id).empty());
    }
    CHECK_FALSE(identity_from_name("NOT_A_THEOREM").has_value());
}

} // TEST_SUITE
