#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/apery_series.hpp"
#include "apery/complex.hpp"
#include "apery/precision.hpp"
#include "apery/root_of_unity.hpp"

namespace apery {

enum class IdentityId {
    THM21,
    PROP22,
    COR23,
    COR24,
    COR25,
    COR25_Q1,
    COR25_Q2,
    THM26,
    THM41,
    THM41_BHALF,
    THM51,
    THM52,
    COR53,
    COR54,
    EQ_CASE1,
    EQ_CASE2,
    EQ_CASE2_1,
    EQ_CASE2_2,
    DILOG_A,
    DILOG_B,
    LI21_X,
    ZETA3_APERY,
    PARAM_CB_X1,
    LI2_HALF,
};

struct IdentityInfo {
    IdentityId id;
    const char* name;   // enum spelling, used by the CLI filter
    const char* anchor; // citation anchor of the source statement
    const char* grid_note;
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);

// Parameter record for one verification point; which fields are meaningful
// depends on the identity.
struct IdentityParams {
    std::optional<unsigned> q;
    std::optional<unsigned> p;
    std::optional<long> m;          // Fuss order, or derivative order (THM26)
    std::optional<Complex> a;
    std::optional<Complex> b;
    std::optional<RootOfUnity> x_root;
    std::optional<Complex> x_val;   // non-root-of-unity argument
};

struct IdentityReport {
    IdentityId id;
    IdentityParams params;
    Complex lhs;
    Complex rhs;
    Real residual;
    bool relative_mode = false; // |lhs-rhs|/|rhs| when |rhs| > 1
    Real tolerance;
    long terms_used = 0;
    double elapsed_ms = 0;
    bool pass = false;
    std::string error; // non-empty when evaluation itself failed
};

// Right-hand sides -------------------------------------------------------

// Theorem 2.1: the five-index C/D convolution plus the central-binomial
// coupling term, arranged so cpas_lhs(q, a, x) - rhs_thm21 -> 0.
Complex rhs_thm21(unsigned q, const Complex& a, const RootOfUnity& x,
                  const PrecisionContext& ctx);

// Proposition 2.2's double sum at argument (1-sqrt(1-x))/2.
Complex rhs_prop22(unsigned p, const Complex& x, const PrecisionContext& ctx);

// (pi/m!) d^m/da^m [(i - cot(pi a)) x^a] with x = e^{i theta},
// theta in (0, 2 pi); cot derivatives via the polynomial recurrence
// c' = -pi (1 + c^2), m <= 8.
Complex cot_deriv_combo(unsigned m, const Complex& a, const Real& theta,
                        const PrecisionContext& ctx);

// Theorem 4.1: the convolution with parametric C_k(a-b), D_k(2a-2b) and
// the shifted coupling series.
Complex rhs_thm41(unsigned q, const Complex& a, const Complex& b, const RootOfUnity& x,
                  const PrecisionContext& ctx);

// Theorems 5.1 / 5.2 double sums at 1 - 1/G_m(x) and 1 - G_m(-x).
Complex rhs_thm51(long m, unsigned p, const Complex& x, const PrecisionContext& ctx);
Complex rhs_thm52(long m, unsigned p, const Complex& x, const PrecisionContext& ctx);

// Shifted coupling series sum_{n>=1} n binom(2n,n) x^n / ((n+c)^q 4^n).
SeriesResult coupling_series(unsigned q, const Complex& c, const RootOfUnity& x,
                             const PrecisionContext& ctx);

// Verification -----------------------------------------------------------

// Built-in parameter grid per identity, deterministic order. Values are
// constructed at the ambient precision; set ScopedPrecision first.
std::vector<IdentityParams> default_grid(IdentityId id);

// Tolerance class for one point at a D-digit context: 10^{-(D-10)} for
// absolutely convergent classes, 10^{-D/2} for the q = 1 conditionally
// convergent classes, and the pinned extrapolation budget for THM41_BHALF.
Real class_tolerance(IdentityId id, const IdentityParams& params, unsigned digits);

// Evaluates both sides, computes the residual, and never throws: failures
// come back as a failing report with `error` set.
IdentityReport verify(IdentityId id, const IdentityParams& params,
                      const PrecisionContext& ctx);

} // namespace apery
