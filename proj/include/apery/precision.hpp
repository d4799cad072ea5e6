#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

#include "apery/errors.hpp"

namespace apery {

// Arbitrary-precision real scalar. Precision is managed per-thread through
// ScopedPrecision; a value keeps the precision it was created with.
using Real = boost::multiprecision::mpfr_float;

// Working-precision policy threaded through every evaluation.
//
// precision_bits is the caller-facing binary precision; evaluations run at
// eval_digits(), which pads the target by guard_digits plus an acceleration
// margin large enough to absorb the cancellation of the Levin transform.
struct PrecisionContext {
    unsigned precision_bits = 166; // >= 64
    Real target_tol;               // > 0, acceptance residual bound
    long max_terms = 400000;       // >= 1, hard truncation cap
    unsigned guard_digits = 10;

    static PrecisionContext with_digits(unsigned digits10) {
        if (digits10 < 20)
            throw InvalidInput("PrecisionContext: digits must be >= 20");
        PrecisionContext ctx;
        ctx.precision_bits = static_cast<unsigned>(std::ceil(digits10 / 0.30102999566398)) + 1;
        ctx.guard_digits = (digits10 + 4) / 5; // 20% of target decimal digits
        {
            // target_tol default: 10^-(digits-10)
            boost::multiprecision::mpfr_float::default_precision(digits10 + ctx.guard_digits);
            ctx.target_tol = pow(Real(10), -static_cast<long>(digits10 - 10));
        }
        return ctx;
    }

    unsigned decimal_digits() const {
        return static_cast<unsigned>(precision_bits * 0.30102999566398);
    }

    // Precision used for actual arithmetic: target + guard + margin for the
    // digit loss inside sequence acceleration.
    unsigned eval_digits() const {
        unsigned d = decimal_digits();
        unsigned margin = std::max(30u, d - d / 8); // ~0.875 * d
        return d + guard_digits + margin;
    }

    void validate() const {
        if (precision_bits < 64)
            throw InvalidInput("PrecisionContext: precision_bits must be >= 64");
        if (!(target_tol > 0))
            throw InvalidInput("PrecisionContext: target_tol must be positive");
        if (max_terms < 1)
            throw InvalidInput("PrecisionContext: max_terms must be >= 1");
    }
};

// RAII guard setting the thread's default mpfr precision in decimal digits.
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned digits10)
        : saved_(boost::multiprecision::mpfr_float::default_precision()) {
        boost::multiprecision::mpfr_float::default_precision(digits10);
    }
    ~ScopedPrecision() { boost::multiprecision::mpfr_float::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned saved_;
};

} // namespace apery
