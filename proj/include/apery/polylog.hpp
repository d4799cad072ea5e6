#pragma once

#include <optional>
#include <vector>

#include "apery/complex.hpp"
#include "apery/precision.hpp"
#include "apery/root_of_unity.hpp"
#include "apery/series.hpp"

namespace apery {

// Index vector (k_1,...,k_r) of a multiple polylogarithm.
struct Composition {
    std::vector<unsigned> ks;

    Composition(std::initializer_list<unsigned> init) : ks(init) { validate(); }
    explicit Composition(std::vector<unsigned> v) : ks(std::move(v)) { validate(); }

    // (k, {1}_ones) -- the shape every identity in this library needs.
    static Composition head_with_ones(unsigned k, unsigned ones) {
        std::vector<unsigned> v{k};
        v.insert(v.end(), ones, 1);
        return Composition(std::move(v));
    }

    unsigned depth() const { return static_cast<unsigned>(ks.size()); }
    unsigned weight() const {
        unsigned w = 0;
        for (unsigned k : ks)
            w += k;
        return w;
    }

    void validate() const {
        if (ks.empty())
            throw InvalidInput("Composition: index vector must be non-empty");
        for (unsigned k : ks)
            if (k < 1)
                throw InvalidInput("Composition: entries must be positive");
    }
};

// Argument bundle of the cyclotomic Hurwitz zeta value
// Li_p(x; b+1) = sum_{n>=1} x^n/(n+b)^p.
struct HurwitzArg {
    unsigned p; // >= 1
    RootOfUnity x;
    Complex b;  // not a negative integer; (p, x) != (1, 1)
};

// Hurwitz zeta sum_{k>=0} (k+c)^{-p} for integer p >= 2, Euler-Maclaurin
// with the argument shifted until the asymptotic series bites.
Complex hurwitz_zeta(unsigned p, const Complex& c, const PrecisionContext& ctx);

// Classical polylogarithm Li_k(z) on the closed unit disk.
Complex li(unsigned k, const Complex& z, const PrecisionContext& ctx);

// Single-variable multiple polylogarithm Li_{k_1,...,k_r}(z); the inner
// multiple-harmonic partial sums are maintained incrementally.
Complex li_multi(const Composition& ks, const Complex& z, const PrecisionContext& ctx);

// Cyclotomic Hurwitz zeta value. For x of order N > 1 the sum collapses to
// a finite digamma (p = 1) or Hurwitz zeta (p >= 2) combination.
Complex li_hurwitz(const HurwitzArg& arg, const PrecisionContext& ctx);
Complex li_hurwitz(unsigned p, const RootOfUnity& x, const Complex& b,
                   const PrecisionContext& ctx);

// Generalized digamma phi(s;x) = sum_{k>=0} x^k/(k+s), x != 1 a root of
// unity.
Complex gen_digamma(const Complex& s, const RootOfUnity& x, const PrecisionContext& ctx);

// Extended trigonometric function Phi(s;x) = phi(s;x) - phi(-s;x^{-1}) - 1/s.
Complex ext_trig(const Complex& s, const RootOfUnity& x, const PrecisionContext& ctx);

// Riemann zeta at integer k >= 2 through the polylog route (li(k, 1)).
Real zeta(unsigned k, const PrecisionContext& ctx);

// Recognize z as e^{2 pi i p/N} for a modest N; used to pick the grouped
// summation path on the unit circle.
std::optional<RootOfUnity> detect_root_of_unity(const Complex& z, long max_order = 128);

} // namespace apery
