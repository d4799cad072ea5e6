#pragma once

#include <numeric>

#include "apery/complex.hpp"
#include "apery/constants.hpp"
#include "apery/errors.hpp"

namespace apery {

// Exact representation of x = e^{2*pi*i*p/N}. The order N drives the
// periodic grouping used for conditionally convergent sums; floating-point
// angles are never accepted.
struct RootOfUnity {
    long numer = 0; // p, 0 <= p < N, gcd(p, N) = 1 when p != 0
    long order = 1; // N >= 1

    RootOfUnity() = default;

    RootOfUnity(long p, long n) {
        if (n < 1)
            throw InvalidInput("RootOfUnity: order must be positive");
        p %= n;
        if (p < 0)
            p += n;
        long g = std::gcd(p, n);
        if (g > 1) {
            p /= g;
            n /= g;
        }
        if (p == 0)
            n = 1;
        numer = p;
        order = n;
    }

    static RootOfUnity one() { return RootOfUnity(); }
    static RootOfUnity minus_one() { return RootOfUnity(1, 2); }

    bool is_one() const { return numer == 0; }

    RootOfUnity inverse() const { return RootOfUnity(order - numer, order); }

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.numer == b.numer && a.order == b.order;
    }

    // Angle 2*pi*p/N at current working precision.
    Real angle() const { return 2 * constants::pi() * numer / order; }

    // x^k as a complex value at current working precision.
    Complex embed_power(long k) const {
        long pk = (numer % order) * (k % order) % order;
        if (pk < 0)
            pk += order;
        if (pk == 0)
            return Complex(1);
        Real th = 2 * constants::pi() * pk / order;
        return Complex(cos(th), sin(th));
    }

    Complex embed() const { return embed_power(1); }
};

} // namespace apery
