#pragma once

#include <ostream>
#include <string>

#include "apery/errors.hpp"
#include "apery/precision.hpp"

namespace apery {

// Arbitrary-precision complex scalar, the universal value type of the
// library. All multivalued functions (log, sqrt, pow) use the principal
// branch.
class Complex {
  public:
    Complex() : re_(0), im_(0) {}
    Complex(Real re) : re_(std::move(re)), im_(0) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(long v) : re_(v), im_(0) {}
    Complex(int v) : re_(v), im_(0) {}
    Complex(double v) : re_(v), im_(0) {}

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }
    Real& real() { return re_; }
    Real& imag() { return im_; }

    bool is_real() const { return im_.is_zero(); }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(Complex a) {
        a.re_ = -a.re_;
        a.im_ = -a.im_;
        return a;
    }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        os << "(" << z.re_ << (z.im_ < 0 ? " - " : " + ") << abs(z.im_) << "i)";
        return os;
    }

  private:
    Real re_, im_;
};

inline Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
inline Real abs(const Complex& z) { return sqrt(norm(z)); }
inline Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }
inline Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

inline Complex& Complex::operator/=(const Complex& o) {
    Real d = norm(o);
    Real r = (re_ * o.re_ + im_ * o.im_) / d;
    im_ = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    return *this;
}

inline bool isfinite(const Real& x) {
    return mpfr_number_p(x.backend().data()) != 0 || x.is_zero();
}
inline bool isfinite(const Complex& z) { return isfinite(z.real()) && isfinite(z.imag()); }

// Boundary check: NaN/inf never escape an operation, they become errors.
inline const Complex& ensure_finite(const Complex& z, const char* where) {
    if (!isfinite(z))
        throw NonFinite(std::string("non-finite value in ") + where);
    return z;
}

inline Complex exp(const Complex& z) {
    Real m = exp(z.real());
    return Complex(m * cos(z.imag()), m * sin(z.imag()));
}

// Principal branch, Im(log z) in (-pi, pi].
inline Complex log(const Complex& z) {
    return Complex(log(abs(z)), arg(z));
}

inline Complex sqrt(const Complex& z) {
    if (z.imag().is_zero() && z.real() >= 0)
        return Complex(sqrt(z.real()), Real(0));
    Real m = abs(z);
    Real u = sqrt((m + z.real()) / 2);
    Real v = sqrt((m - z.real()) / 2);
    if (z.imag() < 0)
        v = -v;
    return Complex(u, v);
}

inline Complex pow(const Complex& z, const Complex& w) {
    if (z.real().is_zero() && z.imag().is_zero())
        return Complex(Real(0));
    return exp(w * log(z));
}

inline Complex pow(const Complex& z, long k) {
    if (k < 0)
        return Complex(1) / pow(z, -k);
    Complex acc(1), base = z;
    while (k) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline Complex sin(const Complex& z) {
    return Complex(sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag()));
}

inline Complex cos(const Complex& z) {
    return Complex(cos(z.real()) * cosh(z.imag()), -sin(z.real()) * sinh(z.imag()));
}

inline Complex cot(const Complex& z) { return cos(z) / sin(z); }

// Exact integer test (no tolerance): true iff z is a real integer value.
inline bool is_exact_integer(const Complex& z) {
    if (!z.imag().is_zero())
        return false;
    return floor(z.real()) == z.real();
}

inline bool is_nonpositive_integer(const Complex& z) {
    return is_exact_integer(z) && z.real() <= 0;
}

} // namespace apery
