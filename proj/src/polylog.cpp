#include "apery/polylog.hpp"

#include <map>
#include <mutex>

#include "apery/constants.hpp"
#include "apery/gamma.hpp"

namespace apery {

namespace {

unsigned working_digits() {
    return boost::multiprecision::mpfr_float::default_precision();
}

Real unit_circle_eps() {
    // |z| is "on the unit circle" when it matches 1 to well within the
    // working precision; exact embeddings of roots of unity always do.
    return pow(Real(10), -static_cast<long>(working_digits() / 2));
}

Complex pow_neg_int(const Complex& base, unsigned p) {
    return Complex(1) / pow(base, static_cast<long>(p));
}

} // namespace

Complex hurwitz_zeta(unsigned p, const Complex& c, const PrecisionContext& ctx) {
    ctx.validate();
    if (p < 2)
        throw DomainError("hurwitz_zeta: p must be >= 2");
    if (is_nonpositive_integer(c))
        throw PoleError("hurwitz_zeta: pole at non-positive integer shift");

    Real threshold = Real(working_digits()) * Real("0.4") + 10;
    Complex head(0);
    long K = 0;
    Complex w = c;
    while (abs(w) < threshold || w.real() < 2) {
        head += pow_neg_int(w, p);
        w += Complex(1);
        ++K;
    }
    // Tail at w = K + c:
    //   w^{1-p}/(p-1) + w^{-p}/2 + sum_j B_{2j}/(2j)! (p)_{2j-1} w^{-p-2j+1}
    Real eps = pow(Real(10), -static_cast<long>(working_digits() - 2));
    Complex w_mp = pow_neg_int(w, p);
    Complex inv_w = Complex(1) / w;
    Complex tail = w_mp * w / Complex(static_cast<long>(p) - 1) + w_mp / Complex(2);
    Complex w2 = w * w;
    Complex pw = w_mp * inv_w; // w^{-p-2j+1} at j = 1
    Real rising = p;           // (p)_{2j-1} at j=1: p(p+1)...: starts p
    Real fact2j = 2;           // (2j)!
    for (unsigned j = 1; j < 1000; ++j) {
        Complex t = Complex(constants::bernoulli_2n(j) * rising / fact2j) * pw;
        tail += t;
        if (abs(t) < eps * abs(tail))
            return ensure_finite(head + tail, "hurwitz_zeta");
        pw /= w2;
        rising *= Real(p + 2 * j - 1) * Real(p + 2 * j);
        fact2j *= Real(2 * j + 1) * Real(2 * j + 2);
    }
    throw NonConvergence("hurwitz_zeta: Euler-Maclaurin tail failed");
}

std::optional<RootOfUnity> detect_root_of_unity(const Complex& z, long max_order) {
    Real eps = unit_circle_eps();
    if (abs(abs(z) - 1) > eps)
        return std::nullopt;
    Real th = arg(z) / (2 * constants::pi()); // in (-1/2, 1/2]
    for (long n = 1; n <= max_order; ++n) {
        Real pn = th * n;
        Real p_rounded = round(pn);
        if (abs(pn - p_rounded) < eps * n) {
            long p = p_rounded.convert_to<long>();
            return RootOfUnity(p, n);
        }
    }
    return std::nullopt;
}

Complex li(unsigned k, const Complex& z, const PrecisionContext& ctx) {
    ctx.validate();
    if (k < 1)
        throw DomainError("li: order must be >= 1");
    Real nz = abs(z);
    Real eps = unit_circle_eps();
    if (nz > 1 + eps)
        throw DomainError("li: |z| must be <= 1");
    if (nz.is_zero())
        return Complex(0);
    bool boundary = abs(nz - 1) <= eps;
    if (k == 1) {
        if (boundary && z.real() > 0 && abs(z.imag()) <= eps)
            throw DomainError("li: (k, z) = (1, 1) diverges");
        return -log(Complex(1) - z);
    }
    if (boundary) {
        if (z.real() > 0 && abs(z.imag()) <= eps) // z = 1
            return hurwitz_zeta(k, Complex(1), ctx);
        long zp_n = 0;
        Complex zp(1);
        auto term = [&](long n) {
            zp *= z;
            ++zp_n;
            return zp / Complex(pow(Real(n), static_cast<int>(k)));
        };
        auto root = detect_root_of_unity(z);
        unsigned group = root ? static_cast<unsigned>(root->order) : 1;
        return sum_series_levin(term, 1, ctx, group).value;
    }
    Complex zp(1);
    auto term = [&, k](long n) {
        zp *= z;
        return zp / Complex(pow(Real(n), static_cast<int>(k)));
    };
    return sum_series(term, 1, ctx).value;
}

Complex li_multi(const Composition& comp, const Complex& z, const PrecisionContext& ctx) {
    ctx.validate();
    const auto& ks = comp.ks;
    unsigned r = comp.depth();
    if (r == 1)
        return li(ks[0], z, ctx);
    Real nz = abs(z);
    Real eps = unit_circle_eps();
    if (nz > 1 + eps)
        throw DomainError("li_multi: |z| must be <= 1");
    if (nz.is_zero())
        return Complex(0);
    bool boundary = abs(nz - 1) <= eps;
    if (boundary && ks[0] < 2)
        throw DomainError("li_multi: k_1 >= 2 required on the unit circle");

    // inner[j] holds A_j(n-1) = sum over n-1 >= n_j > ... > n_r >= 1 of the
    // inverse power product; updated in O(depth) per outer term.
    std::vector<Complex> inner(r + 1, Complex(0));
    inner[r] = Complex(0);
    Complex zp(1);
    auto term = [&](long n) {
        zp *= z;
        Complex t = zp / Complex(pow(Real(n), static_cast<int>(ks[0]))) * inner[1];
        // advance A_j from n-1 to n, ascending so A_{j+1} is still at n-1
        for (unsigned j = 1; j < r; ++j) {
            Complex nk = Complex(pow(Real(n), static_cast<int>(ks[j])));
            Complex next = (j + 1 < r) ? inner[j + 1] : Complex(1);
            inner[j] += next / nk;
        }
        return t;
    };
    if (boundary) {
        // The harmonic inner sums put log powers in the remainder, which
        // Levin cannot model; the log-power tail solve can.
        auto root = detect_root_of_unity(z);
        unsigned group = root ? static_cast<unsigned>(root->order) : 1;
        return sum_log_power(term, 1, ctx, group, ks[0], r).value;
    }
    return sum_series(term, 1, ctx).value;
}

Complex li_hurwitz(const HurwitzArg& arg, const PrecisionContext& ctx) {
    ctx.validate();
    const RootOfUnity& x = arg.x;
    unsigned p = arg.p;
    if (p < 1)
        throw DomainError("li_hurwitz: p must be >= 1");
    if (is_exact_integer(arg.b) && arg.b.real() < 0)
        throw DomainError("li_hurwitz: b must not be a negative integer");
    if (x.is_one()) {
        if (p == 1)
            throw DomainError("li_hurwitz: (p, x) = (1, 1) diverges");
        return hurwitz_zeta(p, Complex(1) + arg.b, ctx);
    }
    long N = x.order;
    Complex acc(0);
    if (p == 1) {
        // The divergent digamma constants cancel because sum_r x^r = 0.
        for (long r = 1; r <= N; ++r) {
            Complex shifted = (Complex(r) + arg.b) / Complex(N);
            acc += x.embed_power(r) * digamma(shifted, ctx);
        }
        return ensure_finite(-acc / Complex(N), "li_hurwitz");
    }
    for (long r = 1; r <= N; ++r) {
        Complex shifted = (Complex(r) + arg.b) / Complex(N);
        acc += x.embed_power(r) * hurwitz_zeta(p, shifted, ctx);
    }
    return ensure_finite(acc / pow(Complex(N), static_cast<long>(p)), "li_hurwitz");
}

Complex li_hurwitz(unsigned p, const RootOfUnity& x, const Complex& b,
                   const PrecisionContext& ctx) {
    return li_hurwitz(HurwitzArg{p, x, b}, ctx);
}

Complex gen_digamma(const Complex& s, const RootOfUnity& x, const PrecisionContext& ctx) {
    ctx.validate();
    if (x.is_one())
        throw InvalidInput("gen_digamma: x = 1 is excluded");
    if (is_nonpositive_integer(s))
        throw PoleError("gen_digamma: pole at non-positive integer s");
    long N = x.order;
    Complex acc(0);
    for (long r = 0; r < N; ++r)
        acc += x.embed_power(r) * digamma((Complex(r) + s) / Complex(N), ctx);
    return ensure_finite(-acc / Complex(N), "gen_digamma");
}

Complex ext_trig(const Complex& s, const RootOfUnity& x, const PrecisionContext& ctx) {
    if (is_exact_integer(s))
        throw PoleError("ext_trig: poles at all integers");
    return gen_digamma(s, x, ctx) - gen_digamma(-s, x.inverse(), ctx) - Complex(1) / s;
}

Real zeta(unsigned k, const PrecisionContext& ctx) {
    if (k < 2)
        throw DomainError("zeta: k must be >= 2");
    static std::map<std::pair<unsigned, unsigned>, Real> cache;
    static std::mutex mu;
    unsigned d = working_digits();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({d, k});
        if (it != cache.end())
            return it->second;
    }
    Real v = li(k, Complex(1), ctx).real();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(d, k), v);
    return v;
}

} // namespace apery
