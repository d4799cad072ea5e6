#include "apery/series.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace apery {

namespace {

Real pow_int(Real base, long e) {
    Real acc = 1;
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Levin u-transform in the triangular in-place form: after feeding partial
// sums S_0..S_m, slot 0 holds L_m^{(0)}.
class LevinU {
  public:
    explicit LevinU(Real beta = 1) : beta_(std::move(beta)) {}

    Complex feed(const Complex& sum, const Complex& omega) {
        long m = static_cast<long>(num_.size());
        num_.push_back(sum / omega);
        den_.push_back(Complex(1) / omega);
        for (long j = m - 1; j >= 0; --j) {
            long k = m - 1 - j;
            Real c;
            if (k == 0) {
                c = 1;
            } else {
                c = (beta_ + j) * pow_int(beta_ + j + k, k - 1) / pow_int(beta_ + j + k + 1, k);
            }
            num_[j] = num_[j + 1] - c * Complex(num_[j]);
            den_[j] = den_[j + 1] - c * Complex(den_[j]);
            Real dm = abs(den_[j]);
            if (dm > max_den_)
                max_den_ = dm;
        }
        return num_[0] / den_[0];
    }

    // Loss-of-precision monitor: cancellation in the denominator column
    // eats log10(max|D|/|D_0|) digits of the working precision; the
    // transform is unusable once that exceeds the budget for `tol`.
    bool unstable(const Real& tol) const {
        if (den_.empty())
            return false;
        Real head = abs(den_[0]);
        if (head.is_zero())
            return true;
        unsigned digits = boost::multiprecision::mpfr_float::default_precision();
        return max_den_ / head > pow(Real(10), static_cast<long>(digits)) * tol / 100;
    }

  private:
    Real beta_;
    Real max_den_ = 0;
    std::vector<Complex> num_, den_;
};

// Neville extrapolation of S(M) -> M = infinity in the variable 1/(M+1),
// over the most recent points. Fallback path only.
Complex richardson_tail(const std::vector<Complex>& sums, Real& err) {
    size_t n = sums.size();
    size_t use = std::min<size_t>(n, 10);
    std::vector<Complex> p(sums.end() - use, sums.end());
    std::vector<Real> h(use);
    for (size_t i = 0; i < use; ++i)
        h[i] = Real(1) / Real(static_cast<long>(n - use + i + 1));
    Complex prev = p.back();
    for (size_t level = 1; level < use; ++level) {
        for (size_t i = 0; i + level < use; ++i) {
            p[i] = (Complex(h[i]) * p[i + 1] - Complex(h[i + level]) * p[i]) /
                   Complex(h[i] - h[i + level]);
        }
    }
    err = abs(p[0] - prev);
    return p[0];
}

// Solve S(N_s) = S + sum_{i<=I, j<=J} c_ij log^j(N_s)/N_s^{decay-1+i} for S
// by Gaussian elimination with partial pivoting; the system is square.
Complex logpow_solve(const std::vector<long>& Ns, const std::vector<Complex>& SN,
                     unsigned decay, unsigned I, unsigned J) {
    size_t cols = 1 + static_cast<size_t>(I + 1) * (J + 1);
    size_t m = Ns.size();
    std::vector<std::vector<Complex>> A(m, std::vector<Complex>(cols));
    std::vector<Complex> b(SN);
    for (size_t s = 0; s < m; ++s) {
        Real N = Ns[s];
        Real lgN = log(N);
        A[s][0] = Complex(1);
        size_t col = 1;
        for (unsigned i = 0; i <= I; ++i) {
            Real Npow = pow(N, -(Real(decay) - 1 + i));
            Real lp = 1;
            for (unsigned j = 0; j <= J; ++j) {
                A[s][col++] = Complex(Npow * lp);
                lp *= lgN;
            }
        }
    }
    for (size_t c = 0; c < cols; ++c) {
        size_t piv = c;
        Real best = abs(A[c][c]);
        for (size_t r = c + 1; r < m; ++r) {
            Real v = abs(A[r][c]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best.is_zero())
            throw NonConvergence("sum_log_power: singular tail model");
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (size_t r = c + 1; r < m; ++r) {
            Complex f = A[r][c] / A[c][c];
            for (size_t cc = c; cc < cols; ++cc)
                A[r][cc] -= f * A[c][cc];
            b[r] -= f * b[c];
        }
    }
    std::vector<Complex> x(cols);
    for (size_t r = cols; r-- > 0;) {
        Complex acc = b[r];
        for (size_t cc = r + 1; cc < cols; ++cc)
            acc -= A[r][cc] * x[cc];
        x[r] = acc / A[r][r];
    }
    return x[0];
}

} // namespace

SeriesResult sum_log_power(const TermFn& term, long start, const PrecisionContext& ctx,
                           unsigned group, unsigned decay, unsigned max_log_pow) {
    ctx.validate();
    if (group < 1 || decay < 2)
        throw InvalidInput("sum_log_power: group >= 1 and decay >= 2 required");
    const Real tol = ctx.target_tol;
    const unsigned J = max_log_pow;
    const unsigned I_max = 14;
    size_t cols_max = 1 + static_cast<size_t>(I_max + 1) * (J + 1);

    // Geometric sample grid, rounded up to multiples of `group` so every
    // sampled partial sum closes a full oscillation period.
    std::vector<long> Ns;
    double cur = std::max<double>(300.0, 20.0 * group);
    long prev = 0;
    while (Ns.size() < cols_max) {
        long N = static_cast<long>(cur);
        N += (group - N % group) % group;
        if (N > prev) {
            Ns.push_back(N);
            prev = N;
        }
        cur *= 1.13;
    }
    if (Ns.back() - start + 1 > ctx.max_terms * 8L)
        throw NonConvergence("sum_log_power: sample grid exceeds the term budget");

    std::vector<Complex> SN(Ns.size());
    Complex sum(0);
    size_t idx = 0;
    long n = start;
    long used = 0;
    for (; idx < Ns.size(); ++n, ++used) {
        Complex t = term(n);
        ensure_finite(t, "sum_log_power term");
        sum += t;
        long count = n - start + 1;
        while (idx < Ns.size() && Ns[idx] == count)
            SN[idx++] = sum;
    }

    Complex prev_est(0);
    bool have_prev = false;
    for (unsigned I = 8; I <= I_max; I += 3) {
        size_t cols = 1 + static_cast<size_t>(I + 1) * (J + 1);
        std::vector<long> ns(Ns.end() - cols, Ns.end());
        std::vector<Complex> ss(SN.end() - cols, SN.end());
        Complex est = logpow_solve(ns, ss, decay, I, J);
        ensure_finite(est, "sum_log_power estimate");
        if (have_prev) {
            Real err = abs(est - prev_est);
            if (err < tol / 2)
                return {est, err, used, true};
        }
        prev_est = est;
        have_prev = true;
    }
    throw NonConvergence("sum_log_power: model orders failed to agree");
}

SeriesResult sum_series(const TermFn& term, long start, const PrecisionContext& ctx) {
    ctx.validate();
    const Real tol = ctx.target_tol;
    Complex sum(0);
    std::deque<Real> last_mags;
    int small_run = 0;
    long n = start;
    for (long used = 0; used < ctx.max_terms; ++used, ++n) {
        Complex t = term(n);
        ensure_finite(t, "sum_series term");
        sum += t;
        Real mag = abs(t);
        last_mags.push_back(mag);
        if (last_mags.size() > 8)
            last_mags.pop_front();
        small_run = (mag < tol / 8) ? small_run + 1 : 0;
        if (small_run >= 4 && last_mags.size() == 8) {
            Real tail;
            if (mag.is_zero()) {
                tail = 0;
            } else {
                Real oldest = last_mags.front();
                Real ratio;
                if (oldest.is_zero()) {
                    ratio = Real("0.5");
                } else {
                    ratio = pow(mag / oldest, Real(1) / 7);
                    if (ratio > Real("0.99"))
                        ratio = Real("0.99");
                }
                tail = mag * ratio / (1 - ratio);
            }
            if (tail < tol / 2) {
                return {sum, tail, used + 1, true};
            }
        }
    }
    throw NonConvergence("sum_series: max_terms reached before the stopping rule fired");
}

SeriesResult sum_series_levin(const TermFn& term, long start, const PrecisionContext& ctx,
                              unsigned group) {
    ctx.validate();
    if (group < 1)
        throw InvalidInput("sum_series_levin: group must be >= 1");
    const Real tol = ctx.target_tol;
    const Real beta = 1;

    LevinU levin;
    std::vector<Complex> partials;
    Complex sum(0);
    Complex est(0), prev_est(0), prev2_est(0);
    Real best_err = -1;
    int good = 0, stalled = 0, fed = 0;
    long n = start;
    long used = 0;
    long max_groups = ctx.max_terms / static_cast<long>(group);
    if (max_groups > 4000)
        max_groups = 4000;

    for (long m = 0; m < max_groups; ++m) {
        Complex g(0);
        for (unsigned i = 0; i < group; ++i, ++n, ++used) {
            Complex t = term(n);
            ensure_finite(t, "sum_series_levin term");
            g += t;
        }
        sum += g;
        partials.push_back(sum);
        if (abs(g).is_zero()) {
            // A vanishing group: if the raw terms have died out, the plain
            // partial sum is already the answer.
            if (m >= 2 && abs(partials[m] - partials[m - 2]).is_zero())
                return {sum, Real(0), used, true};
            continue;
        }
        Complex omega = Complex((beta + m)) * g;
        prev2_est = prev_est;
        prev_est = est;
        est = levin.feed(sum, omega);
        ++fed;
        if (fed >= 4 && isfinite(est)) {
            Real err = abs(est - prev_est) + abs(est - prev2_est);
            if (best_err < 0 || err < best_err) {
                best_err = err;
                stalled = 0;
            } else {
                ++stalled;
            }
            good = (err < tol / 4) ? good + 1 : 0;
            if (good >= 2)
                return {est, err, used, true};
            if (stalled > 30 || levin.unstable(tol))
                break;
        } else if (!isfinite(est)) {
            break;
        }
    }

    // Loss-of-precision monitor tripped or the group budget ran out: plain
    // grouped summation with Richardson extrapolation.
    if (partials.size() >= 6) {
        Real err;
        Complex val = richardson_tail(partials, err);
        if (isfinite(val) && err < tol)
            return {val, err, used, true};
    }
    throw NonConvergence("sum_series_levin: acceleration failed to reach target tolerance");
}

SeriesResult sum_grouped_unit_circle(const TermFn& term_mag, const RootOfUnity& x,
                                     const PrecisionContext& ctx) {
    if (x.is_one())
        throw InvalidInput("sum_grouped_unit_circle: x = 1 is excluded");
    long order = x.order;
    std::vector<Complex> powers(order);
    for (long r = 0; r < order; ++r)
        powers[r] = x.embed_power(r);
    auto term = [&](long n) { return term_mag(n) * powers[n % order]; };
    return sum_series_levin(term, 1, ctx, static_cast<unsigned>(order));
}

} // namespace apery
