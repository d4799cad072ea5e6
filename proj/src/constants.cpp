#include "apery/constants.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace apery::constants {

namespace {

unsigned current_digits() {
    return boost::multiprecision::mpfr_float::default_precision();
}

template <typename Fill>
const Real& cached(std::map<unsigned, Real>& cache, std::mutex& mu, Fill fill) {
    unsigned d = current_digits();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, fill()).first;
    return it->second;
}

} // namespace

Real pi() {
    static std::map<unsigned, Real> cache;
    static std::mutex mu;
    return cached(cache, mu, [] {
        Real v;
        mpfr_const_pi(v.backend().data(), MPFR_RNDN);
        return v;
    });
}

Real euler_gamma() {
    static std::map<unsigned, Real> cache;
    static std::mutex mu;
    return cached(cache, mu, [] {
        Real v;
        mpfr_const_euler(v.backend().data(), MPFR_RNDN);
        return v;
    });
}

Real log2() {
    static std::map<unsigned, Real> cache;
    static std::mutex mu;
    return cached(cache, mu, [] {
        Real v;
        mpfr_const_log2(v.backend().data(), MPFR_RNDN);
        return v;
    });
}

Real zeta_ref(unsigned k) {
    Real v;
    mpfr_zeta_ui(v.backend().data(), k, MPFR_RNDN);
    return v;
}

Real bernoulli_2n(unsigned n) {
    static std::map<unsigned, std::map<unsigned, Real>> cache;
    static std::mutex mu;
    unsigned d = current_digits();
    std::lock_guard<std::mutex> lock(mu);
    auto& table = cache[d];
    auto it = table.find(n);
    if (it != table.end())
        return it->second;
    Real v;
    if (n == 0) {
        v = 1;
    } else {
        // B_{2n} = (-1)^(n+1) * 2 * (2n)! * zeta(2n) / (2*pi)^(2n)
        Real fact = 1;
        for (unsigned j = 2; j <= 2 * n; ++j)
            fact *= j;
        v = 2 * fact * zeta_ref(2 * n) / pow(2 * pi(), static_cast<int>(2 * n));
        if (n % 2 == 0)
            v = -v;
    }
    table.emplace(n, v);
    return v;
}

} // namespace apery::constants
