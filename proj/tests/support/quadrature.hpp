#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "apery/constants.hpp"
#include "apery/precision.hpp"

namespace apery::testsupport {

// Tanh-sinh (double exponential) quadrature over (0, 1). The integrand
// receives both t and 1-t so endpoint-singular factors can be formed
// without cancellation. Nodes are built once per precision level and
// shared across integrands.
class TanhSinh {
  public:
    explicit TanhSinh(int max_level = 10, double u_max = 6.0) : max_level_(max_level) {
        Real pi_half = constants::pi() / 2;
        levels_.resize(max_level_ + 1);
        for (int level = 0; level <= max_level_; ++level) {
            Real h = pow(Real(2), -level);
            long j_max = static_cast<long>(u_max * std::ldexp(1.0, level));
            for (long j = -j_max; j <= j_max; ++j) {
                bool fresh = (level == 0) || (j % 2 != 0);
                if (!fresh)
                    continue;
                Real u = Real(j) * h;
                Real w = pi_half * sinh(u);
                // t = 1/(1+e^{-2w}), 1-t = 1/(1+e^{2w}); both exact to ulp
                Real t = 1 / (1 + exp(-2 * w));
                Real omt = 1 / (1 + exp(2 * w));
                Real sech = 2 / (exp(w) + exp(-w));
                Real weight = pi_half * cosh(u) * sech * sech / 2;
                if (weight.is_zero())
                    continue;
                levels_[level].push_back(Node{t, omt, weight});
            }
        }
    }

    // f(t, 1-t); refines until two successive levels agree within tol.
    Real integrate(const std::function<Real(const Real&, const Real&)>& f,
                   const Real& tol) const {
        Real h(1), acc(0), prev(0);
        for (int level = 0; level <= max_level_; ++level) {
            Real partial(0);
            for (const auto& nd : levels_[level])
                partial += nd.weight * f(nd.t, nd.omt);
            if (level == 0) {
                acc = partial;
            } else {
                h /= 2;
                acc = acc / 2 + h * partial;
            }
            if (level == 0) {
                acc *= h; // h = 1 at level 0, kept for clarity
                prev = acc;
                continue;
            }
            if (level >= 3 && abs(acc - prev) < tol)
                return acc;
            prev = acc;
        }
        return prev;
    }

  private:
    struct Node {
        Real t, omt, weight;
    };
    int max_level_;
    std::vector<std::vector<Node>> levels_;
};

} // namespace apery::testsupport
