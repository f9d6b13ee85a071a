// Test-only oracles, kept independent of the implementation paths they check.

#ifndef RSLAB_TESTS_ORACLES_HPP
#define RSLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "rslab/rankin_selberg.hpp"

namespace rslab::testing {

// Brute-force route to the exceptional anchors: enumerate every bijection of
// inducing characters and every multi-index with entries <= l_max, solve for the
// s0 forced by the first column, keep candidates whose relations all hold, and
// reduce to the maximal certified point on each chain.
inline std::vector<GaussianRational> brute_force_anchors(const PrincipalSeries& p1,
                                                         const PrincipalSeries& p2,
                                                         std::int64_t l_max) {
    const std::size_t n = p1.n();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});

    std::vector<GaussianRational> certified;
    do {
        for (std::int64_t l0 = 0; l0 <= l_max; ++l0) {
            const CharacterGL1& mu0 = p1.at(sigma[0]);
            const CharacterGL1& chi0 = p2.at(0);
            if (((mu0.eps() + chi0.eps()) & 1) != (l0 & 1)) continue;
            const GaussianRational s0 =
                -(GaussianRational(Rational(static_cast<long>(l0))) + mu0.s() + chi0.s());
            bool ok = true;
            for (std::size_t j = 1; j < n && ok; ++j) {
                const auto m = gl1_pole_membership(p1.at(sigma[j]), p2.at(j), s0);
                ok = m.has_value() && *m <= l_max;
            }
            if (ok) certified.push_back(s0);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::sort(certified.begin(), certified.end());
    certified.erase(std::unique(certified.begin(), certified.end()), certified.end());

    std::vector<GaussianRational> anchors;
    for (const GaussianRational& s0 : certified) {
        const bool dominated =
            std::any_of(certified.begin(), certified.end(), [&](const GaussianRational& other) {
                return other != s0 && chain_covers(other, s0);
            });
        if (!dominated) anchors.push_back(s0);
    }
    return anchors;
}

}  // namespace rslab::testing

#endif
