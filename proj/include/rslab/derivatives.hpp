// derivatives.hpp — derivative decompositions of principal series into character
// subsets, and the verifier for the factorization of the inverse pair L-function
// as an lcm of inverse exceptional L-factors of derivative components.

#ifndef RSLAB_DERIVATIVES_HPP
#define RSLAB_DERIVATIVES_HPP

#include <vector>

#include "rslab/rankin_selberg.hpp"

namespace rslab {

struct DerivativeComponent {
    std::vector<int> subset;  // 1-based, strictly increasing, size n - k
    PrincipalSeries series;
};

// The k-th derivative of a length-n series: one component per (n-k)-element
// subset of the inducing characters, subsets in increasing lexicographic order.
struct DerivativeDecomposition {
    int k = 0;
    std::vector<DerivativeComponent> components;
};

// Requires 0 <= k < n and general position.
DerivativeDecomposition derivative(const PrincipalSeries& p, int k);

struct Contribution {
    int k = 0;
    std::vector<int> subset1;          // component of the first series
    std::vector<int> subset2;          // component of the second series
    GammaProduct inverse_exceptional;  // L_ex(s, component1 x component2)^{-1}
    bool skipped_by_strong_gp = false;
};

struct FactorizationReport {
    GammaProduct lhs;  // L(s, p1 x p2)^{-1}
    GammaProduct rhs;  // the lcm of the contributions
    bool equal = false;
    std::vector<Contribution> contributions;
};

// Computes both sides of the factorization identity over the full (k, i, j) grid
// and reports whether they agree in canonical form. Equality is expected for
// every general-position input; a false report is a counterexample (or a bug)
// and carries all intermediates.
FactorizationReport verify_factorization(const PrincipalSeries& p1, const PrincipalSeries& p2);

// Strong-general-position shortcut: contributions with k < n-1 are checked to be
// the constant 1 and skipped; the lcm is taken over the GL(1) terms alone, which
// must reproduce the plain product of the n^2 inverse single factors. Rejects
// inputs that are not in strong general position.
FactorizationReport strong_gp_contributions(const PrincipalSeries& p1, const PrincipalSeries& p2);

}  // namespace rslab

#endif
