#include "rslab/derivatives.hpp"

#include <algorithm>

namespace rslab {

namespace {

// All size-r subsets of {1..n} in increasing lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int pos = r - 1;
        while (pos >= 0 && cur[pos] == n - (r - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < r; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

PrincipalSeries select(const PrincipalSeries& p, const std::vector<int>& subset) {
    std::vector<CharacterGL1> chars;
    chars.reserve(subset.size());
    for (int i : subset) chars.push_back(p.at(static_cast<std::size_t>(i - 1)));
    return PrincipalSeries(std::move(chars));
}

FactorizationReport build_report(const PrincipalSeries& p1, const PrincipalSeries& p2,
                             bool strong_mode) {
    const int n = static_cast<int>(p1.n());
    FactorizationReport report;
    report.lhs = pair_l_function(p1, p2).inverse();

    for (int k = 0; k < n; ++k) {
        const DerivativeDecomposition d1 = derivative(p1, k);
        const DerivativeDecomposition d2 = derivative(p2, k);
        for (const DerivativeComponent& c1 : d1.components) {
            for (const DerivativeComponent& c2 : d2.components) {
                Contribution c;
                c.k = k;
                c.subset1 = c1.subset;
                c.subset2 = c2.subset;
                c.inverse_exceptional = exceptional_l_factor(c1.series, c2.series).inverse();
                c.skipped_by_strong_gp = strong_mode && k < n - 1;
                report.contributions.push_back(std::move(c));
            }
        }
    }

    std::vector<GammaProduct> lcm_inputs;
    bool skipped_all_one = true;
    for (const Contribution& c : report.contributions) {
        if (c.skipped_by_strong_gp)
            skipped_all_one = skipped_all_one && c.inverse_exceptional.is_one();
        else
            lcm_inputs.push_back(c.inverse_exceptional);
    }
    report.rhs = lcm_inverse_products(lcm_inputs);
    report.equal = skipped_all_one && report.lhs == report.rhs;
    return report;
}

}  // namespace

DerivativeDecomposition derivative(const PrincipalSeries& p, int k) {
    const int n = static_cast<int>(p.n());
    if (k < 0 || k >= n)
        throw PreconditionError("derivative order k = " + std::to_string(k) +
                                " out of range [0, " + std::to_string(n) + ")");
    if (n >= 2) require_general_position(p, "pi");

    DerivativeDecomposition d;
    d.k = k;
    for (auto& subset : subsets(n, n - k)) {
        PrincipalSeries component = select(p, subset);
        d.components.push_back({std::move(subset), std::move(component)});
    }
    return d;
}

FactorizationReport verify_factorization(const PrincipalSeries& p1, const PrincipalSeries& p2) {
    if (p1.n() != p2.n())
        throw PreconditionError("principal series have different lengths: " +
                                std::to_string(p1.n()) + " vs " + std::to_string(p2.n()));
    if (p1.n() >= 2) {
        require_general_position(p1, "pi1");
        require_general_position(p2, "pi2");
    }
    return build_report(p1, p2, /*strong_mode=*/false);
}

FactorizationReport strong_gp_contributions(const PrincipalSeries& p1, const PrincipalSeries& p2) {
    if (!is_strong_general_position(p1, p2))
        throw PreconditionError("inputs are not in strong general position");
    return build_report(p1, p2, /*strong_mode=*/true);
}

}  // namespace rslab
