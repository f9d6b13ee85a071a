// gamma_product.hpp — canonical finite products  prod_k Gamma_R(s - a_k)^{m_k}
// with exact shifts and signed integer exponents, plus the pole-chain calculus:
// order at a point, chain decomposition, and the lcm of inverse products.

#ifndef RSLAB_GAMMA_PRODUCT_HPP
#define RSLAB_GAMMA_PRODUCT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rslab/gaussian.hpp"

namespace rslab {

// One maximal arithmetic progression {anchor - 2k : k >= 0} carrying factors of a
// product. cumulative at offset k is the signed sum of exponents of all factors
// whose shift is at or above anchor - 2k; for a plain Gamma_R product this is the
// pole order at that point, and ord_at = -cumulative. Offsets list exactly the
// breakpoints (factor shifts); between/below them the value is constant, ending
// at terminal = total signed multiplicity on the chain.
struct PoleChain {
    struct Step {
        std::int64_t offset;      // k >= 0, point is anchor - 2k
        std::int64_t cumulative;  // signed multiplicity at and below this breakpoint
    };

    GaussianRational anchor;  // maximal factor shift on the chain
    std::vector<Step> steps;  // ascending offsets, steps.front().offset == 0
    std::int64_t terminal = 0;

    // Signed multiplicity of the product at anchor - 2k (k may exceed the last step).
    std::int64_t cumulative_at(std::int64_t k) const;
};

class GammaProduct {
public:
    struct Factor {
        GaussianRational shift;
        std::int64_t exp;  // nonzero
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    GammaProduct() = default;  // the constant 1

    static GammaProduct one() { return {}; }
    // Gamma_R(s - shift)^exp; exp = 0 gives 1.
    static GammaProduct gamma_r(GaussianRational shift, std::int64_t exp = 1);
    static GammaProduct from_factors(std::vector<Factor> factors);

    bool is_one() const { return factors_.empty(); }
    std::span<const Factor> factors() const { return factors_; }

    GammaProduct inverse() const;
    friend GammaProduct operator*(const GammaProduct& f, const GammaProduct& g);
    GammaProduct& operator*=(const GammaProduct& g) { return *this = *this * g; }

    friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

    // Order of vanishing at z: sum of -exp over factors whose chain covers z.
    // Negative = pole of that order, positive = zero of that order.
    std::int64_t order_at(const GaussianRational& z) const;

    // Every factor's exponent is <= 0 (a finite product of inverse Gamma_R factors).
    bool is_inverse_product() const;

    // Chain decomposition of the factor support, canonically ordered by
    // (im, re mod 2) of the chain key.
    std::vector<PoleChain> pole_chains() const;

    // Human-readable canonical form, e.g. "Gamma_R(s+11/6) * Gamma_R(s)^2".
    std::string str() const;

private:
    // sorted by shift (im, then re), distinct shifts, no zero exponents
    std::vector<Factor> factors_;
};

// Minimal product H of inverse Gamma_R factors whose order of vanishing at every
// point is the pointwise maximum of the inputs'. Inputs must be inverse products;
// the empty list is rejected.
GammaProduct lcm_inverse_products(std::span<const GammaProduct> inputs);

}  // namespace rslab

#endif
