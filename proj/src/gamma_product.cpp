#include "rslab/gamma_product.hpp"

#include <algorithm>
#include <map>

namespace rslab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow in Gamma_R product");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw Error("exponent overflow in Gamma_R product");
    return -a;
}

// Offset k >= 0 with point = anchor - 2k; both on one chain, so the quotient is exact.
std::int64_t offset_on_chain(const GaussianRational& anchor, const GaussianRational& point) {
    const Rational diff = (anchor.re - point.re) / Rational(2);
    mpz_class k = diff.numerator();
    if (!k.fits_slong_p()) throw Error("chain offset out of range");
    return k.get_si();
}

}  // namespace

std::int64_t PoleChain::cumulative_at(std::int64_t k) const {
    std::int64_t value = 0;
    for (const Step& st : steps) {
        if (st.offset > k) break;
        value = st.cumulative;
    }
    return value;
}

GammaProduct GammaProduct::gamma_r(GaussianRational shift, std::int64_t exp) {
    GammaProduct p;
    if (exp != 0) p.factors_.push_back({std::move(shift), exp});
    return p;
}

GammaProduct GammaProduct::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.shift < b.shift; });
    GammaProduct p;
    for (Factor& f : factors) {
        if (!p.factors_.empty() && p.factors_.back().shift == f.shift) {
            p.factors_.back().exp = checked_add(p.factors_.back().exp, f.exp);
            if (p.factors_.back().exp == 0) p.factors_.pop_back();
        } else if (f.exp != 0) {
            p.factors_.push_back(std::move(f));
        }
    }
    return p;
}

GammaProduct GammaProduct::inverse() const {
    GammaProduct p;
    p.factors_.reserve(factors_.size());
    for (const Factor& f : factors_) p.factors_.push_back({f.shift, checked_neg(f.exp)});
    return p;
}

GammaProduct operator*(const GammaProduct& f, const GammaProduct& g) {
    std::vector<GammaProduct::Factor> merged;
    merged.reserve(f.factors_.size() + g.factors_.size());
    merged.insert(merged.end(), f.factors_.begin(), f.factors_.end());
    merged.insert(merged.end(), g.factors_.begin(), g.factors_.end());
    return GammaProduct::from_factors(std::move(merged));
}

std::int64_t GammaProduct::order_at(const GaussianRational& z) const {
    std::int64_t ord = 0;
    for (const Factor& f : factors_)
        if (chain_covers(f.shift, z)) ord = checked_add(ord, checked_neg(f.exp));
    return ord;
}

bool GammaProduct::is_inverse_product() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.exp < 0; });
}

std::vector<PoleChain> GammaProduct::pole_chains() const {
    // Group factors by chain key; within a chain order shifts descending so the
    // cumulative sums accumulate from the anchor downward.
    std::map<GaussianRational, std::vector<Factor>> chains;
    for (const Factor& f : factors_) chains[chain_key(f.shift)].push_back(f);

    std::vector<PoleChain> out;
    out.reserve(chains.size());
    for (auto& [key, fs] : chains) {
        std::sort(fs.begin(), fs.end(),
                  [](const Factor& a, const Factor& b) { return b.shift < a.shift; });
        PoleChain chain;
        chain.anchor = fs.front().shift;
        std::int64_t cum = 0;
        for (const Factor& f : fs) {
            cum = checked_add(cum, f.exp);
            chain.steps.push_back({offset_on_chain(chain.anchor, f.shift), cum});
        }
        chain.terminal = cum;
        out.push_back(std::move(chain));
    }
    return out;
}

std::string GammaProduct::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const Factor& f : factors_) {
        if (!s.empty()) s += " * ";
        s += "Gamma_R(s";
        if (!f.shift.is_zero()) {
            if (f.shift.is_real() && f.shift.re < Rational(0)) {
                s += "+" + (-f.shift.re).str();
            } else if (f.shift.is_real()) {
                s += "-" + f.shift.re.str();
            } else {
                s += "-(" + f.shift.str() + ")";
            }
        }
        s += ")";
        if (f.exp != 1) s += "^" + std::to_string(f.exp);
    }
    return s;
}

GammaProduct lcm_inverse_products(std::span<const GammaProduct> inputs) {
    if (inputs.empty()) throw PreconditionError("lcm of an empty family");
    for (const GammaProduct& f : inputs)
        if (!f.is_inverse_product())
            throw PreconditionError("lcm input is not an inverse Gamma_R product: " + f.str());

    // Per chain, each input's order of vanishing is a nondecreasing step function
    // of depth with breakpoints at its factor shifts. The pointwise max over the
    // union of breakpoints is again such a function; its first differences give
    // the factor multiplicities of the minimal realization.
    struct ChainData {
        std::vector<GaussianRational> breakpoints;                 // descending
        std::vector<std::vector<GammaProduct::Factor>> per_input;  // factors on this chain
    };
    std::map<GaussianRational, ChainData> chains;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (const auto& f : inputs[i].factors()) {
            ChainData& cd = chains[chain_key(f.shift)];
            cd.per_input.resize(inputs.size());
            cd.per_input[i].push_back(f);
            cd.breakpoints.push_back(f.shift);
        }
    }

    std::vector<GammaProduct::Factor> result;
    for (auto& [key, cd] : chains) {
        std::sort(cd.breakpoints.begin(), cd.breakpoints.end(),
                  [](const GaussianRational& a, const GaussianRational& b) { return b < a; });
        cd.breakpoints.erase(std::unique(cd.breakpoints.begin(), cd.breakpoints.end()),
                             cd.breakpoints.end());

        std::int64_t above = 0;  // max order just above the current breakpoint
        for (const GaussianRational& x : cd.breakpoints) {
            std::int64_t best = 0;
            for (const auto& fs : cd.per_input) {
                std::int64_t ord = 0;
                for (const auto& f : fs)
                    if (chain_covers(f.shift, x)) ord = checked_add(ord, checked_neg(f.exp));
                best = std::max(best, ord);
            }
            if (best > above) result.push_back({x, checked_neg(best - above)});
            above = best;
        }
    }
    return GammaProduct::from_factors(std::move(result));
}

}  // namespace rslab
