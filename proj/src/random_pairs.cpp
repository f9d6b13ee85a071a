#include "rslab/random_pairs.hpp"

#include <algorithm>

namespace rslab {

namespace {

constexpr int kMaxAttempts = 10000;

GaussianRational random_exponent(Prng& rng, const PairGenOptions& opt) {
    GaussianRational z(random_noninteger_rational(rng, opt.max_denominator));
    if (rng.chance(opt.imaginary_prob))
        z.im = Rational(rng.range(-6, 6), rng.range(2, 8));
    return z;
}

std::vector<CharacterGL1> random_characters(Prng& rng, const PairGenOptions& opt) {
    std::vector<CharacterGL1> chars;
    chars.reserve(opt.n);
    for (int i = 0; i < opt.n; ++i) chars.push_back(random_character(rng, opt));
    return chars;
}

PrincipalSeries random_gp_series(Prng& rng, const PairGenOptions& opt) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        PrincipalSeries p(random_characters(rng, opt));
        if (is_general_position(p)) return p;
    }
    throw Error("failed to sample a general-position series");
}

}  // namespace

Rational random_noninteger_rational(Prng& rng, long max_denominator) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const long den = rng.range(2, max_denominator);
        const long num = rng.range(-4 * den, 4 * den);
        Rational r(num, den);
        if (!r.is_integer()) return r;
    }
    throw Error("failed to sample a non-integer rational");
}

CharacterGL1 random_character(Prng& rng, const PairGenOptions& opt) {
    return {rng.range(0, 1), random_exponent(rng, opt)};
}

CharacterGL1 matched_character(const CharacterGL1& chi, std::int64_t l, const GaussianRational& s0) {
    return char_mul(char_dual(algebraic_twist(chi, l)), CharacterGL1(0, -s0));
}

GeneratedPair random_general_position_pair(Prng& rng, const PairGenOptions& opt) {
    const double roll = rng.real01();
    const bool full = roll < opt.full_match_prob;
    const bool partial = !full && roll < opt.full_match_prob + opt.partial_match_prob;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        PrincipalSeries p2 = random_gp_series(rng, opt);
        std::vector<CharacterGL1> mus = random_characters(rng, opt);

        if (full || partial) {
            GaussianRational s0(random_noninteger_rational(rng, opt.max_denominator));
            if (rng.chance(opt.imaginary_prob)) s0.im = Rational(rng.range(-4, 4), rng.range(2, 6));
            const int matches = full ? opt.n : static_cast<int>(rng.range(1, std::max(1, opt.n - 1)));
            // Match chi_j for j < matches against distinct slots of p1, then
            // shuffle so the matching is not the identity permutation.
            for (int j = 0; j < matches; ++j)
                mus[j] = matched_character(p2.at(j), rng.range(0, opt.max_twist), s0);
            for (int i = opt.n - 1; i > 0; --i)
                std::swap(mus[i], mus[rng.below(static_cast<std::uint64_t>(i + 1))]);
        }

        PrincipalSeries p1{mus};
        if (!is_general_position(p1)) continue;
        return {std::move(p1), std::move(p2), full};
    }
    throw Error("failed to sample a general-position pair");
}

GeneratedPair random_strong_gp_pair(Prng& rng, const PairGenOptions& opt) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        PrincipalSeries p1 = random_gp_series(rng, opt);
        PrincipalSeries p2 = random_gp_series(rng, opt);
        if (is_strong_general_position(p1, p2)) return {std::move(p1), std::move(p2), false};
    }
    throw Error("failed to sample a strong-general-position pair");
}

}  // namespace rslab
