// random_pairs.hpp — seeded generation of general-position pairs for the
// randomized verification suites. Purely random exponents almost never create
// pole coincidences, so the generator deliberately injects diagonal matchings
// (full ones produce exceptional poles, partial ones produce lower-order poles).

#ifndef RSLAB_RANDOM_PAIRS_HPP
#define RSLAB_RANDOM_PAIRS_HPP

#include "rslab/character.hpp"
#include "rslab/prng.hpp"

namespace rslab {

struct PairGenOptions {
    int n = 2;
    long max_denominator = 16;   // kept small so exact arithmetic stays fast
    long max_twist = 4;          // bound on injected multi-index entries
    double full_match_prob = 0.4;
    double partial_match_prob = 0.2;
    double imaginary_prob = 0.15;
};

struct GeneratedPair {
    PrincipalSeries p1;
    PrincipalSeries p2;
    bool injected_full_match = false;
};

// A non-integer rational with denominator in [2, max_denominator].
Rational random_noninteger_rational(Prng& rng, long max_denominator);

CharacterGL1 random_character(Prng& rng, const PairGenOptions& opt);

// The inducing character forced by a diagonal match at s0 with twist l:
// mu = (chi alpha^l)^{-1} |.|^{-s0}.
CharacterGL1 matched_character(const CharacterGL1& chi, std::int64_t l, const GaussianRational& s0);

// Both series in general position; match injection per the options.
GeneratedPair random_general_position_pair(Prng& rng, const PairGenOptions& opt);

// Rejection-samples (no injection) until the strong predicate holds.
GeneratedPair random_strong_gp_pair(Prng& rng, const PairGenOptions& opt);

}  // namespace rslab

#endif
