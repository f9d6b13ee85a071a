// rankin_selberg.hpp — the pair L-function of two principal series, exceptional
// poles with their certificates and levels, exceptional L-factors, and the
// symmetric-power graded-character machinery.

#ifndef RSLAB_RANKIN_SELBERG_HPP
#define RSLAB_RANKIN_SELBERG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rslab/character.hpp"

namespace rslab {

struct MultiIndex {
    std::vector<std::int64_t> entries;  // all >= 0

    std::int64_t degree() const;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// All multi-indices of the given length and degree, in ascending lexicographic
// order. There are binom(n + m - 1, m) of them.
std::vector<MultiIndex> enumerate_multi_indices(std::size_t n, std::int64_t m);
mpz_class multi_index_count(std::size_t n, std::int64_t m);

// Witness that s0 is an exceptional pole: after pairing mu_{sigma(j)} with chi_j,
// each product character equals sgn^{l_j} |.|^{-(l_j + s0)} and sum l_j = level.
struct ExceptionalCertificate {
    GaussianRational s0;
    std::int64_t level = 0;
    MultiIndex multi_index;
    std::vector<int> matching;  // 1-based: matching[j-1] = sigma(j), pairing mu_{sigma(j)} with chi_j
};

// Level m >= 0 such that s0 + s1 + s2 = -m and m has the parity of eps1 + eps2;
// equivalently, L(s, c1 c2) has a (simple) pole at s0. Empty if there is none.
std::optional<std::int64_t> gl1_pole_membership(const CharacterGL1& c1, const CharacterGL1& c2,
                                                const GaussianRational& s0);

// L(s, p1 x p2) as the product of the n^2 single-character factors. No
// general-position hypothesis; lengths must agree.
GammaProduct pair_l_function(const PrincipalSeries& p1, const PrincipalSeries& p2);

// Maximal points of the chains on which the pair L-function has a pole of order
// exactly n; the full exceptional set is the union of their descending chains.
// Inputs must be in general position.
std::vector<GaussianRational> exceptional_poles(const PrincipalSeries& p1,
                                                const PrincipalSeries& p2);

// Constructs the certificate at s0, or throws PreconditionError naming the first
// chi_j with no admissible match (including the case where the level would be
// negative). For each j the match is unique under general position; the level is
// solved exactly, never searched.
ExceptionalCertificate exceptional_certificate(const PrincipalSeries& p1,
                                               const PrincipalSeries& p2,
                                               const GaussianRational& s0);

// True iff the certificate's defining relations hold against the given pair.
bool certificate_matches(const ExceptionalCertificate& cert, const PrincipalSeries& p1,
                         const PrincipalSeries& p2);

// prod_i Gamma_R(s - s_i)^n over the exceptional anchors; 1 when there are none.
GammaProduct exceptional_l_factor(const PrincipalSeries& p1, const PrincipalSeries& p2);

// Anchor of the exceptional set inside s0 + Z: s0 + min_j (l_j - delta_j) with
// delta_j the parity of l_j.
GaussianRational exceptional_lattice_slice(const ExceptionalCertificate& cert);

struct PoleOrderWitness {
    std::int64_t order = 0;                     // pole order k at s0, always <= n
    std::vector<int> rows;                      // 1-based indices into p1, size k
    std::vector<int> cols;                      // 1-based indices into p2, size k
    std::vector<std::pair<int, int>> matches;   // the k pairs (i, j) whose factor poles at s0
};

// Pole order of the pair L-function at s0 together with the character subsets
// witnessing it; s0 must actually be a pole.
PoleOrderWitness pole_order_witness(const PrincipalSeries& p1, const PrincipalSeries& p2,
                                    const GaussianRational& s0);

// The graded piece of p tensored with the m-th symmetric power cut out by the
// multi-index l: the j-th character is twisted by the l_j-th algebraic power.
PrincipalSeries sympower_graded_series(const PrincipalSeries& p, const MultiIndex& l);

}  // namespace rslab

#endif
