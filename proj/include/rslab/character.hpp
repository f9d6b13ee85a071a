// character.hpp — characters sgn^eps |.|^s of the multiplicative group of the reals,
// principal-series inducing data, and the (strong) general-position predicates.

#ifndef RSLAB_CHARACTER_HPP
#define RSLAB_CHARACTER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rslab/gamma_product.hpp"
#include "rslab/gaussian.hpp"

namespace rslab {

class CharacterGL1 {
public:
    CharacterGL1() = default;
    // Parity is reduced mod 2 on construction; any integer is accepted.
    CharacterGL1(std::int64_t eps, GaussianRational s)
        : eps_(static_cast<int>(((eps % 2) + 2) % 2)), s_(std::move(s)) {}

    int eps() const { return eps_; }
    const GaussianRational& s() const { return s_; }

    bool is_trivial() const { return eps_ == 0 && s_.is_zero(); }

    friend bool operator==(const CharacterGL1&, const CharacterGL1&) = default;
    friend std::strong_ordering operator<=>(const CharacterGL1& a, const CharacterGL1& b) {
        if (auto c = a.eps_ <=> b.eps_; c != 0) return c;
        return a.s_ <=> b.s_;
    }

private:
    int eps_ = 0;
    GaussianRational s_;
};

// Pointwise product: parities add mod 2, exponents add.
CharacterGL1 char_mul(const CharacterGL1& a, const CharacterGL1& b);

// Inverse character (the contragredient for GL(1)): same parity, negated exponent.
CharacterGL1 char_dual(const CharacterGL1& a);

// Multiply by the l-th power of the algebraic character a |-> a, i.e. sgn|.|.
CharacterGL1 algebraic_twist(const CharacterGL1& a, std::int64_t l);

// Local L-factor of sgn^eps |.|^s as a single Gamma_R(s_var + s + eps),
// stored as Gamma_R(s_var - shift) with shift = -(s + eps).
GammaProduct l_factor(const CharacterGL1& a);

class PrincipalSeries {
public:
    explicit PrincipalSeries(std::vector<CharacterGL1> chars);

    std::size_t n() const { return chars_.size(); }
    const CharacterGL1& at(std::size_t i) const { return chars_[i]; }  // 0-based
    const std::vector<CharacterGL1>& chars() const { return chars_; }

    // Representations are unchanged under permutation of the inducing characters;
    // equality is multiset equality.
    friend bool equivalent(const PrincipalSeries& a, const PrincipalSeries& b);

private:
    std::vector<CharacterGL1> chars_;  // nonempty
};

// No exponent is an integer, and no difference of two exponents is an integer.
bool is_general_position(const PrincipalSeries& p);

// Throwing variant; the message names the violated condition and the offending
// indices. `label` tags which input failed, e.g. "pi1".
void require_general_position(const PrincipalSeries& p, const std::string& label);

// General position plus: for any two distinct ordered index pairs (i1,j1), (i2,j2),
// the single-factor L-functions L(s, mu_{i1} chi_{j1}) and L(s, mu_{i2} chi_{j2})
// have disjoint pole sets, decided by chain arithmetic on their shifts.
bool is_strong_general_position(const PrincipalSeries& p1, const PrincipalSeries& p2);

}  // namespace rslab

#endif
