#include "rslab/character.hpp"

#include <algorithm>

namespace rslab {

CharacterGL1 char_mul(const CharacterGL1& a, const CharacterGL1& b) {
    return {a.eps() + b.eps(), a.s() + b.s()};
}

CharacterGL1 char_dual(const CharacterGL1& a) {
    return {a.eps(), -a.s()};
}

CharacterGL1 algebraic_twist(const CharacterGL1& a, std::int64_t l) {
    if (l < 0) throw PreconditionError("algebraic twist requires l >= 0, got " + std::to_string(l));
    return {a.eps() + l, a.s() + GaussianRational(Rational(static_cast<long>(l)))};
}

GammaProduct l_factor(const CharacterGL1& a) {
    return GammaProduct::gamma_r(-(a.s() + GaussianRational(Rational(a.eps()))));
}

PrincipalSeries::PrincipalSeries(std::vector<CharacterGL1> chars) : chars_(std::move(chars)) {
    if (chars_.empty()) throw PreconditionError("principal series needs at least one character");
}

bool equivalent(const PrincipalSeries& a, const PrincipalSeries& b) {
    if (a.n() != b.n()) return false;
    auto xs = a.chars_;
    auto ys = b.chars_;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return xs == ys;
}

bool is_general_position(const PrincipalSeries& p) {
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (p.at(i).s().is_integer()) return false;
        for (std::size_t j = i + 1; j < p.n(); ++j)
            if ((p.at(i).s() - p.at(j).s()).is_integer()) return false;
    }
    return true;
}

void require_general_position(const PrincipalSeries& p, const std::string& label) {
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (p.at(i).s().is_integer())
            throw PreconditionError(label + " not in general position: exponent s_" +
                                    std::to_string(i + 1) + " = " + p.at(i).s().str() +
                                    " is an integer");
        for (std::size_t j = i + 1; j < p.n(); ++j)
            if ((p.at(i).s() - p.at(j).s()).is_integer())
                throw PreconditionError(label + " not in general position: s_" +
                                        std::to_string(i + 1) + " - s_" + std::to_string(j + 1) +
                                        " = " + (p.at(i).s() - p.at(j).s()).str() +
                                        " is an integer");
    }
}

bool is_strong_general_position(const PrincipalSeries& p1, const PrincipalSeries& p2) {
    if (p1.n() != p2.n())
        throw PreconditionError("strong general position needs equal lengths, got " +
                                std::to_string(p1.n()) + " and " + std::to_string(p2.n()));
    if (!is_general_position(p1) || !is_general_position(p2)) return false;

    const std::size_t n = p1.n();
    std::vector<GaussianRational> shifts;
    shifts.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            shifts.push_back(l_factor(char_mul(p1.at(i), p2.at(j))).factors()[0].shift);

    // Two Gamma_R factors share a pole iff their shifts lie on the same chain.
    for (std::size_t a = 0; a < shifts.size(); ++a)
        for (std::size_t b = a + 1; b < shifts.size(); ++b)
            if (chain_equiv(shifts[a], shifts[b])) return false;
    return true;
}

}  // namespace rslab
