// gaussian.hpp — exact complex numbers with rational real and imaginary parts,
// and the step-2 chain predicates the pole calculus is built on.

#ifndef RSLAB_GAUSSIAN_HPP
#define RSLAB_GAUSSIAN_HPP

#include <compare>
#include <complex>
#include <string>
#include <string_view>

#include "rslab/rational.hpp"

namespace rslab {

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT: implicit lift of rationals
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    GaussianRational(long real) : re(real) {}  // NOLINT

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_integer() const { return im.is_zero() && re.is_integer(); }
    bool is_real() const { return im.is_zero(); }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    // "p/q", "p/q+r/t*i" or "p/q-r/t*i"; denominator 1 omitted, real part always present.
    std::string str() const;
    static GaussianRational parse(std::string_view text);

    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    // Canonical order: by imaginary part, then real part. This is the ordering of
    // factor shifts inside GammaProduct and of reported anchors.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (auto c = a.im <=> b.im; c != 0) return c;
        return a.re <=> b.re;
    }
};

// a and b generate the same descending chain {x, x-2, x-4, ...}: equal imaginary
// parts and an even integer real difference. An equivalence relation.
bool chain_equiv(const GaussianRational& a, const GaussianRational& b);

// z lies on the chain that starts at a, i.e. a - z is an even integer >= 0.
bool chain_covers(const GaussianRational& a, const GaussianRational& z);

// Deterministic chain key: (im, re mod 2) with the representative in [0, 2).
GaussianRational chain_key(const GaussianRational& a);

}  // namespace rslab

#endif
