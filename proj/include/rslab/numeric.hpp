// numeric.hpp — floating-point oracle: Gamma_R evaluation, numeric evaluation of
// Gamma_R products, GL(1) Tate-integral quadrature, and symbolic/numeric
// agreement spot-checks. Everything here is a cross-check; exactness lives in
// the symbolic modules.

#ifndef RSLAB_NUMERIC_HPP
#define RSLAB_NUMERIC_HPP

#include <complex>
#include <cstdint>

#include "rslab/character.hpp"
#include "rslab/gamma_product.hpp"

namespace rslab {

// Inputs closer than this to a pole (or zero chain point, for products) are
// rejected instead of returning garbage.
inline constexpr double kPoleGuard = 1e-9;

// Principal-branch log of the Gamma function, Lanczos approximation with
// reflection; relative accuracy ~1e-14 away from the poles.
std::complex<double> log_gamma(std::complex<double> z);

// Gamma_R(s) = pi^{-s/2} Gamma(s/2). Throws NumericError within kPoleGuard of a
// non-positive even integer, naming the pole.
std::complex<double> gamma_r_eval(std::complex<double> s);

// log Gamma_R(s), same guard. The imaginary part is branch-dependent; callers
// only ever exponentiate integer multiples of it.
std::complex<double> log_gamma_r(std::complex<double> s);

// prod_k Gamma_R(s - a_k)^{m_k}, accumulated in log space. Throws NumericError
// within kPoleGuard of any chain point of f.
std::complex<double> gp_eval(const GammaProduct& f, std::complex<double> s);

// Adaptive quadrature of the Tate integral of c1*c2 against x^deg e^{-pi x^2}
// over the multiplicative group. Requires re(s + s1 + s2 + deg) > 0. The exact
// value is Gamma_R(s + s1 + s2 + deg) when eps1 + eps2 + deg is even, 0 when odd.
std::complex<double> tate_integral_num(std::complex<double> s, const CharacterGL1& c1,
                                       const CharacterGL1& c2, std::int64_t deg);

// Samples `trials` random points away from all chains of f and g and reports
// whether the two products agree to relative 1e-9 everywhere. Deterministic for
// a fixed seed.
bool symbolic_numeric_spotcheck(const GammaProduct& f, const GammaProduct& g, int trials,
                                std::uint64_t seed = 0x5eedULL);

}  // namespace rslab

#endif
