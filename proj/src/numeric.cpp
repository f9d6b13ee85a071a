#include "rslab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rslab/prng.hpp"

namespace rslab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

std::complex<double> lanczos_log_gamma(std::complex<double> z) {
    // Valid for re(z) >= 0.5.
    std::complex<double> sum = kLanczosC[0];
    for (int k = 1; k < 15; ++k) sum += kLanczosC[k] / (z - 1.0 + static_cast<double>(k));
    const std::complex<double> t = z + (kLanczosG - 0.5);
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(sum);
}

// sin(pi z) with argument reduction so accuracy survives near the integers:
// z = n + f with |re(f)| <= 1/2, sin(pi z) = (-1)^n sin(pi f) and the sign flip
// is applied exactly.
std::complex<double> sin_pi(std::complex<double> z) {
    const double n = std::nearbyint(z.real());
    const std::complex<double> f(z.real() - n, z.imag());
    const std::complex<double> s = std::sin(kPi * f);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // Reflection. The branch of the result is unspecified; exp(m * log_gamma)
    // is exact for integer m, which is the only use.
    return std::log(kPi) - std::log(sin_pi(z)) - lanczos_log_gamma(1.0 - z);
}

namespace {

void check_gamma_r_pole(std::complex<double> s) {
    double p = 2.0 * std::nearbyint(s.real() / 2.0);
    if (p > 0.0) p = 0.0;
    if (std::abs(s - std::complex<double>(p, 0.0)) < kPoleGuard)
        throw NumericError("evaluation within 1e-9 of the Gamma_R pole at " +
                           std::to_string(static_cast<long long>(p)));
}

std::complex<double> require_finite(std::complex<double> v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericError(std::string(what) + " produced a non-finite value");
    return v;
}

}  // namespace

std::complex<double> log_gamma_r(std::complex<double> s) {
    check_gamma_r_pole(s);
    return -(s / 2.0) * std::log(kPi) + log_gamma(s / 2.0);
}

std::complex<double> gamma_r_eval(std::complex<double> s) {
    return require_finite(std::exp(log_gamma_r(s)), "gamma_r_eval");
}

namespace {

// Distance from s to the chain {a - 2k : k >= 0}; +inf when s is above the
// anchor or on a different horizontal line than any chain point can reach.
double distance_to_chain(std::complex<double> s, std::complex<double> a) {
    const double dy = s.imag() - a.imag();
    const double d = a.real() - s.real();  // chain points at d in {0, 2, 4, ...}
    double p = 2.0 * std::nearbyint(d / 2.0);
    if (p < 0.0) p = 0.0;
    return std::hypot(dy, d - p);
}

double distance_to_chains(const GammaProduct& f, std::complex<double> s) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& factor : f.factors())
        best = std::min(best, distance_to_chain(s, factor.shift.to_complex()));
    return best;
}

}  // namespace

std::complex<double> gp_eval(const GammaProduct& f, std::complex<double> s) {
    if (distance_to_chains(f, s) < kPoleGuard)
        throw NumericError("evaluation within 1e-9 of a pole/zero chain of " + f.str());
    std::complex<double> acc = 0.0;
    for (const auto& factor : f.factors())
        acc += static_cast<double>(factor.exp) * log_gamma_r(s - factor.shift.to_complex());
    return require_finite(std::exp(acc), "gp_eval");
}

namespace {

// Adaptive Simpson on a smooth complex integrand.
template <typename F>
std::complex<double> simpson_rec(const F& f, double a, double b, std::complex<double> fa,
                                 std::complex<double> fm, std::complex<double> fb,
                                 std::complex<double> whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const std::complex<double> flm = f(lm), frm = f(rm);
    const std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const std::complex<double> delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
std::complex<double> adaptive_simpson(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const std::complex<double> fa = f(a), fm = f(m), fb = f(b);
    const std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

std::complex<double> tate_integral_num(std::complex<double> s, const CharacterGL1& c1,
                                       const CharacterGL1& c2, std::int64_t deg) {
    if (deg < 0) throw PreconditionError("test-function degree must be >= 0");
    const std::complex<double> w =
        s + c1.s().to_complex() + c2.s().to_complex() + static_cast<double>(deg);
    if (w.real() <= 0.0)
        throw NumericError("Tate integral diverges: re(s + s1 + s2 + deg) = " +
                           std::to_string(w.real()) + " <= 0");

    // Substitute x = e^t on the positive half-axis: the integrand becomes
    // exp(w t - pi e^{2t}) dt. The negative half-axis maps to the same integral
    // times (-1)^{eps1 + eps2 + deg} under x -> -x.
    const auto integrand = [&](double t) { return std::exp(w * t - kPi * std::exp(2.0 * t)); };

    const double t_hi = 0.5 * std::log(55.0 / kPi);          // gaussian factor < 1e-23 beyond
    const double t_lo = std::min(-60.0 / w.real(), -8.0);    // |e^{wt}| < 1e-26 below

    // Pre-split into short panels so the initial Simpson stencil cannot step
    // over the peak, then refine each panel adaptively.
    std::complex<double> positive_half = 0.0;
    const int panels = static_cast<int>(std::ceil((t_hi - t_lo) / 2.0));
    for (int i = 0; i < panels; ++i) {
        const double a = t_lo + (t_hi - t_lo) * i / panels;
        const double b = t_lo + (t_hi - t_lo) * (i + 1) / panels;
        positive_half += adaptive_simpson(integrand, a, b, 1e-13);
    }

    const bool odd = ((c1.eps() + c2.eps() + deg) & 1) != 0;
    const std::complex<double> negative_half = odd ? -positive_half : positive_half;
    return require_finite(positive_half + negative_half, "tate_integral_num");
}

bool symbolic_numeric_spotcheck(const GammaProduct& f, const GammaProduct& g, int trials,
                                std::uint64_t seed) {
    Prng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::complex<double> s;
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
            s = {rng.real01() * 24.0 - 12.0, rng.real01() * 12.0 - 6.0};
            placed = distance_to_chains(f, s) > 0.05 && distance_to_chains(g, s) > 0.05;
        }
        if (!placed) return false;  // support too dense to sample; should not happen
        const std::complex<double> fv = gp_eval(f, s);
        const std::complex<double> gv = gp_eval(g, s);
        const double rel = std::abs(fv - gv) / std::max(std::abs(gv), 1e-300);
        if (!(rel < 1e-9)) return false;
    }
    return true;
}

}  // namespace rslab
