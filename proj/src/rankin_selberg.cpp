#include "rslab/rankin_selberg.hpp"

#include <algorithm>

namespace rslab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("level overflow");
    return r;
}

void require_equal_lengths(const PrincipalSeries& p1, const PrincipalSeries& p2) {
    if (p1.n() != p2.n())
        throw PreconditionError("principal series have different lengths: " +
                                std::to_string(p1.n()) + " vs " + std::to_string(p2.n()));
}

// The GL(1) pole theory needs no hypothesis (every character of GL(1) is
// irreducible and per-column matches are unique trivially), so the exceptional
// machinery gates on general position only from n = 2 up.
void require_pole_hypotheses(const PrincipalSeries& p, const char* label) {
    if (p.n() >= 2) require_general_position(p, label);
}

}  // namespace

std::int64_t MultiIndex::degree() const {
    std::int64_t d = 0;
    for (std::int64_t e : entries) d = checked_add(d, e);
    return d;
}

std::vector<MultiIndex> enumerate_multi_indices(std::size_t n, std::int64_t m) {
    if (n < 1) throw PreconditionError("multi-index length must be >= 1");
    if (m < 0) throw PreconditionError("multi-index degree must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<std::int64_t> cur(n, 0);
    // Ascending lexicographic order falls out of choosing each entry from 0 upward.
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        if (pos + 1 == n) {
            cur[pos] = remaining;
            out.push_back(MultiIndex{cur});
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

mpz_class multi_index_count(std::size_t n, std::int64_t m) {
    if (n < 1) throw PreconditionError("multi-index length must be >= 1");
    if (m < 0) throw PreconditionError("multi-index degree must be >= 0");
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n) + static_cast<unsigned long>(m) - 1,
                 static_cast<unsigned long>(m));
    return c;
}

std::optional<std::int64_t> gl1_pole_membership(const CharacterGL1& c1, const CharacterGL1& c2,
                                                const GaussianRational& s0) {
    const GaussianRational total = s0 + c1.s() + c2.s();
    if (!total.is_integer()) return std::nullopt;
    const mpz_class num = total.re.numerator();
    if (sgn(num) > 0) return std::nullopt;  // level would be negative
    mpz_class level_z = -num;
    if (!level_z.fits_slong_p()) throw Error("pole level out of range");
    const std::int64_t m = level_z.get_si();
    if ((m & 1) != ((c1.eps() + c2.eps()) & 1)) return std::nullopt;
    return m;
}

GammaProduct pair_l_function(const PrincipalSeries& p1, const PrincipalSeries& p2) {
    require_equal_lengths(p1, p2);
    GammaProduct l;
    for (const CharacterGL1& mu : p1.chars())
        for (const CharacterGL1& chi : p2.chars()) l *= l_factor(char_mul(mu, chi));
    return l;
}

std::vector<GaussianRational> exceptional_poles(const PrincipalSeries& p1,
                                                const PrincipalSeries& p2) {
    require_equal_lengths(p1, p2);
    require_pole_hypotheses(p1, "pi1");
    require_pole_hypotheses(p2, "pi2");
    const auto n = static_cast<std::int64_t>(p1.n());

    std::vector<GaussianRational> anchors;
    for (const PoleChain& chain : pair_l_function(p1, p2).pole_chains()) {
        if (chain.terminal > n)
            throw Error("pole order " + std::to_string(chain.terminal) +
                        " exceeds n on a chain; general position was violated");
        if (chain.terminal < n) continue;
        // Highest breakpoint where the cumulative order reaches n; everything on
        // the chain from there down is an exceptional pole.
        for (const PoleChain::Step& st : chain.steps) {
            if (st.cumulative == n) {
                anchors.push_back({chain.anchor.re - Rational(2) * Rational(static_cast<long>(st.offset)),
                                   chain.anchor.im});
                break;
            }
        }
    }
    std::sort(anchors.begin(), anchors.end());
    return anchors;
}

ExceptionalCertificate exceptional_certificate(const PrincipalSeries& p1,
                                               const PrincipalSeries& p2,
                                               const GaussianRational& s0) {
    require_equal_lengths(p1, p2);
    require_pole_hypotheses(p1, "pi1");
    require_pole_hypotheses(p2, "pi2");
    const std::size_t n = p1.n();

    ExceptionalCertificate cert;
    cert.s0 = s0;
    cert.matching.resize(n, 0);
    cert.multi_index.entries.resize(n, 0);

    for (std::size_t j = 0; j < n; ++j) {
        std::optional<std::size_t> found;
        std::optional<std::pair<std::size_t, mpz_class>> negative;
        for (std::size_t i = 0; i < n; ++i) {
            const CharacterGL1& mu = p1.at(i);
            const CharacterGL1& chi = p2.at(j);
            if (auto m = gl1_pole_membership(mu, chi, s0)) {
                if (found)
                    throw Error("ambiguous certificate match for chi_" + std::to_string(j + 1) +
                                "; general position was violated");
                found = i;
                cert.multi_index.entries[j] = *m;
            } else {
                // A parity-consistent solution with a negative level is worth
                // naming in the diagnostic.
                const GaussianRational total = s0 + mu.s() + chi.s();
                if (total.is_integer() && sgn(total.re.numerator()) > 0) {
                    const mpz_class level = -total.re.numerator();
                    const bool parity_ok = (mpz_odd_p(level.get_mpz_t()) != 0) ==
                                           (((mu.eps() + chi.eps()) & 1) != 0);
                    if (parity_ok) negative = {i, level};
                }
            }
        }
        if (!found) {
            std::string msg = s0.str() + " is not an exceptional pole: chi_" +
                              std::to_string(j + 1) + " admits no matching inducing character";
            if (negative)
                msg += " (mu_" + std::to_string(negative->first + 1) + " would need l_" +
                       std::to_string(j + 1) + " = " + negative->second.get_str() + " < 0)";
            throw PreconditionError(msg);
        }
        cert.matching[j] = static_cast<int>(*found + 1);
    }

    // Per-j uniqueness makes the greedy assignment injective under general
    // position, but the bijection check is cheap.
    std::vector<int> seen(n, 0);
    for (int i : cert.matching) {
        if (seen[i - 1]++)
            throw Error("certificate matching is not a bijection; general position was violated");
    }
    cert.level = cert.multi_index.degree();

    if (!certificate_matches(cert, p1, p2)) throw Error("certificate failed its defining relations");
    return cert;
}

bool certificate_matches(const ExceptionalCertificate& cert, const PrincipalSeries& p1,
                         const PrincipalSeries& p2) {
    const std::size_t n = p2.n();
    if (p1.n() != n || cert.matching.size() != n || cert.multi_index.entries.size() != n)
        return false;
    std::int64_t total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t lj = cert.multi_index.entries[j];
        if (lj < 0) return false;
        const int i = cert.matching[j];
        if (i < 1 || static_cast<std::size_t>(i) > n) return false;
        // mu_{sigma(j)} chi_j must be sgn^{l_j} |.|^{-(l_j + s0)}.
        const CharacterGL1 product = char_mul(p1.at(i - 1), p2.at(j));
        const CharacterGL1 expected(lj, -(cert.s0 + GaussianRational(Rational(static_cast<long>(lj)))));
        if (product != expected) return false;
        total = checked_add(total, lj);
    }
    return total == cert.level;
}

GammaProduct exceptional_l_factor(const PrincipalSeries& p1, const PrincipalSeries& p2) {
    GammaProduct lex;
    const auto n = static_cast<std::int64_t>(p1.n());
    for (const GaussianRational& anchor : exceptional_poles(p1, p2))
        lex *= GammaProduct::gamma_r(anchor, n);
    return lex;
}

GaussianRational exceptional_lattice_slice(const ExceptionalCertificate& cert) {
    if (cert.multi_index.entries.empty()) throw PreconditionError("certificate has empty multi-index");
    std::int64_t best = INT64_MAX;
    for (std::int64_t lj : cert.multi_index.entries) {
        if (lj < 0) throw PreconditionError("certificate multi-index has a negative entry");
        best = std::min(best, lj - (lj & 1));
    }
    return cert.s0 + GaussianRational(Rational(static_cast<long>(best)));
}

PoleOrderWitness pole_order_witness(const PrincipalSeries& p1, const PrincipalSeries& p2,
                                    const GaussianRational& s0) {
    require_equal_lengths(p1, p2);
    require_pole_hypotheses(p1, "pi1");
    require_pole_hypotheses(p2, "pi2");

    PoleOrderWitness w;
    for (std::size_t i = 0; i < p1.n(); ++i)
        for (std::size_t j = 0; j < p2.n(); ++j)
            if (gl1_pole_membership(p1.at(i), p2.at(j), s0))
                w.matches.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));

    if (w.matches.empty())
        throw PreconditionError(s0.str() + " is not a pole of the pair L-function");

    w.order = static_cast<std::int64_t>(w.matches.size());
    for (auto [i, j] : w.matches) {
        w.rows.push_back(i);
        w.cols.push_back(j);
    }
    std::sort(w.rows.begin(), w.rows.end());
    std::sort(w.cols.begin(), w.cols.end());
    // Row and column indices are distinct under general position, so the witness
    // subsets have size exactly k.
    if (std::adjacent_find(w.rows.begin(), w.rows.end()) != w.rows.end() ||
        std::adjacent_find(w.cols.begin(), w.cols.end()) != w.cols.end())
        throw Error("pole witness indices repeat; general position was violated");
    return w;
}

PrincipalSeries sympower_graded_series(const PrincipalSeries& p, const MultiIndex& l) {
    if (l.entries.size() != p.n())
        throw PreconditionError("multi-index length " + std::to_string(l.entries.size()) +
                                " does not match series length " + std::to_string(p.n()));
    std::vector<CharacterGL1> twisted;
    twisted.reserve(p.n());
    for (std::size_t j = 0; j < p.n(); ++j)
        twisted.push_back(algebraic_twist(p.at(j), l.entries[j]));
    return PrincipalSeries(std::move(twisted));
}

}  // namespace rslab
