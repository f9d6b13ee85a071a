#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rslab/random_pairs.hpp"
#include "rslab/rankin_selberg.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

using namespace rslab;
using rslab::testing::broken_pi1;
using rslab::testing::ch;
using rslab::testing::q;
using rslab::testing::series;
using rslab::testing::worked_pi1;
using rslab::testing::worked_pi2;

namespace {

GammaProduct gr(long num, long den = 1, std::int64_t exp = 1) {
    return GammaProduct::gamma_r(GaussianRational(Rational(num, den)), exp);
}

}  // namespace

TEST_CASE("pair L-function") {
    CHECK(pair_l_function(series({ch(0, q(0))}), series({ch(0, q(0))})) == gr(0));
    const GammaProduct l = pair_l_function(worked_pi1(), worked_pi2());
    CHECK(l == gr(0, 1, 2) * gr(11, 6) * gr(-11, 6));

    // Brute-force the same table factor by factor.
    const PrincipalSeries p1 = worked_pi1();
    const PrincipalSeries p2 = worked_pi2();
    GammaProduct by_hand;
    for (const CharacterGL1& mu : p1.chars())
        for (const CharacterGL1& chi : p2.chars())
            by_hand *= l_factor(char_mul(mu, chi));
    CHECK(by_hand == l);

    CHECK_THROWS_AS(pair_l_function(series({ch(0, q(1, 3))}), worked_pi2()), PreconditionError);
}

TEST_CASE("pair L-function is symmetric") {
    Prng rng(21);
    PairGenOptions opt;
    for (int n = 1; n <= 3; ++n) {
        opt.n = n;
        for (int trial = 0; trial < 60; ++trial) {
            const auto pair = random_general_position_pair(rng, opt);
            CHECK(pair_l_function(pair.p1, pair.p2) == pair_l_function(pair.p2, pair.p1));
        }
    }
}

TEST_CASE("exceptional pole detection") {
    CHECK(exceptional_poles(worked_pi1(), worked_pi2()) ==
          std::vector<GaussianRational>{GaussianRational(q(0))});
    CHECK(exceptional_poles(broken_pi1(), worked_pi2()).empty());
    CHECK(exceptional_poles(series({ch(0, q(-1, 3))}), series({ch(0, q(1, 3))})) ==
          std::vector<GaussianRational>{GaussianRational(q(0))});
    CHECK_THROWS_WITH_AS(exceptional_poles(series({ch(0, q(2)), ch(0, q(1, 2))}), worked_pi2()),
                         doctest::Contains("pi1 not in general position"), PreconditionError);
}

TEST_CASE("anchor below the top of a chain") {
    // Diagonal matches at different depths: mu1 chi1 poles from 0 down, mu2 chi2
    // only from -4 down, so the order-2 region starts at -4.
    const PrincipalSeries p2 = series({ch(0, q(1, 3)), ch(0, q(1, 5))});
    const PrincipalSeries p1 =
        series({matched_character(p2.at(0), 0, GaussianRational(q(0))),
                matched_character(p2.at(1), 0, GaussianRational(q(-4)))});
    CHECK(pair_l_function(p1, p2).order_at(GaussianRational(q(0))) == -1);
    CHECK(exceptional_poles(p1, p2) == std::vector<GaussianRational>{GaussianRational(q(-4))});

    // At 0 the second diagonal would need a negative twist.
    CHECK_THROWS_WITH_AS(exceptional_certificate(p1, p2, GaussianRational(q(0))),
                         doctest::Contains("< 0"), PreconditionError);
}

TEST_CASE("certificates of the worked pair") {
    const ExceptionalCertificate at0 =
        exceptional_certificate(worked_pi1(), worked_pi2(), GaussianRational(q(0)));
    CHECK(at0.level == 1);
    CHECK(at0.multi_index.entries == std::vector<std::int64_t>{1, 0});
    CHECK(at0.matching == std::vector<int>{1, 2});
    CHECK(certificate_matches(at0, worked_pi1(), worked_pi2()));

    const ExceptionalCertificate at_minus2 =
        exceptional_certificate(worked_pi1(), worked_pi2(), GaussianRational(q(-2)));
    CHECK(at_minus2.level == 5);
    CHECK(at_minus2.multi_index.entries == std::vector<std::int64_t>{3, 2});
    CHECK(at_minus2.matching == std::vector<int>{1, 2});

    const ExceptionalCertificate gl1 = exceptional_certificate(
        series({ch(0, q(-1, 3))}), series({ch(0, q(1, 3))}), GaussianRational(q(0)));
    CHECK(gl1.level == 0);
    CHECK(gl1.multi_index.entries == std::vector<std::int64_t>{0});

    CHECK_THROWS_WITH_AS(
        exceptional_certificate(worked_pi1(), worked_pi2(), GaussianRational(q(1))),
        doctest::Contains("is not an exceptional pole"), PreconditionError);
}

TEST_CASE("exceptional L-factor") {
    CHECK(exceptional_l_factor(worked_pi1(), worked_pi2()) == gr(0, 1, 2));
    CHECK(exceptional_l_factor(broken_pi1(), worked_pi2()).is_one());
    // n = 1 needs no general-position hypothesis; the trivial character is fine.
    CHECK(exceptional_l_factor(series({ch(0, q(-11, 6))}), series({ch(0, q(0))})) == gr(11, 6));
}

TEST_CASE("lattice slice anchor") {
    auto cert = [](long s0, std::vector<std::int64_t> l) {
        ExceptionalCertificate c;
        c.s0 = GaussianRational(Rational(s0));
        c.multi_index.entries = std::move(l);
        c.level = c.multi_index.degree();
        return c;
    };
    CHECK(exceptional_lattice_slice(cert(0, {1, 0})) == GaussianRational(q(0)));
    CHECK(exceptional_lattice_slice(cert(2, {1, 0})) == GaussianRational(q(2)));
    CHECK(exceptional_lattice_slice(cert(0, {3, 2})) == GaussianRational(q(2)));
    CHECK(exceptional_lattice_slice(cert(0, {0, 0, 0})) == GaussianRational(q(0)));
}

TEST_CASE("pole order witness") {
    const PoleOrderWitness w1 =
        pole_order_witness(broken_pi1(), worked_pi2(), GaussianRational(q(0)));
    CHECK(w1.order == 1);
    CHECK(w1.rows == std::vector<int>{1});
    CHECK(w1.cols == std::vector<int>{1});

    const PoleOrderWitness w2 =
        pole_order_witness(worked_pi1(), worked_pi2(), GaussianRational(q(0)));
    CHECK(w2.order == 2);
    CHECK(w2.rows == std::vector<int>{1, 2});
    CHECK(w2.cols == std::vector<int>{1, 2});

    const PoleOrderWitness w3 =
        pole_order_witness(worked_pi1(), worked_pi2(), GaussianRational(q(11, 6)));
    CHECK(w3.order == 1);
    CHECK(w3.rows == std::vector<int>{1});
    CHECK(w3.cols == std::vector<int>{2});

    CHECK_THROWS_AS(pole_order_witness(worked_pi1(), worked_pi2(), GaussianRational(q(1))),
                    PreconditionError);
}

TEST_CASE("witness subsets are exceptional for the sub-pair") {
    Prng rng(22);
    PairGenOptions opt;
    for (int n = 2; n <= 3; ++n) {
        opt.n = n;
        for (int trial = 0; trial < 80; ++trial) {
            const auto pair = random_general_position_pair(rng, opt);
            for (const PoleChain& chain : pair_l_function(pair.p1, pair.p2).pole_chains()) {
                const GaussianRational z{chain.anchor.re - Rational(2), chain.anchor.im};
                const PoleOrderWitness w = pole_order_witness(pair.p1, pair.p2, z);
                CHECK(w.order == -pair_l_function(pair.p1, pair.p2).order_at(z));

                std::vector<CharacterGL1> sub1, sub2;
                for (int i : w.rows) sub1.push_back(pair.p1.at(i - 1));
                for (int j : w.cols) sub2.push_back(pair.p2.at(j - 1));
                const PrincipalSeries s1{sub1}, s2{sub2};
                CHECK_NOTHROW(exceptional_certificate(s1, s2, z));
                CHECK(pair_l_function(s1, s2).order_at(z) == -w.order);
            }
        }
    }
}

TEST_CASE("graded series of symmetric powers") {
    const PrincipalSeries p2 = worked_pi2();
    const PrincipalSeries twisted = sympower_graded_series(p2, MultiIndex{{1, 0}});
    CHECK(twisted.chars() == std::vector<CharacterGL1>{ch(1, q(4, 3)), ch(1, q(-1, 2))});
    CHECK(sympower_graded_series(p2, MultiIndex{{0, 0}}).chars() == p2.chars());
    CHECK(sympower_graded_series(series({ch(0, q(0))}), MultiIndex{{2}}).chars() ==
          std::vector<CharacterGL1>{ch(0, q(2))});
    CHECK_THROWS_AS(sympower_graded_series(p2, MultiIndex{{1}}), PreconditionError);
}

TEST_CASE("multi-index enumeration") {
    const auto l22 = enumerate_multi_indices(2, 2);
    REQUIRE(l22.size() == 3);
    CHECK(l22[0].entries == std::vector<std::int64_t>{0, 2});
    CHECK(l22[1].entries == std::vector<std::int64_t>{1, 1});
    CHECK(l22[2].entries == std::vector<std::int64_t>{2, 0});

    CHECK(enumerate_multi_indices(3, 0).size() == 1);
    CHECK(enumerate_multi_indices(2, 3).size() == 4);

    for (std::size_t n = 1; n <= 4; ++n)
        for (std::int64_t m = 0; m <= 5; ++m)
            CHECK(multi_index_count(n, m) == enumerate_multi_indices(n, m).size());
}

TEST_CASE("gl1 membership") {
    CHECK(gl1_pole_membership(ch(0, q(0)), ch(0, q(0)), GaussianRational(q(0))) == 0);
    CHECK(gl1_pole_membership(ch(1, q(-1, 2)), ch(0, q(-1, 2)), GaussianRational(q(0))) == 1);
    CHECK_FALSE(
        gl1_pole_membership(ch(0, q(1, 3)), ch(0, q(1, 3)), GaussianRational(q(0))).has_value());
    // Right sum, wrong parity.
    CHECK_FALSE(
        gl1_pole_membership(ch(1, q(-1)), ch(0, q(-1)), GaussianRational(q(0))).has_value());
}

TEST_CASE("dual-route equivalence on random pairs") {
    Prng rng(23);
    PairGenOptions opt;
    opt.max_twist = 3;
    for (int n = 1; n <= 3; ++n) {
        opt.n = n;
        for (int trial = 0; trial < 120; ++trial) {
            const auto pair = random_general_position_pair(rng, opt);
            const auto detected = exceptional_poles(pair.p1, pair.p2);

            std::int64_t l_max = 8;
            for (const auto& a : detected) {
                const auto cert = exceptional_certificate(pair.p1, pair.p2, a);
                for (std::int64_t lj : cert.multi_index.entries) REQUIRE(lj <= l_max);
            }
            CHECK(rslab::testing::brute_force_anchors(pair.p1, pair.p2, l_max) == detected);
        }
    }
}

TEST_CASE("certificate soundness across the random suite") {
    Prng rng(24);
    PairGenOptions opt;
    for (int n = 1; n <= 3; ++n) {
        opt.n = n;
        for (int trial = 0; trial < 100; ++trial) {
            const auto pair = random_general_position_pair(rng, opt);
            const GammaProduct l = pair_l_function(pair.p1, pair.p2);
            for (const auto& anchor : exceptional_poles(pair.p1, pair.p2)) {
                for (long depth = 0; depth <= 2; ++depth) {
                    const GaussianRational s0{anchor.re - Rational(2 * depth), anchor.im};
                    const auto cert = exceptional_certificate(pair.p1, pair.p2, s0);
                    CHECK(certificate_matches(cert, pair.p1, pair.p2));
                    CHECK(l.order_at(s0) == -static_cast<std::int64_t>(n));

                    // Slice law against an independent scan over s0 + t.
                    const GaussianRational slice = exceptional_lattice_slice(cert);
                    for (long t = -20; t <= 20; ++t) {
                        const GaussianRational z{s0.re + Rational(t), s0.im};
                        const bool in_slice = chain_covers(slice, z);
                        const bool order_n = l.order_at(z) == -static_cast<std::int64_t>(n);
                        CHECK(in_slice == order_n);
                    }
                }
            }
        }
    }
}

TEST_CASE("twist equivariance and symmetry of exceptional poles") {
    Prng rng(25);
    PairGenOptions opt;
    for (int n = 1; n <= 3; ++n) {
        opt.n = n;
        for (int trial = 0; trial < 60; ++trial) {
            const auto pair = random_general_position_pair(rng, opt);
            auto anchors = exceptional_poles(pair.p1, pair.p2);
            CHECK(exceptional_poles(pair.p2, pair.p1) == anchors);

            const GaussianRational u(Rational(rng.range(-9, 9), rng.range(2, 7)));
            std::vector<CharacterGL1> twisted;
            for (const CharacterGL1& mu : pair.p1.chars())
                twisted.push_back(char_mul(mu, CharacterGL1(0, u)));
            const PrincipalSeries p1u{twisted};
            if (!is_general_position(p1u)) continue;

            auto shifted = exceptional_poles(p1u, pair.p2);
            REQUIRE(shifted.size() == anchors.size());
            std::vector<GaussianRational> expected;
            for (const auto& a : anchors) expected.push_back(a - u);
            std::sort(expected.begin(), expected.end());
            CHECK(shifted == expected);
            for (std::size_t idx = 0; idx < shifted.size(); ++idx) {
                const auto c_orig = exceptional_certificate(pair.p1, pair.p2, expected[idx] + u);
                const auto c_twist = exceptional_certificate(p1u, pair.p2, expected[idx]);
                CHECK(c_orig.multi_index == c_twist.multi_index);
            }
        }
    }
}
