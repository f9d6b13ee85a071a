#include <doctest.h>

#include "rslab/gaussian.hpp"
#include "rslab/prng.hpp"
#include "test_util.hpp"

using namespace rslab;
using rslab::testing::q;

namespace {

GaussianRational random_gaussian(Prng& rng) {
    GaussianRational z(Rational(rng.range(-40, 40), rng.range(1, 12)));
    if (rng.chance(0.5)) z.im = Rational(rng.range(-20, 20), rng.range(1, 8));
    return z;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
    CHECK_THROWS_AS(Rational(3) / Rational(0), PreconditionError);
}

TEST_CASE("rational parse and render") {
    CHECK(Rational::parse("-4/3") == Rational(-4, 3));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/3x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("rational mod2 representative in [0,2)") {
    CHECK(Rational(-4, 3).mod2() == Rational(2, 3));
    CHECK(Rational(11, 6).mod2() == Rational(11, 6));
    CHECK(Rational(4).mod2() == Rational(0));
    CHECK(Rational(-3).mod2() == Rational(1));
}

TEST_CASE("gaussian addition") {
    CHECK(GaussianRational(q(1, 3)) + GaussianRational(q(-1, 2)) == GaussianRational(q(-1, 6)));
    CHECK((GaussianRational(q(0), q(1)) + GaussianRational(q(0), q(-1))).is_zero());
    CHECK(GaussianRational(q(1, 2), q(1, 3)) + GaussianRational(q(1, 2), q(2, 3)) ==
          GaussianRational(q(1), q(1)));
}

TEST_CASE("gaussian integer test") {
    CHECK(GaussianRational(q(3)).is_integer());
    CHECK_FALSE(GaussianRational(q(1, 3)).is_integer());
    CHECK_FALSE(GaussianRational(q(2), q(1)).is_integer());
}

TEST_CASE("chain equivalence") {
    CHECK(chain_equiv(GaussianRational(q(0)), GaussianRational(q(2))));
    CHECK_FALSE(chain_equiv(GaussianRational(q(0)), GaussianRational(q(1))));
    CHECK(chain_equiv(GaussianRational(q(0), q(1)), GaussianRational(q(2), q(1))));
    CHECK_FALSE(chain_equiv(GaussianRational(q(0), q(1)), GaussianRational(q(2))));
}

TEST_CASE("chain covering is one-sided") {
    CHECK(chain_covers(GaussianRational(q(2)), GaussianRational(q(-4))));
    CHECK_FALSE(chain_covers(GaussianRational(q(-4)), GaussianRational(q(2))));
    CHECK_FALSE(chain_covers(GaussianRational(q(2)), GaussianRational(q(1))));
    CHECK(chain_covers(GaussianRational(q(11, 6)), GaussianRational(q(-1, 6))));
}

TEST_CASE("gaussian textual round trip") {
    for (const char* text : {"-4/3", "1/3+2/5*i", "0", "7", "1/2-1/3*i", "0+1*i", "-1/2-7*i"}) {
        const GaussianRational z = GaussianRational::parse(text);
        CHECK(z.str() == text);
        CHECK(GaussianRational::parse(z.str()) == z);
    }
    CHECK_THROWS_AS(GaussianRational::parse("1/3+*i"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("*i"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1+2i"), ParseError);
}

TEST_CASE("addition is associative and commutative") {
    Prng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const GaussianRational a = random_gaussian(rng);
        const GaussianRational b = random_gaussian(rng);
        const GaussianRational c = random_gaussian(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        if (a.is_integer() && b.is_integer()) CHECK((a + b).is_integer());
    }
}

TEST_CASE("chain equivalence is an equivalence relation") {
    Prng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const GaussianRational a = random_gaussian(rng);
        GaussianRational b = a;
        b.re += Rational(2 * rng.range(-5, 5));
        GaussianRational c = b;
        c.re += Rational(2 * rng.range(-5, 5));
        const GaussianRational unrelated = random_gaussian(rng);

        CHECK(chain_equiv(a, a));
        CHECK(chain_equiv(a, b));
        CHECK(chain_equiv(b, a));
        CHECK(chain_equiv(a, c));  // transitivity through b
        if (chain_equiv(a, unrelated)) CHECK(chain_equiv(unrelated, a));
        CHECK(chain_key(a) == chain_key(c));
    }
}
