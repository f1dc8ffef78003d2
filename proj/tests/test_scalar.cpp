#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oml/rng.hpp"
#include "oml/scalar.hpp"

using namespace oml;

namespace {

// Independent square test by trial-division factorization: a positive
// rational is a square iff every prime exponent of its numerator and
// denominator (in lowest terms) is even.  Slower than the production
// integer-square-root route, which is the point of the cross-check.
bool square_by_factorization(const Rational& q) {
    if (q < 0) return false;
    if (q == 0) return true;
    auto all_even = [](Int n) {
        for (Int p = 2; p * p <= n; ++p) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e % 2 != 0) return false;
        }
        return n == 1; // leftover prime would have exponent 1
    };
    return all_even(boost::multiprecision::numerator(q)) &&
           all_even(boost::multiprecision::denominator(q));
}

} // namespace

TEST_CASE("rational square roots, frozen values") {
    CHECK(rational_sqrt(Rational(49, 9)).value() == Rational(7, 3));
    CHECK(rational_sqrt(Rational(25)).value() == 5);
    CHECK(rational_sqrt(Rational(0)).value() == 0);
    CHECK(rational_sqrt(Rational(1)).value() == 1);
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(!rational_sqrt(Rational(1, 2)).has_value());
    CHECK(!rational_sqrt(Rational(-4)).has_value());
    CHECK(rational_sqrt(Rational(225, 64)).value() == Rational(15, 8));
}

TEST_CASE("rational square roots agree with factorization oracle") {
    Rng rng(20260816);
    for (int i = 0; i < 500; ++i) {
        Rational q(Int(rng.range(-60, 600)), Int(rng.range(1, 60)));
        const bool got = rational_sqrt(q).has_value();
        CHECK(got == square_by_factorization(q));
        if (got) {
            const Rational r = *rational_sqrt(q);
            CHECK(r * r == q);
            CHECK(r >= 0);
        }
    }
}

TEST_CASE("square-free guard on field construction") {
    CHECK_NOTHROW(Field::quadratic(2));
    CHECK_NOTHROW(Field::quadratic(-1));
    CHECK_NOTHROW(Field::quadratic(-2));
    CHECK_NOTHROW(Field::quadratic(6));
    CHECK_NOTHROW(Field::quadratic(-105));
    CHECK_THROWS_AS(Field::quadratic(0), Error);
    CHECK_THROWS_AS(Field::quadratic(1), Error);
    CHECK_THROWS_AS(Field::quadratic(4), Error);
    CHECK_THROWS_AS(Field::quadratic(12), Error);
    CHECK_THROWS_AS(Field::quadratic(-4), Error);
    CHECK_THROWS_AS(Field::quadratic(18), Error);
}

TEST_CASE("quadratic arithmetic, frozen values") {
    const Field q2 = Field::quadratic(2);
    const Scalar one = q2.one();
    const Scalar rt = q2.root();

    // (1 + rt)(1 - rt) = 1 - rt^2 = -1 when rt^2 = 2
    CHECK((one + rt) * (one - rt) == -q2.one());

    // 1/(1 + rt) = rt - 1
    CHECK((one + rt).inv() == rt - one);
    CHECK((one + rt) * (rt - one) == one);

    const Field qi = Field::quadratic(-1);
    const Scalar i = qi.root();
    // (1 + i) * conj(1 + i) = 2
    CHECK((qi.one() + i) * (qi.one() + i).conj() == qi.from_rational(2));
    CHECK((qi.one() + i).norm() == 2);
    CHECK((qi.make(3, 4)).norm() == 25);
}

TEST_CASE("rational arithmetic, frozen values") {
    const Field q = Field::rationals();
    CHECK(q.from_rational(Rational(2, 3)).inv() == q.from_rational(Rational(3, 2)));
    CHECK(q.from_rational(Rational(1, 2)) + q.from_rational(Rational(1, 3)) ==
          q.from_rational(Rational(5, 6)));
    CHECK_THROWS_AS(q.zero().inv(), Error);
}

TEST_CASE("involution is identity for real fields, conjugation otherwise") {
    const Field q2 = Field::quadratic(2);
    const Scalar x = q2.make(Rational(1, 2), Rational(-3, 4));
    CHECK(x.conj() == x);

    const Field qi = Field::quadratic(-1);
    const Scalar z = qi.make(Rational(1, 2), Rational(-3, 4));
    CHECK(z.conj() == qi.make(Rational(1, 2), Rational(3, 4)));
    CHECK(z.conj().conj() == z);

    CHECK(Field::rationals().from_rational(Rational(5, 7)).conj() ==
          Field::rationals().from_rational(Rational(5, 7)));
}

TEST_CASE("signs in the real embedding") {
    const Field q2 = Field::quadratic(2);
    CHECK((q2.root() - q2.one()).sign() == 1);        // rt - 1 > 0
    CHECK((q2.one() - q2.root()).sign() == -1);       // 1 - rt < 0
    CHECK(q2.make(3, -2).sign() == 1);                // 3 - 2rt: 9 > 8
    CHECK(q2.make(2, -3).sign() == -1);               // 2 - 3rt: 4 < 18
    CHECK(q2.make(-3, 2).sign() == -1);
    CHECK(q2.zero().sign() == 0);

    const Field q5 = Field::quadratic(5);
    CHECK(q5.make(-2, 1).sign() == 1);                // rt(5) > 2
    CHECK(q5.make(Rational(9, 4), -1).sign() == 1);   // 81/16 > 5

    const Field qi = Field::quadratic(-1);
    CHECK(qi.from_rational(Rational(-3)).sign() == -1); // rational part still ordered
    CHECK_THROWS_AS(qi.root().sign(), Error);
}

TEST_CASE("norm of identity-involution irrationals is rejected") {
    const Field q2 = Field::quadratic(2);
    CHECK_THROWS_AS((q2.one() + q2.root()).norm(), Error);
    CHECK(q2.from_rational(Rational(-3, 2)).norm() == Rational(9, 4));
}

TEST_CASE("descriptor mismatch is rejected") {
    const Field q2 = Field::quadratic(2);
    const Field q3 = Field::quadratic(3);
    CHECK_THROWS_AS(q2.one() + q3.one(), Error);
    CHECK_THROWS_AS(q2.one() * Field::rationals().one(), Error);
}

TEST_CASE("automorphism groups") {
    CHECK(Field::rationals().automorphisms().size() == 1);
    const Field q2 = Field::quadratic(2);
    const auto auts = q2.automorphisms();
    REQUIRE(auts.size() == 2);
    const Scalar x = q2.make(Rational(1, 3), Rational(5, 2));
    CHECK(auts[0](x) == x);
    CHECK(auts[1](x) == q2.make(Rational(1, 3), Rational(-5, 2)));
    CHECK(auts[1](auts[1](x)) == x);

    // Over d < 0 the nontrivial automorphism coincides with the involution.
    const Field qi = Field::quadratic(-1);
    const Scalar z = qi.make(2, 7);
    CHECK(qi.automorphisms()[1](z) == z.conj());
}

TEST_CASE("field axioms on sampled elements") {
    for (const Field f : {Field::rationals(), Field::quadratic(2), Field::quadratic(-1),
                          Field::quadratic(-3), Field::quadratic(10)}) {
        Rng rng(7 + static_cast<std::uint64_t>(f.is_rationals() ? 0 : f.root_square() + 100));
        for (int k = 0; k < 200; ++k) {
            const Scalar x = rng.scalar(f);
            const Scalar y = rng.scalar(f);
            const Scalar z = rng.scalar(f);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + f.zero() == x);
            CHECK(x * f.one() == x);
            CHECK(x - x == f.zero());
            if (!x.is_zero()) CHECK(x * x.inv() == f.one());

            // The involution is a ring automorphism of order two.
            CHECK((x + y).conj() == x.conj() + y.conj());
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK(x.conj().conj() == x);

            for (const auto& g : f.automorphisms()) {
                CHECK(g(x + y) == g(x) + g(y));
                CHECK(g(x * y) == g(x) * g(y));
                CHECK(g(g(x)) == x);
            }
        }
    }
}

TEST_CASE("norms over conjugation fields are nonnegative rationals") {
    const Field qi = Field::quadratic(-5);
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const Scalar z = rng.scalar(qi);
        const Rational n = z.norm();
        CHECK(n >= 0);
        CHECK((n == 0) == z.is_zero());
    }
}

TEST_CASE("sign agrees with the floating real embedding on sampled elements") {
    const Field q7 = Field::quadratic(7);
    Rng rng(13);
    for (int k = 0; k < 300; ++k) {
        const Scalar x = rng.scalar(q7);
        const double v = x.to_double();
        if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("scalar printing normal forms") {
    const Field q2 = Field::quadratic(2);
    CHECK(q2.make(Rational(1, 2), Rational(3, 4)).str() == "1/2 + 3/4*rt");
    CHECK(q2.make(Rational(1, 2), Rational(-3, 4)).str() == "1/2 - 3/4*rt");
    CHECK(q2.make(0, Rational(-1)).str() == "-rt");
    CHECK(q2.make(0, 1).str() == "rt");
    CHECK(q2.make(-2, 0).str() == "-2");
    CHECK(Field::rationals().from_rational(Rational(22, 7)).str() == "22/7");
}
