#include "ratset/circle_group.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace ratset;
using ratset::testing::Rng;

TEST_CASE("CirclePoint enforces the circle invariant") {
    CHECK_NOTHROW(CirclePoint(Rat(3, 5), Rat(4, 5)));
    CHECK_THROWS_AS(CirclePoint(Rat(1, 2), Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("compose examples") {
    const CirclePoint p(Rat(3, 5), Rat(4, 5));
    CHECK(compose(CirclePoint::identity(), p) == p);
    CHECK(compose(p, CirclePoint::identity()) == p);
    CHECK(compose(p, p) == CirclePoint(Rat(-7, 25), Rat(24, 25)));
    CHECK(compose(p, inverse(p)) == CirclePoint::identity());
}

TEST_CASE("inverse examples") {
    CHECK(inverse(CirclePoint::identity()) == CirclePoint::identity());
    CHECK(inverse(CirclePoint(Rat(3, 5), Rat(4, 5))) ==
          CirclePoint(Rat(3, 5), Rat(-4, 5)));
    CHECK(inverse(CirclePoint(Rat(0), Rat(1))) == CirclePoint(Rat(0), Rat(-1)));
}

TEST_CASE("power examples") {
    const CirclePoint p(Rat(3, 5), Rat(4, 5));
    CHECK(power(p, 0) == CirclePoint::identity());
    CHECK(power(p, 2) == CirclePoint(Rat(-7, 25), Rat(24, 25)));
    CHECK(power(p, -1) == inverse(p));
    CHECK(power(p, 5) == compose(power(p, 2), power(p, 3)));
}

TEST_CASE("group laws hold exactly on random points") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const CirclePoint a = ratset::testing::rand_circle_point(rng);
        const CirclePoint b = ratset::testing::rand_circle_point(rng);
        const CirclePoint c = ratset::testing::rand_circle_point(rng);
        // Closure is enforced by the CirclePoint constructor inside compose.
        CHECK(compose(a, b) == compose(b, a));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, inverse(a)) == CirclePoint::identity());
    }
}

TEST_CASE("power is additive in the exponent") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const CirclePoint p = ratset::testing::rand_circle_point(rng, 12);
        const long m = ratset::testing::rand_int(rng, -20, 20);
        const long n = ratset::testing::rand_int(rng, -20, 20);
        CHECK(power(p, m + n) == compose(power(p, m), power(p, n)));
    }
}

TEST_CASE("halve examples") {
    const auto h = halve(CirclePoint(Rat(-7, 25), Rat(24, 25)));
    REQUIRE(h.has_value());
    CHECK(*h == CirclePoint(Rat(3, 5), Rat(4, 5)));

    CHECK_FALSE(halve(CirclePoint(Rat(3, 5), Rat(4, 5))).has_value());

    const auto id = halve(CirclePoint::identity());
    REQUIRE(id.has_value());
    CHECK(*id == CirclePoint::identity());

    // The half turn: both halves are (0, +-1); the tie-break picks (0, 1).
    const auto half_turn = halve(CirclePoint(Rat(-1), Rat(0)));
    REQUIRE(half_turn.has_value());
    CHECK(*half_turn == CirclePoint(Rat(0), Rat(1)));

    // Negative sine picks the half with negative sine.
    const auto neg = halve(CirclePoint(Rat(-7, 25), Rat(-24, 25)));
    REQUIRE(neg.has_value());
    CHECK(*neg == CirclePoint(Rat(3, 5), Rat(-4, 5)));
}

TEST_CASE("halve doubles back exactly whenever present") {
    Rng rng(44);
    int present = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const CirclePoint p = ratset::testing::rand_circle_point(rng);
        const auto h = halve(p);
        if (!h) continue;
        ++present;
        CHECK(compose(*h, *h) == p);
        CHECK_FALSE(h->c().is_negative());
    }
    CHECK(present > 0);
}

TEST_CASE("doubling any rational point lands in the rational-half set") {
    Rng rng(45);
    for (int trial = 0; trial < 300; ++trial) {
        const CirclePoint h = ratset::testing::rand_circle_point(rng);
        CHECK(has_rational_half(compose(h, h)));
    }
}

TEST_CASE("has_rational_half examples") {
    CHECK(has_rational_half(CirclePoint(Rat(-7, 25), Rat(24, 25))));
    CHECK_FALSE(has_rational_half(CirclePoint(Rat(3, 5), Rat(4, 5))));
    CHECK(has_rational_half(CirclePoint::identity()));
    CHECK_FALSE(has_rational_half(CirclePoint(Rat(0), Rat(1))));
}

TEST_CASE("is_root_of_unity recognizes exactly the four axis points") {
    CHECK(is_root_of_unity(CirclePoint(Rat(0), Rat(1))));
    CHECK(is_root_of_unity(CirclePoint(Rat(0), Rat(-1))));
    CHECK(is_root_of_unity(CirclePoint(Rat(1), Rat(0))));
    CHECK(is_root_of_unity(CirclePoint(Rat(-1), Rat(0))));
    CHECK_FALSE(is_root_of_unity(CirclePoint(Rat(3, 5), Rat(4, 5))));
    CHECK_FALSE(is_root_of_unity(CirclePoint(Rat(-7, 25), Rat(24, 25))));
}
