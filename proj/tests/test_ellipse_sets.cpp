#include "ratset/ellipse_sets.hpp"

#include <doctest.h>

#include "ratset/circle_group.hpp"
#include "test_support.hpp"

using namespace ratset;

namespace {

const Ellipse kCircle(Rat(1), Rat(1));
const Ellipse kE49(Rat(4), Rat(9));

EllipseBase circle_base() { return EllipseBase(kCircle, Rat(3, 5), Rat(4, 5)); }
EllipseBase e49_base() { return EllipseBase(kE49, Rat(3, 10), Rat(4, 15)); }

}  // namespace

TEST_CASE("EllipseBase validates the on-curve invariant and computes u") {
    const EllipseBase b = e49_base();
    CHECK(b.u() == Rat(9, 25));
    CHECK_THROWS_AS(EllipseBase(kE49, Rat(1, 2), Rat(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Ellipse(Rat(0), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(Ellipse(Rat(1), Rat(-2)), std::invalid_argument);
}

TEST_CASE("base_angle_status examples") {
    // Circle base (3/5, 4/5): cos(2 t0) = -7/25 is outside Niven's set.
    CHECK(base_angle_status(kCircle, circle_base()) ==
          BaseAngleStatus::irrational_multiple);
    // y0 = 0 means u = 1: the angle is 0.
    CHECK(base_angle_status(kCircle, EllipseBase(kCircle, Rat(1), Rat(0))) ==
          BaseAngleStatus::rational_multiple);
    CHECK(base_angle_status(kE49, e49_base()) ==
          BaseAngleStatus::irrational_multiple);
}

TEST_CASE("base_angle_status covers the whole Niven boundary set") {
    // cos(2 t0) = 0 at the quarter-turn point (u = 1/2): realized on the
    // ellipse 2 x^2 + 2 y^2 = 1 by (1/2, 1/2).
    const Ellipse e22(Rat(2), Rat(2));
    CHECK(base_angle_status(e22, EllipseBase(e22, Rat(1, 2), Rat(1, 2))) ==
          BaseAngleStatus::rational_multiple);
    // cos(2 t0) = -1 at u = 0 (x0 = 0).
    CHECK(base_angle_status(kCircle, EllipseBase(kCircle, Rat(0), Rat(1))) ==
          BaseAngleStatus::rational_multiple);
    // cos(2 t0) = 1/2 needs u = 3/4: a = 3, b = 1 puts (1/2, 1/2) on curve.
    const Ellipse e31(Rat(3), Rat(1));
    CHECK(base_angle_status(e31, EllipseBase(e31, Rat(1, 2), Rat(1, 2))) ==
          BaseAngleStatus::rational_multiple);
    // cos(2 t0) = -1/2 needs u = 1/4: a = 1, b = 3 does it.
    const Ellipse e13(Rat(1), Rat(3));
    CHECK(base_angle_status(e13, EllipseBase(e13, Rat(1, 2), Rat(1, 2))) ==
          BaseAngleStatus::rational_multiple);
}

TEST_CASE("odd_multiple_coords examples") {
    const EllipseBase b = circle_base();
    // A base paired with the wrong curve is rejected.
    CHECK_THROWS_AS(odd_multiple_coords(kE49, b, 1), std::invalid_argument);
    CHECK(odd_multiple_coords(kCircle, b, 0) == QPoint({Rat(3, 5), Rat(4, 5)}));
    // Triple angle: (cos 3t, sin 3t) = (-117/125, 44/125).
    CHECK(odd_multiple_coords(kCircle, b, 1) ==
          QPoint({Rat(-117, 125), Rat(44, 125)}));
    // One step of the general recurrence: X_1 = x0 (4u - 3), Y_1 = y0 (4u - 1).
    const EllipseBase g = e49_base();
    const QPoint p1 = odd_multiple_coords(kE49, g, 1);
    CHECK(p1[0] == g.x0() * (Rat(4) * g.u() - Rat(3)));
    CHECK(p1[1] == g.y0() * (Rat(4) * g.u() - Rat(1)));
}

TEST_CASE("the recurrence matches the circle-group power oracle for |k| <= 50") {
    const EllipseBase b = circle_base();
    const CirclePoint base(Rat(3, 5), Rat(4, 5));
    for (long k = -50; k <= 50; ++k) {
        const QPoint p = odd_multiple_coords(kCircle, b, k);
        const CirclePoint expect = power(base, 2 * k + 1);
        CHECK(p[0] == expect.c());
        CHECK(p[1] == expect.s());
    }
}

TEST_CASE("points stay exactly on the curve for |k| <= 200") {
    const struct {
        const Ellipse* e;
        EllipseBase b;
    } cases[] = {
        {&kCircle, circle_base()},
        {&kE49, e49_base()},
        {&kCircle, EllipseBase(kCircle, Rat(5, 13), Rat(12, 13))},
    };
    for (const auto& c : cases) {
        for (long k = -200; k <= 200; k += 7) {
            const QPoint p = odd_multiple_coords(*c.e, c.b, k);
            CHECK(c.e->a * square(p[0]) + c.e->b * square(p[1]) == Rat(1));
        }
        // The extremes as well.
        for (long k : {-200L, -199L, 199L, 200L}) {
            const QPoint p = odd_multiple_coords(*c.e, c.b, k);
            CHECK(c.e->a * square(p[0]) + c.e->b * square(p[1]) == Rat(1));
        }
    }
}

TEST_CASE("gen_ellipse_set examples") {
    CHECK(gen_ellipse_set(kCircle, circle_base(), 0).size() == 1);
    CHECK(gen_ellipse_set(kCircle, circle_base(), 0)[0] ==
          QPoint({Rat(3, 5), Rat(4, 5)}));

    // count = 2 gives the five distinct points power(base, 8k+1).
    const PointSet s = gen_ellipse_set(kCircle, circle_base(), 2);
    REQUIRE(s.size() == 5);
    const CirclePoint base(Rat(3, 5), Rat(4, 5));
    for (long k = -2; k <= 2; ++k) {
        const CirclePoint expect = power(base, 8 * k + 1);
        CHECK(s.contains(QPoint({expect.c(), expect.s()})));
    }

    // A rational-multiple base is rejected.
    CHECK_THROWS_AS(
        gen_ellipse_set(kCircle, EllipseBase(kCircle, Rat(1), Rat(0)), 2),
        std::invalid_argument);
}

TEST_CASE("the 11-point set on 4x^2 + 9y^2 = 1 sits on the curve exactly") {
    const PointSet s = gen_ellipse_set(kE49, e49_base(), 5);
    REQUIRE(s.size() == 11);
    for (const QPoint& p : s)
        CHECK(kE49.a * square(p[0]) + kE49.b * square(p[1]) == Rat(1));
}

TEST_CASE("a != b breaks the rational-distance property (known defect)") {
    // The closed form 4 sin^2(4(k-l) t0)/(ab) only equals the euclidean
    // distance when the midpoint factor a^2 X^2 + b^2 Y^2 collapses to 1,
    // i.e. on the unit circle. With a = 4, b = 9 the pair (t0, 9 t0) has
    // d^2 = 672^2 * 2433605 / 1953125^2 and 2433605 = 1560^2 + 5 is not a
    // perfect square, so the distance is irrational.
    const EllipseBase gb = e49_base();
    const Rat d2 = ellipse_pair_distance_sq(kE49, gb, 1, 0);
    CHECK(d2 == Rat(Int(672) * 672 * 2433605, Int(1953125) * 1953125));
    CHECK_FALSE(rational_sqrt(d2).has_value());

    const PointSet s = gen_ellipse_set(kE49, gb, 5);
    CHECK_FALSE(verify_rational_set(s).ok);
}

TEST_CASE("pair distance: the closed form matches coordinates on the circle") {
    const EllipseBase cb = circle_base();
    for (long k = -10; k <= 10; k += 2)
        for (long l = -10; l <= 10; l += 3)
            CHECK(ellipse_pair_distance_sq(kCircle, cb, k, l) ==
                  pair_distance_sq_closed_form(kCircle, cb, k, l));
    CHECK(ellipse_pair_distance_sq(kE49, e49_base(), 3, 3) == Rat(0));
}

TEST_CASE("coordinates equal the closed form times the midpoint factor") {
    // d^2(k,l) = closed(k,l) * (a^2 X^2 + b^2 Y^2) evaluated at recurrence
    // index 2(k+l); the factor is identically 1 exactly when a = b = 1.
    const EllipseBase gb = e49_base();
    for (long k = -6; k <= 6; k += 2)
        for (long l = -5; l <= 5; l += 3) {
            const QPoint mid = odd_multiple_coords(kE49, gb, 2 * (k + l));
            const Rat factor = square(kE49.a) * square(mid[0]) +
                               square(kE49.b) * square(mid[1]);
            CHECK(ellipse_pair_distance_sq(kE49, gb, k, l) ==
                  pair_distance_sq_closed_form(kE49, gb, k, l) * factor);
        }
}

TEST_CASE("pair distance translation behavior") {
    // The closed form depends only on k - l by construction; the true
    // coordinate distance picks up the k + l midpoint factor when a != b,
    // so translation invariance holds on the circle and fails on e49.
    const EllipseBase cb = circle_base();
    const EllipseBase gb = e49_base();
    for (long m = 1; m <= 6; ++m)
        for (long shift = -3; shift <= 3; ++shift) {
            CHECK(ellipse_pair_distance_sq(kCircle, cb, shift + m, shift) ==
                  ellipse_pair_distance_sq(kCircle, cb, m, 0));
            CHECK(pair_distance_sq_closed_form(kE49, gb, shift + m, shift) ==
                  pair_distance_sq_closed_form(kE49, gb, m, 0));
        }
    CHECK(ellipse_pair_distance_sq(kE49, gb, 2, 1) !=
          ellipse_pair_distance_sq(kE49, gb, 1, 0));
}

TEST_CASE("circle specialization: the closed form meets the compose oracle") {
    const EllipseBase cb = circle_base();
    const CirclePoint base(Rat(3, 5), Rat(4, 5));
    for (long k = -4; k <= 4; ++k)
        for (long l = -4; l <= 4; ++l) {
            // 4 sin^2(4(k-l) t0) from the exact group element.
            const CirclePoint rot = power(base, 4 * (k - l));
            const Rat expect = Rat(4) * square(rot.s());
            CHECK(ellipse_pair_distance_sq(kCircle, cb, k, l) == expect);
        }
}

TEST_CASE("hyperbolic_scale_check examples") {
    // Circle: scale 2, matching the dense circle set's property.
    const PointSet s1 = gen_ellipse_set(kCircle, circle_base(), 3);
    const auto r1 = hyperbolic_scale_check(kCircle, s1);
    CHECK(r1.applicable);
    CHECK(r1.scale == Rat(2));
    CHECK(r1.ok);

    // ab = 36 is a square, so the check applies at scale 1/3; it honestly
    // reports the failure of the distance property when a != b.
    const PointSet s2 = gen_ellipse_set(kE49, e49_base(), 5);
    const auto r2 = hyperbolic_scale_check(kE49, s2);
    CHECK(r2.applicable);
    CHECK(r2.scale == Rat(1, 3));
    CHECK_FALSE(r2.ok);
    CHECK_FALSE(r2.violations.empty());

    // ab = 2 is not a square.
    const Ellipse e12(Rat(1), Rat(2));
    const auto r3 = hyperbolic_scale_check(e12, s1);
    CHECK_FALSE(r3.applicable);
}

TEST_CASE("standard_ellipse examples") {
    const auto [c, cb] = standard_ellipse(Rat(1), Rat(1));
    CHECK(c.a == Rat(1));
    CHECK(c.b == Rat(1));
    CHECK(cb.x0() == Rat(3, 5));
    CHECK(cb.y0() == Rat(4, 5));

    const auto [e, b] = standard_ellipse(Rat(2), Rat(1));
    CHECK(e.a == Rat(1, 4));
    CHECK(b.x0() == Rat(6, 5));
    CHECK(b.y0() == Rat(4, 5));
    CHECK(e.a * square(b.x0()) + e.b * square(b.y0()) == Rat(1));

    // u = 9/25 regardless of the axes, so the base angle always qualifies.
    CHECK(b.u() == Rat(9, 25));
    CHECK(base_angle_status(e, b) == BaseAngleStatus::irrational_multiple);

    // The unit-circle instance of the standard form is a rational set.
    const PointSet circle_set = gen_ellipse_set(c, cb, 3);
    CHECK(verify_rational_set(circle_set).ok);

    // Distinct semi-axes inherit the a != b distance defect.
    const auto [e2, b2] = standard_ellipse(Rat(5, 3), Rat(7, 2));
    CHECK(base_angle_status(e2, b2) == BaseAngleStatus::irrational_multiple);
    const PointSet s = gen_ellipse_set(e2, b2, 3);
    for (const QPoint& p : s)
        CHECK(e2.a * square(p[0]) + e2.b * square(p[1]) == Rat(1));
    CHECK_FALSE(verify_rational_set(s).ok);
}
