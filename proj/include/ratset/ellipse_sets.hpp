/**
 * @file ellipse_sets.hpp
 * @brief Dense rational-distance sets on ellipses a x^2 + b y^2 = 1 from a
 *        rational base point, through exact odd-multiple-angle recurrences.
 *
 * Writing the base point as (cos(t0)/sqrt(a), sin(t0)/sqrt(b)), the
 * quantity u = a*x0^2 houses cos^2(t0) and the coordinates of the point at
 * odd angle multiple (2k+1)t0 follow the reversible three-term recurrence
 * X_{k+1} = 2(2u-1) X_k - X_{k-1} (and likewise for Y), staying rational
 * and exactly on the curve. The generated sets use indices 8k+1; their
 * squared pair distances are 4 sin^2(4(k-l)t0)/(ab), rational squares, and
 * when ab is itself a rational square g^2 every distance is (2/g) times a
 * hyperbolic rational.
 */
#pragma once

#include "ratset/exact_core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ratset {

/// The curve a x^2 + b y^2 = 1 with positive rational coefficients.
struct Ellipse {
    Rat a;
    Rat b;

    Ellipse(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
        if (!a.is_positive() || !b.is_positive())
            throw std::invalid_argument("Ellipse: coefficients must be positive");
    }
};

/// A rational point of the ellipse together with u = a*x0^2 (the exact
/// stand-in for cos^2 of its angle parameter; 1 - u = b*y0^2).
class EllipseBase {
public:
    EllipseBase(const Ellipse& e, Rat x0, Rat y0);

    const Rat& x0() const { return x0_; }
    const Rat& y0() const { return y0_; }
    const Rat& u() const { return u_; }

private:
    Rat x0_;
    Rat y0_;
    Rat u_;
};

enum class BaseAngleStatus { irrational_multiple, rational_multiple };

/// Decides whether the base angle is a rational multiple of 2*pi. The
/// always-rational cos(2*t0) = 2u - 1 settles it: outside {0, +-1/2, +-1}
/// the angle is an irrational multiple (a rational multiple of pi with
/// rational cosine has its cosine in that set); inside it, the candidate
/// finite orders are confirmed by the orbit revisiting its start within 12
/// steps.
BaseAngleStatus base_angle_status(const Ellipse& e, const EllipseBase& base);

/// Coordinates of the point at odd angle multiple 2k+1 (k may be
/// negative), by the exact recurrence. Lies on the ellipse exactly.
QPoint odd_multiple_coords(const Ellipse& e, const EllipseBase& base, long k);

/// The set { odd_multiple_coords(4k) : k in [-count, count] }, i.e. angle
/// multiples 8k+1, deduplicated, in ascending k order. Rejects bases whose
/// angle is a rational multiple of 2*pi (the orbit would be finite).
PointSet gen_ellipse_set(const Ellipse& e, const EllipseBase& base,
                         unsigned count);

/// Exact squared distance between the points of recurrence indices 4k and
/// 4l, computed from coordinates.
Rat ellipse_pair_distance_sq(const Ellipse& e, const EllipseBase& base, long k,
                             long l);

/// The same squared distance along the closed form 4 sin^2(4(k-l)t0)/(ab),
/// evaluated exactly through the Chebyshev recurrence in cos(2*t0). Kept
/// separate from the coordinate route so the two can be checked against
/// each other.
Rat pair_distance_sq_closed_form(const Ellipse& e, const EllipseBase& base,
                                 long k, long l);

struct HyperbolicScaleReport {
    bool applicable = false;          // ab is a rational square
    bool ok = false;                  // every pair distance is scale * hyperbolic
    std::optional<Rat> scale;         // 2/sqrt(ab) when applicable
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// When ab = g^2, checks that every pairwise distance d of the set has
/// d*g/2 hyperbolic (distances from the base point are pairs like any
/// other, the base being a member of generated sets).
HyperbolicScaleReport hyperbolic_scale_check(const Ellipse& e,
                                             const PointSet& s);

/// Semi-axis form x^2/a^2 + y^2/b^2 = 1: returns the coefficient-form
/// ellipse (1/a^2, 1/b^2) with the base point (3a/5, 4b/5), whose angle is
/// never a rational multiple of 2*pi.
std::pair<Ellipse, EllipseBase> standard_ellipse(const Rat& a, const Rat& b);

}  // namespace ratset
