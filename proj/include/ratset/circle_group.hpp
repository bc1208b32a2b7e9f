/**
 * @file circle_group.hpp
 * @brief Rational points on the unit circle as a group under angle
 *        addition, with exact doubling/halving.
 *
 * Angles are never materialized: the pair (cos, sin) is the sole
 * representation, so every operation is decidable over the rationals.
 * A point has a rational half exactly when (1+c)/2 and (1-c)/2 are both
 * rational squares; the set of such points is closed under the group law
 * and is the membership criterion used by the dense circle sets.
 */
#pragma once

#include "ratset/exact_core.hpp"

#include <optional>

namespace ratset {

/// A point (c, s) with c^2 + s^2 = 1 exactly; checked at construction.
class CirclePoint {
public:
    CirclePoint(Rat c, Rat s) : c_(std::move(c)), s_(std::move(s)) {
        if (square(c_) + square(s_) != Rat(1))
            throw std::invalid_argument("CirclePoint: (" + c_.to_string() + ", " +
                                        s_.to_string() + ") is not on the unit circle");
    }

    static CirclePoint identity() { return CirclePoint(Rat(1), Rat(0)); }

    const Rat& c() const { return c_; }
    const Rat& s() const { return s_; }

    QPoint to_qpoint() const { return QPoint({c_, s_}); }
    static CirclePoint from_qpoint(const QPoint& p);

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
        return a.c_ == b.c_ && a.s_ == b.s_;
    }
    friend bool operator!=(const CirclePoint& a, const CirclePoint& b) {
        return !(a == b);
    }

private:
    Rat c_;
    Rat s_;
};

/// Group law: angle addition on coordinates. Exactly closed.
CirclePoint compose(const CirclePoint& p, const CirclePoint& q);

/// Group inverse (angle negation).
CirclePoint inverse(const CirclePoint& p);

/// n-fold composition, negative n through the inverse.
CirclePoint power(const CirclePoint& p, long n);

/// The rational half of p when one exists: H with compose(H, H) = p.
/// Of the two halves (they differ by a half turn) returns the one with
/// nonnegative cosine, breaking the tie at cosine zero toward nonnegative
/// sine.
std::optional<CirclePoint> halve(const CirclePoint& p);

/// True iff p has a rational half. This is the predicate behind the dense
/// circle set: doubling any rational circle point lands in it.
bool has_rational_half(const CirclePoint& p);

/// True iff p has finite order, i.e. p is one of (+-1, 0), (0, +-1).
bool is_root_of_unity(const CirclePoint& p);

}  // namespace ratset
