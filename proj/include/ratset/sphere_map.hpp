/**
 * @file sphere_map.hpp
 * @brief The half-angle homeomorphism between the punctured unit sphere
 *        S^k \ {-e} and the tangent space at the pole e = (1, 0, ..., 0),
 *        its four-way rationality equivalence verifier, and the point-set
 *        transfers between elliptic-distance plane sets and 2x-hyperbolic
 *        sphere sets.
 *
 * The map sends a sphere point at angle theta from e to the tangent point
 * at radius tan(theta/2); in coordinates u = (x_1, ..., x_k)/(1 + x_0),
 * with inverse x = ((1 - |u|^2), 2u)/(1 + |u|^2). Both directions preserve
 * rationality of coordinates, and for points whose half-angle is rational
 * they preserve rationality of mutual distances.
 */
#pragma once

#include "ratset/exact_core.hpp"

#include <optional>

namespace ratset {

/// A rational point of S^k, k >= 1, stored as its k+1 coordinates with
/// sum of squares exactly 1 (checked at construction).
class SpherePoint {
public:
    explicit SpherePoint(std::vector<Rat> coords);

    /// The pole e = (1, 0, ..., 0) of S^k.
    static SpherePoint pole(std::size_t k);

    static SpherePoint from_qpoint(const QPoint& p) {
        return SpherePoint(p.coords());
    }

    /// Sphere dimension k (one less than the coordinate count).
    std::size_t k() const { return coords_.size() - 1; }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rat>& coords() const { return coords_; }
    QPoint to_qpoint() const { return QPoint(coords_); }

    bool is_pole() const { return coords_[0] == Rat(1); }
    bool is_antipole() const { return coords_[0] == Rat(-1); }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const SpherePoint& a, const SpherePoint& b) {
        return !(a == b);
    }

private:
    std::vector<Rat> coords_;
};

/// Tangent coordinates u = (x_1, ..., x_k)/(1 + x_0) of the half-angle
/// map. Undefined at -e (throws std::domain_error); phi(e) is the origin.
QPoint phi(const SpherePoint& p);

/// Inverse map ((1 - |u|^2)/(1 + |u|^2), 2u/(1 + |u|^2)); total, lands on
/// the sphere exactly.
SpherePoint phi_inv(const QPoint& u);

/// Distance from the pole when rational: sqrt(2(1 - x_0)) = 2 sin(theta/2).
std::optional<Rat> dist_from_e(const SpherePoint& p);

/// True iff the half-angle point of p is rational, i.e. (1 - x_0)/2 and
/// (1 + x_0)/2 are both rational squares. Equivalently, the distances from
/// p to e and to -e are both rational. This is the hypothesis of the
/// four-way equivalence; a rational distance to e alone is not enough
/// ((1/2, 1/2, 1/2, 1/2) on S^3 has distance 1 from e but an irrational
/// half-angle point).
bool has_rational_half_angle(const SpherePoint& p);

struct EquivalenceReport {
    /// Both points distinct from +-e with rational half-angle points.
    bool hypothesis_ok = false;
    bool chord_rational = false;             // ||x - y|| in Q
    bool half_sine_rational = false;         // sin(angle(XOY)/2) in Q, via x.y
    bool tangent_side_rational = false;      // ||phi(x) - phi(y)|| in Q
    bool tangent_triangle_rational = false;  // {origin, phi(x), phi(y)} rational set
    bool consistent = false;                 // all four flags agree
};

/// Evaluates the four equivalent rationality conditions on a pair of
/// sphere points along independent routes and reports whether they agree.
/// A violated hypothesis is reported, not thrown; conditions involving phi
/// are evaluated whenever the points are not -e.
EquivalenceReport verify_rationality_equivalence(const SpherePoint& x, const SpherePoint& y);

/// Maps a plane set containing the origin, with rational mutual distances
/// and elliptic distances from the origin, to the sphere set of its
/// phi-preimages. Output distances from e are twice hyperbolic rationals
/// and mutual distances stay rational. Precondition failures throw with
/// the violating point.
PointSet transfer_plane_to_sphere(const PointSet& y);

/// Inverse transfer: a sphere set containing e (and avoiding -e) with
/// rational mutual distances and e-distances twice hyperbolic maps to a
/// plane set with elliptic origin distances.
PointSet transfer_sphere_to_plane(const PointSet& x);

}  // namespace ratset
