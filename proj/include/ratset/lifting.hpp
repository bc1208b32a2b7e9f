/**
 * @file lifting.hpp
 * @brief Dimension lifting of rational-distance sets through the
 *        half-angle map, integral point sets by denominator clearing, and
 *        exact linear-algebra certificates (affine rank, cosphericity).
 *
 * One lift step takes a rational set X in Q^k, adjoins the origin, dilates
 * by a fixed r0 with 1 + r0^2 a rational square, and maps the result to
 * S^k through the inverse half-angle map. Rationality of coordinates and
 * of all mutual distances is preserved (the non-origin points of each
 * stage sit at distance 1 from the origin, so all dilated radii are 0 or
 * r0, whose magnitude is elliptic). Iterating from the dense circle set
 * and adjoining the ambient origin yields, in every dimension, a rational
 * set lying on no hyperplane and no sphere, from which arbitrarily large
 * integral sets follow by clearing denominators.
 */
#pragma once

#include "ratset/circle_sets.hpp"
#include "ratset/exact_core.hpp"

#include <stdexcept>

namespace ratset {

struct LiftConfig {
    Rat r0;                 // dilation radius; 1 + r0^2 must be a rational square
    std::size_t target_dim; // ambient dimension of the final set, >= 2
    unsigned base_bound;    // parameter bound of the seed circle set

    LiftConfig(Rat r0_, std::size_t target_dim_, unsigned base_bound_);
};

/// Raised when a lifted set fails its own distance certificate; carries
/// the offending point pair. Such a failure certifies a defective seed.
struct LiftError : std::runtime_error {
    std::size_t i;
    std::size_t j;
    LiftError(std::size_t i_, std::size_t j_)
        : std::runtime_error("lift: output pair (" + std::to_string(i_) + ", " +
                             std::to_string(j_) +
                             ") has irrational distance; the seed set violates "
                             "the lift preconditions"),
          i(i_),
          j(j_) {}
};

/// One lift step: { phi_inv(r0 * x) : x in {origin} union X }, the origin
/// placed first (it maps to the pole e). The output is verified to be a
/// rational set; a failing pair raises LiftError.
PointSet lift_once(const PointSet& x, const Rat& r0);

/// Runs the lift pipeline from the seed circle set in dimension 2 up to
/// the target dimension and adjoins the ambient origin (first). Metadata
/// records the exact certificates: affine rank and cosphericity.
PointSet build_rational_set(const LiftConfig& cfg);

/// Scales the set by the least common multiple L of all coordinate
/// denominators. Coordinates become integers and every pairwise distance a
/// nonnegative integer (a rational square root of an integer is an
/// integer). L is recorded in metadata under "scale_lcm".
PointSet integral_set(const PointSet& x);

/// Rank over Q of the difference matrix {x - x_0}, by fraction-free
/// elimination. Equals dim(x) exactly when the set spans no hyperplane.
std::size_t affine_rank(const PointSet& x);

/// True iff all points lie on a common (k-1)-sphere. Decided exactly:
/// the circumsphere equations u.(x_i - x_0) = |x_i|^2 - |x_0|^2 are
/// solvable iff the paraboloid-lifted points (x, |x|^2) have the same
/// affine rank as the points themselves; any solution is a genuine sphere
/// because the set holds at least two distinct points. Requires |x| >= 2.
bool is_cospherical(const PointSet& x);

}  // namespace ratset
