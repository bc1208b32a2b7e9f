/**
 * @file circle_sets.hpp
 * @brief The dense rational-distance set on the unit circle built from
 *        Pythagorean parameters, its exact pair distances, membership
 *        test, and a finite coverage probe for density at a chosen arc
 *        resolution.
 *
 * A Pythagorean parameter is an integer pair (a, b) with a^2 + b^2 a
 * nonzero perfect square t^2. Its circle point is
 * ((a^2 - b^2)/t^2, 2ab/t^2); the half-angle point (a/t, b/t) is rational
 * by construction, which is exactly the membership criterion of the dense
 * set. Distances within the set are 2|ad - bc|/(t1*t2): rational, and
 * distances from (1, 0) are twice hyperbolic rationals.
 */
#pragma once

#include "ratset/circle_group.hpp"
#include "ratset/exact_core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ratset {

/// Integer pair (a, b) with a^2 + b^2 = t^2, t > 0.
struct PythParam {
    Int a;
    Int b;
    Int t;

    PythParam(Int a_, Int b_, Int t_);

    /// Builds the parameter from its legs when a^2 + b^2 is a nonzero
    /// perfect square; absent otherwise.
    static std::optional<PythParam> from_legs(const Int& a, const Int& b);

    friend bool operator==(const PythParam& p, const PythParam& q) {
        return p.a == q.a && p.b == q.b;
    }
};

/// Enumerates Pythagorean parameters in a reproducible order: the four
/// axis pairs (t,0), (-t,0), (0,t), (0,-t) for t = 1..bound, then for each
/// primitive generator pair m > n >= 1, gcd(m,n) = 1, m - n odd, taken in
/// ascending (m+n, m) order with m <= bound, and each multiplier
/// d = 1..bound, the eight sign/swap variants of (d(m^2-n^2), 2dmn) in the
/// fixed order (o,e), (-o,e), (o,-e), (-o,-e), (e,o), (-e,o), (e,-o),
/// (-e,-o). No duplicates occur.
std::vector<PythParam> gen_params(unsigned bound);

/// ((a^2 - b^2)/t^2, 2ab/t^2). Its rational half is (a/t, b/t).
CirclePoint point_of(const PythParam& p);

/// Exact distance 2|ad - bc|/(t_p * t_q) between the two circle points.
Rat pair_distance(const PythParam& p, const PythParam& q);

/// Membership in the dense set: the point has a rational half.
bool in_dense_circle_set(const CirclePoint& p);

/// The deduplicated point set of gen_params(bound) under point_of, in
/// first-occurrence order. Multipliers d > 1 and axis pairs t > 1 repeat
/// the points of their primitive representatives, so the enumeration here
/// visits only d = 1 and t = 1; the result is identical.
PointSet gen_dense_circle_set(unsigned bound);

struct ArcCoverageReport {
    int arcs = 0;
    /// Indices of arcs [2*pi*j/arcs, 2*pi*(j+1)/arcs) containing no point.
    std::vector<int> empty_arcs;
    /// (point index, boundary index) for points whose tangent landed
    /// inside a boundary bracket; such points sit within 1e-6 (in tangent
    /// value) of the boundary and were assigned to the lower arc.
    std::vector<std::pair<std::size_t, int>> near_boundary;
};

/// Partitions the circle into `arcs` equal arcs (arcs must be a positive
/// multiple of 4) and reports the arcs hit by no point of the set. Arc
/// assignment is exact rational comparison of s/c against boundary
/// tangents: exact values where the tangent is rational, otherwise
/// certified rational brackets of width <= 2e-6 built with directed
/// rounding, with bracket hits recorded in the report.
ArcCoverageReport coverage_probe(const PointSet& s, int arcs);

}  // namespace ratset
