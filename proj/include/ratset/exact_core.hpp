/**
 * @file exact_core.hpp
 * @brief Exact square-root detection, elliptic/hyperbolic classification of
 *        rationals, rational points and point sets, and the distance-set
 *        verifiers everything else builds on.
 *
 * A reduced p/q is called elliptic when p^2 + q^2 is a perfect square and
 * hyperbolic when p^2 - q^2 is plus or minus a perfect square. A point set
 * is a rational set when every pairwise euclidean distance is rational;
 * the scaled variants additionally require the distances from a base point
 * to be a fixed rational multiple of elliptic (resp. hyperbolic) rationals.
 */
#pragma once

#include "ratset/rat.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ratset {

/// Exact integer square root: the r with r*r = n when n is a perfect
/// square, absent otherwise. Newton iteration on big integers followed by
/// an exact verification; no floating point. Throws std::domain_error for
/// negative n.
std::optional<Int> integer_sqrt(const Int& n);

/// True iff n is a perfect square (false for negative n).
bool is_perfect_square(const Int& n);

/// Exact rational square root of a nonnegative rational. A reduced p/q is
/// a rational square iff p and q are both perfect squares.
std::optional<Rat> rational_sqrt(const Rat& r);

/// Quadratic class membership of a rational.
struct RationalClass {
    bool elliptic = false;
    bool hyperbolic = false;
};

/// Classifies |r| = p/q in reduced form: elliptic iff p^2 + q^2 is a
/// perfect square, hyperbolic iff |p^2 - q^2| is. Negative inputs are
/// classified by absolute value (distance sets are nonnegative).
RationalClass classify(const Rat& r);

enum class RationalType { elliptic, hyperbolic };

/// A point of Q^k, k >= 1.
class QPoint {
public:
    explicit QPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
        if (coords_.empty())
            throw std::invalid_argument("QPoint: dimension must be >= 1");
    }

    static QPoint origin(std::size_t dim) {
        return QPoint(std::vector<Rat>(dim, Rat(0)));
    }

    std::size_t dim() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_origin() const {
        for (const Rat& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const QPoint& a, const QPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const QPoint& a, const QPoint& b) {
        return !(a == b);
    }
    friend bool operator<(const QPoint& a, const QPoint& b);

    std::string to_string() const;

private:
    std::vector<Rat> coords_;
};

/// Exact squared euclidean distance. Throws on dimension mismatch.
Rat pairwise_distance_sq(const QPoint& p, const QPoint& q);

/// A finite set of points of common dimension plus free-form provenance
/// metadata. Construction rejects dimension mismatches and exact duplicate
/// points; generators that may produce repeats use dedup().
class PointSet {
public:
    using Meta = std::map<std::string, std::string>;

    PointSet(std::size_t dim, std::vector<QPoint> points, Meta meta = {});

    /// Builds a set keeping the first occurrence of each distinct point.
    static PointSet dedup(std::size_t dim, const std::vector<QPoint>& points,
                          Meta meta = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const QPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<QPoint>& points() const { return points_; }

    const Meta& meta() const { return meta_; }
    Meta& meta() { return meta_; }

    std::optional<std::size_t> index_of(const QPoint& p) const;
    bool contains(const QPoint& p) const { return index_of(p).has_value(); }

    /// The subset made of the first n points (metadata carried over).
    PointSet take_prefix(std::size_t n) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::size_t dim_;
    std::vector<QPoint> points_;
    Meta meta_;
};

struct RationalSetReport {
    bool ok = true;
    /// Failing index pairs (i, j), i < j, sorted lexicographically.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Checks that every pairwise squared distance has a rational square root.
/// The pair scan is partitioned across workers (RATSET_THREADS caps the
/// count); violations are aggregated deterministically in index order.
RationalSetReport verify_rational_set(const PointSet& s);

struct ScaledTypeReport {
    bool ok = true;
    /// Indices of points whose base distance is irrational or whose
    /// distance/scale is not of the requested class (zero is admitted).
    std::vector<std::size_t> violations;
};

/// Checks that d(base, x)/scale is zero or a rational of the requested
/// class for every x in the set. Irrational base distances are reported as
/// violations, not errors.
ScaledTypeReport verify_scaled_type(const PointSet& s, const QPoint& base,
                                    const Rat& scale, RationalType type);

/// Scales every coordinate by a nonzero factor. Distances scale by |factor|.
PointSet dilate(const PointSet& s, const Rat& factor);

/// Translates every point by a rational vector. Distances are unchanged.
PointSet translate(const PointSet& s, const QPoint& offset);

}  // namespace ratset
