#include "ratset/sphere_map.hpp"

namespace ratset {

SpherePoint::SpherePoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw std::invalid_argument("SpherePoint: need at least 2 coordinates");
    Rat norm(0);
    for (const Rat& c : coords_) norm += square(c);
    if (norm != Rat(1)) {
        throw std::invalid_argument("SpherePoint: squared norm is " +
                                    norm.to_string() + ", expected 1");
    }
}

SpherePoint SpherePoint::pole(std::size_t k) {
    if (k < 1) throw std::invalid_argument("SpherePoint: k must be >= 1");
    std::vector<Rat> coords(k + 1, Rat(0));
    coords[0] = Rat(1);
    return SpherePoint(std::move(coords));
}

QPoint phi(const SpherePoint& p) {
    if (p.is_antipole())
        throw std::domain_error("phi: undefined at the antipode of the pole");
    const Rat denom = Rat(1) + p[0];
    std::vector<Rat> u;
    u.reserve(p.k());
    for (std::size_t i = 1; i <= p.k(); ++i) u.push_back(p[i] / denom);
    return QPoint(std::move(u));
}

SpherePoint phi_inv(const QPoint& u) {
    Rat n2(0);
    for (const Rat& c : u.coords()) n2 += square(c);
    const Rat denom = Rat(1) + n2;
    std::vector<Rat> x;
    x.reserve(u.dim() + 1);
    x.push_back((Rat(1) - n2) / denom);
    for (const Rat& c : u.coords()) x.push_back(Rat(2) * c / denom);
    return SpherePoint(std::move(x));
}

std::optional<Rat> dist_from_e(const SpherePoint& p) {
    return rational_sqrt(Rat(2) * (Rat(1) - p[0]));
}

bool has_rational_half_angle(const SpherePoint& p) {
    const Rat half(1, 2);
    return rational_sqrt((Rat(1) - p[0]) * half).has_value() &&
           rational_sqrt((Rat(1) + p[0]) * half).has_value();
}

EquivalenceReport verify_rationality_equivalence(const SpherePoint& x, const SpherePoint& y) {
    if (x.k() != y.k())
        throw std::invalid_argument("verify_rationality_equivalence: dimension mismatch");
    EquivalenceReport r;
    r.hypothesis_ok = !x.is_pole() && !x.is_antipole() && !y.is_pole() &&
                      !y.is_antipole() && has_rational_half_angle(x) &&
                      has_rational_half_angle(y);

    r.chord_rational =
        rational_sqrt(pairwise_distance_sq(x.to_qpoint(), y.to_qpoint()))
            .has_value();

    // Independent route: sin^2(angle/2) = (1 - x.y)/2 through the inner
    // product of the unit vectors.
    Rat dot(0);
    for (std::size_t i = 0; i <= x.k(); ++i) dot += x[i] * y[i];
    r.half_sine_rational =
        rational_sqrt((Rat(1) - dot) / Rat(2)).has_value();

    if (!x.is_antipole() && !y.is_antipole()) {
        const QPoint b = phi(x);
        const QPoint c = phi(y);
        const QPoint a = QPoint::origin(b.dim());
        r.tangent_side_rational =
            rational_sqrt(pairwise_distance_sq(b, c)).has_value();
        const bool ab = rational_sqrt(pairwise_distance_sq(a, b)).has_value();
        const bool ac = rational_sqrt(pairwise_distance_sq(a, c)).has_value();
        r.tangent_triangle_rational = r.tangent_side_rational && ab && ac;
    }

    r.consistent = r.chord_rational == r.half_sine_rational &&
                   r.half_sine_rational == r.tangent_side_rational &&
                   r.tangent_side_rational == r.tangent_triangle_rational;
    return r;
}

PointSet transfer_plane_to_sphere(const PointSet& y) {
    const QPoint origin = QPoint::origin(y.dim());
    if (!y.contains(origin))
        throw std::invalid_argument(
            "transfer_plane_to_sphere: the set must contain the origin (the "
            "base point)");
    const RationalSetReport rs = verify_rational_set(y);
    if (!rs.ok)
        throw std::invalid_argument(
            "transfer_plane_to_sphere: not a rational set; first failing pair (" +
            std::to_string(rs.violations.front().first) + ", " +
            std::to_string(rs.violations.front().second) + ")");
    const ScaledTypeReport st =
        verify_scaled_type(y, origin, Rat(1), RationalType::elliptic);
    if (!st.ok) {
        const std::size_t i = st.violations.front();
        throw std::invalid_argument(
            "transfer_plane_to_sphere: distance from the origin to point " +
            std::to_string(i) + " = " + y[i].to_string() +
            " is not an elliptic rational");
    }

    std::vector<QPoint> out;
    out.reserve(y.size());
    for (const QPoint& p : y) out.push_back(phi_inv(p).to_qpoint());
    PointSet::Meta meta = y.meta();
    meta["transfer"] = "plane-to-sphere";
    return PointSet(y.dim() + 1, std::move(out), std::move(meta));
}

PointSet transfer_sphere_to_plane(const PointSet& x) {
    if (x.dim() < 2)
        throw std::invalid_argument(
            "transfer_sphere_to_plane: need ambient dimension >= 2");
    std::vector<SpherePoint> pts;
    pts.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        SpherePoint p = SpherePoint::from_qpoint(x[i]);
        if (p.is_antipole())
            throw std::invalid_argument(
                "transfer_sphere_to_plane: point " + std::to_string(i) +
                " is the antipode of the pole, outside the domain of the map");
        pts.push_back(std::move(p));
    }
    const QPoint pole = SpherePoint::pole(x.dim() - 1).to_qpoint();
    if (!x.contains(pole))
        throw std::invalid_argument(
            "transfer_sphere_to_plane: the set must contain the pole e");
    const RationalSetReport rs = verify_rational_set(x);
    if (!rs.ok)
        throw std::invalid_argument(
            "transfer_sphere_to_plane: not a rational set; first failing pair (" +
            std::to_string(rs.violations.front().first) + ", " +
            std::to_string(rs.violations.front().second) + ")");
    const ScaledTypeReport st =
        verify_scaled_type(x, pole, Rat(2), RationalType::hyperbolic);
    if (!st.ok) {
        const std::size_t i = st.violations.front();
        throw std::invalid_argument(
            "transfer_sphere_to_plane: distance from e to point " +
            std::to_string(i) + " = " + x[i].to_string() +
            " is not twice a hyperbolic rational");
    }

    std::vector<QPoint> out;
    out.reserve(x.size());
    for (const SpherePoint& p : pts) out.push_back(phi(p));
    PointSet::Meta meta = x.meta();
    meta["transfer"] = "sphere-to-plane";
    return PointSet(x.dim() - 1, std::move(out), std::move(meta));
}

}  // namespace ratset
