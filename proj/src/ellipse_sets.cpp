#include "ratset/ellipse_sets.hpp"

namespace ratset {

EllipseBase::EllipseBase(const Ellipse& e, Rat x0, Rat y0)
    : x0_(std::move(x0)), y0_(std::move(y0)), u_(e.a * square(x0_)) {
    const Rat on_curve = e.a * square(x0_) + e.b * square(y0_);
    if (on_curve != Rat(1))
        throw std::invalid_argument("EllipseBase: point (" + x0_.to_string() +
                                    ", " + y0_.to_string() +
                                    ") is not on the ellipse (a x^2 + b y^2 = " +
                                    on_curve.to_string() + ")");
}

QPoint odd_multiple_coords(const Ellipse& e, const EllipseBase& base, long k) {
    if (e.a * square(base.x0()) != base.u() ||
        e.a * square(base.x0()) + e.b * square(base.y0()) != Rat(1))
        throw std::invalid_argument(
            "odd_multiple_coords: base point does not belong to this ellipse");
    // X_{k+1} = 2(2u-1) X_k - X_{k-1}, X_{-1} = X_0 = x0; Y likewise with
    // Y_{-1} = -y0, Y_0 = y0. The recurrence is reversible, so negative k
    // runs it backward.
    const Rat m = Rat(2) * (Rat(2) * base.u() - Rat(1));
    Rat x_prev = base.x0(), x_cur = base.x0();
    Rat y_prev = -base.y0(), y_cur = base.y0();
    if (k >= 0) {
        for (long j = 0; j < k; ++j) {
            Rat x_next = m * x_cur - x_prev;
            Rat y_next = m * y_cur - y_prev;
            x_prev = std::move(x_cur);
            x_cur = std::move(x_next);
            y_prev = std::move(y_cur);
            y_cur = std::move(y_next);
        }
        return QPoint({x_cur, y_cur});
    }
    // After t backward steps x_prev holds X_{-1-t}; stop at t = -k - 1.
    for (long t = 0; t < -k - 1; ++t) {
        Rat x_down = m * x_prev - x_cur;
        Rat y_down = m * y_prev - y_cur;
        x_cur = std::move(x_prev);
        x_prev = std::move(x_down);
        y_cur = std::move(y_prev);
        y_prev = std::move(y_down);
    }
    return QPoint({x_prev, y_prev});
}

BaseAngleStatus base_angle_status(const Ellipse& e, const EllipseBase& base) {
    const Rat c2 = Rat(2) * base.u() - Rat(1);
    const Rat half(1, 2);
    const bool candidate =
        c2.is_zero() || abs(c2) == half || abs(c2) == Rat(1);
    if (!candidate) return BaseAngleStatus::irrational_multiple;
    // Candidate finite orders all divide 12; confirm on the orbit itself.
    const QPoint start = odd_multiple_coords(e, base, 0);
    for (long j = 1; j <= 12; ++j)
        if (odd_multiple_coords(e, base, j) == start)
            return BaseAngleStatus::rational_multiple;
    return BaseAngleStatus::irrational_multiple;
}

PointSet gen_ellipse_set(const Ellipse& e, const EllipseBase& base,
                         unsigned count) {
    if (base_angle_status(e, base) != BaseAngleStatus::irrational_multiple)
        throw std::invalid_argument(
            "gen_ellipse_set: the base angle is a rational multiple of 2*pi; "
            "the orbit is finite, not dense");
    std::vector<QPoint> pts;
    pts.reserve(2 * static_cast<std::size_t>(count) + 1);
    const long c = static_cast<long>(count);
    for (long k = -c; k <= c; ++k)
        pts.push_back(odd_multiple_coords(e, base, 4 * k));
    PointSet::Meta meta;
    meta["generator"] = "ellipse-gen";
    meta["a"] = e.a.to_string();
    meta["b"] = e.b.to_string();
    meta["x0"] = base.x0().to_string();
    meta["y0"] = base.y0().to_string();
    meta["count"] = std::to_string(count);
    return PointSet::dedup(2, pts, std::move(meta));
}

Rat ellipse_pair_distance_sq(const Ellipse& e, const EllipseBase& base, long k,
                             long l) {
    return pairwise_distance_sq(odd_multiple_coords(e, base, 4 * k),
                                odd_multiple_coords(e, base, 4 * l));
}

namespace {

// T_n(x) by the three-term recurrence, exact.
Rat chebyshev_t(long n, const Rat& x) {
    if (n < 0) n = -n;
    if (n == 0) return Rat(1);
    Rat prev(1), cur = x;
    for (long j = 1; j < n; ++j) {
        Rat next = Rat(2) * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Rat pair_distance_sq_closed_form(const Ellipse& e, const EllipseBase& base,
                                 long k, long l) {
    // 4 sin^2(4m t0)/(ab) with sin^2(4m t0) = (1 - cos(8m t0))/2 and
    // cos(8m t0) = T_{4m}(cos 2t0).
    const Rat c2 = Rat(2) * base.u() - Rat(1);
    const Rat t = chebyshev_t(4 * (k - l), c2);
    return Rat(2) * (Rat(1) - t) / (e.a * e.b);
}

HyperbolicScaleReport hyperbolic_scale_check(const Ellipse& e,
                                             const PointSet& s) {
    HyperbolicScaleReport report;
    const auto g = rational_sqrt(e.a * e.b);
    report.applicable = g.has_value();
    if (!report.applicable) return report;
    report.scale = Rat(2) / *g;

    const Rat half(1, 2);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const auto d = rational_sqrt(pairwise_distance_sq(s[i], s[j]));
            if (!d) {
                report.violations.emplace_back(i, j);
                continue;
            }
            if (d->is_zero()) continue;
            if (!classify(*d * *g * half).hyperbolic)
                report.violations.emplace_back(i, j);
        }
    }
    report.ok = report.violations.empty();
    return report;
}

std::pair<Ellipse, EllipseBase> standard_ellipse(const Rat& a, const Rat& b) {
    if (!a.is_positive() || !b.is_positive())
        throw std::invalid_argument("standard_ellipse: semi-axes must be positive");
    Ellipse e(Rat(1) / square(a), Rat(1) / square(b));
    EllipseBase base(e, Rat(3) * a / Rat(5), Rat(4) * b / Rat(5));
    return {std::move(e), std::move(base)};
}

}  // namespace ratset
