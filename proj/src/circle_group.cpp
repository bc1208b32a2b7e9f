#include "ratset/circle_group.hpp"

namespace ratset {

CirclePoint CirclePoint::from_qpoint(const QPoint& p) {
    if (p.dim() != 2)
        throw std::invalid_argument("CirclePoint: expected dimension 2, got " +
                                    std::to_string(p.dim()));
    return CirclePoint(p[0], p[1]);
}

CirclePoint compose(const CirclePoint& p, const CirclePoint& q) {
    return CirclePoint(p.c() * q.c() - p.s() * q.s(),
                       p.s() * q.c() + p.c() * q.s());
}

CirclePoint inverse(const CirclePoint& p) { return CirclePoint(p.c(), -p.s()); }

CirclePoint power(const CirclePoint& p, long n) {
    CirclePoint base = n < 0 ? inverse(p) : p;
    unsigned long e = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CirclePoint acc = CirclePoint::identity();
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        e >>= 1;
        if (e) base = compose(base, base);
    }
    return acc;
}

std::optional<CirclePoint> halve(const CirclePoint& p) {
    const Rat half_cos_sq = (Rat(1) + p.c()) / Rat(2);
    const Rat half_sin_sq = (Rat(1) - p.c()) / Rat(2);
    auto x = rational_sqrt(half_cos_sq);
    if (!x) return std::nullopt;
    auto y = rational_sqrt(half_sin_sq);
    if (!y) return std::nullopt;
    // x, y >= 0 here; the half doubles back to cosine p.c() for any signs,
    // and the sine of the double is 2xy, so align its sign with p.s().
    // x = 0 forces p = (-1, 0); the nonnegative-sine tie-break applies.
    Rat yy = p.s().is_negative() ? -*y : *y;
    return CirclePoint(*x, std::move(yy));
}

bool has_rational_half(const CirclePoint& p) { return halve(p).has_value(); }

bool is_root_of_unity(const CirclePoint& p) {
    const Rat zero(0), one(1);
    return (abs(p.c()) == one && p.s() == zero) ||
           (p.c() == zero && abs(p.s()) == one);
}

}  // namespace ratset
