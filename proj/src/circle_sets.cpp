#include "ratset/circle_sets.hpp"

#include <mpfr.h>

#include <functional>
#include <numeric>

namespace ratset {

PythParam::PythParam(Int a_, Int b_, Int t_)
    : a(std::move(a_)), b(std::move(b_)), t(std::move(t_)) {
    if (sgn(t) <= 0)
        throw std::invalid_argument("PythParam: hypotenuse must be positive");
    if (a * a + b * b != t * t)
        throw std::invalid_argument("PythParam: " + a.get_str() + "^2 + " +
                                    b.get_str() + "^2 != " + t.get_str() + "^2");
}

std::optional<PythParam> PythParam::from_legs(const Int& a, const Int& b) {
    const Int sum = a * a + b * b;
    if (sum == 0) return std::nullopt;
    auto t = integer_sqrt(sum);
    if (!t) return std::nullopt;
    return PythParam(a, b, *t);
}

namespace {

// Primitive generator pairs m > n >= 1, gcd(m, n) = 1, m - n odd, ascending
// (m+n, m). m+n odd already forces the opposite parity.
void enumerate_primitive_legs(
    unsigned bound, const std::function<void(const Int&, const Int&, const Int&)>& emit) {
    for (unsigned long s = 3; s + 1 <= 2UL * bound; s += 2) {
        for (unsigned long m = s / 2 + 1; m <= std::min<unsigned long>(bound, s - 1); ++m) {
            const unsigned long n = s - m;
            if (std::gcd(m, n) != 1) continue;
            const Int mm = Int(static_cast<long>(m));
            const Int nn = Int(static_cast<long>(n));
            emit(mm * mm - nn * nn, 2 * mm * nn, mm * mm + nn * nn);
        }
    }
}

void emit_variants(const Int& o, const Int& e, const Int& h,
                   const std::function<void(Int, Int, const Int&)>& emit) {
    emit(o, e, h);
    emit(-o, e, h);
    emit(o, -e, h);
    emit(-o, -e, h);
    emit(e, o, h);
    emit(-e, o, h);
    emit(e, -o, h);
    emit(-e, -o, h);
}

}  // namespace

std::vector<PythParam> gen_params(unsigned bound) {
    if (bound < 1) throw std::invalid_argument("gen_params: bound must be >= 1");
    std::vector<PythParam> out;
    for (unsigned long t = 1; t <= bound; ++t) {
        const Int tt(static_cast<long>(t));
        out.emplace_back(tt, 0, tt);
        out.emplace_back(-tt, 0, tt);
        out.emplace_back(Int(0), tt, tt);
        out.emplace_back(Int(0), -tt, tt);
    }
    enumerate_primitive_legs(bound, [&](const Int& o, const Int& e, const Int& h) {
        for (unsigned long d = 1; d <= bound; ++d) {
            const Int dd(static_cast<long>(d));
            emit_variants(dd * o, dd * e, dd * h, [&](Int a, Int b, const Int& t) {
                out.emplace_back(std::move(a), std::move(b), t);
            });
        }
    });
    return out;
}

CirclePoint point_of(const PythParam& p) {
    const Int t2 = p.t * p.t;
    return CirclePoint(Rat(p.a * p.a - p.b * p.b, t2), Rat(2 * p.a * p.b, t2));
}

Rat pair_distance(const PythParam& p, const PythParam& q) {
    return Rat(2 * abs(p.a * q.b - p.b * q.a), p.t * q.t);
}

bool in_dense_circle_set(const CirclePoint& p) { return has_rational_half(p); }

PointSet gen_dense_circle_set(unsigned bound) {
    if (bound < 1)
        throw std::invalid_argument("gen_dense_circle_set: bound must be >= 1");
    std::vector<QPoint> pts;
    // Axis pairs at t = 1: (1,0,1), (-1,0,1) map to (1,0); (0,1,1), (0,-1,1)
    // map to (-1,0).
    pts.push_back(QPoint({Rat(1), Rat(0)}));
    pts.push_back(QPoint({Rat(-1), Rat(0)}));
    enumerate_primitive_legs(bound, [&](const Int& o, const Int& e, const Int& h) {
        emit_variants(o, e, h, [&](Int a, Int b, const Int& t) {
            pts.push_back(point_of(PythParam(std::move(a), std::move(b), t)).to_qpoint());
        });
    });
    PointSet::Meta meta;
    meta["generator"] = "circle-gen";
    meta["bound"] = std::to_string(bound);
    return PointSet::dedup(2, pts, std::move(meta));
}

namespace {

struct TangentBoundary {
    Rat lo;
    Rat hi;
    bool exact = false;  // lo == hi, compare exactly
};

// Certified rational bracket of tan(2*pi*j/arcs) on the 1e-6 grid, via
// directed rounding at 128-bit precision. The angle is strictly inside
// (0, pi/2), so the tangent branch is fixed and monotone.
TangentBoundary bracket_tangent(int j, int arcs) {
    constexpr mpfr_prec_t kPrec = 128;
    constexpr unsigned long kGrid = 1000000;
    mpfr_t lo, hi;
    mpfr_init2(lo, kPrec);
    mpfr_init2(hi, kPrec);

    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_mul_ui(lo, lo, 2UL * static_cast<unsigned long>(j), MPFR_RNDD);
    mpfr_div_ui(lo, lo, static_cast<unsigned long>(arcs), MPFR_RNDD);
    mpfr_tan(lo, lo, MPFR_RNDD);
    mpfr_mul_ui(lo, lo, kGrid, MPFR_RNDD);

    mpfr_const_pi(hi, MPFR_RNDU);
    mpfr_mul_ui(hi, hi, 2UL * static_cast<unsigned long>(j), MPFR_RNDU);
    mpfr_div_ui(hi, hi, static_cast<unsigned long>(arcs), MPFR_RNDU);
    mpfr_tan(hi, hi, MPFR_RNDU);
    mpfr_mul_ui(hi, hi, kGrid, MPFR_RNDU);

    Int zlo, zhi;
    mpfr_get_z(zlo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(zhi.get_mpz_t(), hi, MPFR_RNDU);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return {Rat(zlo, Int(static_cast<long>(kGrid))),
            Rat(zhi, Int(static_cast<long>(kGrid))), false};
}

}  // namespace

ArcCoverageReport coverage_probe(const PointSet& s, int arcs) {
    if (arcs < 4 || arcs % 4 != 0)
        throw std::invalid_argument(
            "coverage_probe: arc count must be a positive multiple of 4, got " +
            std::to_string(arcs));
    if (s.dim() != 2)
        throw std::invalid_argument("coverage_probe: expected a planar set");

    const int quarter = arcs / 4;

    // Interior boundary tangents of the reduced quadrant [0, pi/2): local
    // boundary j sits at angle 2*pi*j/arcs. The tangent is rational only at
    // pi/4 (lo == hi == 1); everything else gets a certified bracket.
    std::vector<TangentBoundary> table;
    table.reserve(static_cast<std::size_t>(quarter) - 1);
    for (int j = 1; j < quarter; ++j) {
        if (quarter % 2 == 0 && j == quarter / 2)
            table.push_back({Rat(1), Rat(1), true});
        else
            table.push_back(bracket_tangent(j, arcs));
    }

    ArcCoverageReport report;
    report.arcs = arcs;
    std::vector<bool> hit(static_cast<std::size_t>(arcs), false);

    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        const CirclePoint p = CirclePoint::from_qpoint(s[idx]);
        // Reduce to the first quadrant: q is the quadrant, (c, sn) the
        // rotated point with c > 0, reduced angle in [0, pi/2).
        int q;
        Rat c, sn;
        if (p.c().is_positive() && !p.s().is_negative()) {
            q = 0;
            c = p.c();
            sn = p.s();
        } else if (!p.c().is_positive() && p.s().is_positive()) {
            q = 1;
            c = p.s();
            sn = -p.c();
        } else if (p.c().is_negative() && !p.s().is_positive()) {
            q = 2;
            c = -p.c();
            sn = -p.s();
        } else {
            q = 3;
            c = -p.s();
            sn = p.c();
        }
        const Rat tangent = sn / c;

        int local = 0;
        for (int j = 1; j < quarter; ++j) {
            const TangentBoundary& b = table[static_cast<std::size_t>(j) - 1];
            if (b.exact) {
                if (tangent >= b.lo)
                    local = j;
                else
                    break;
            } else if (tangent >= b.hi) {
                local = j;
            } else if (tangent <= b.lo) {
                break;
            } else {
                report.near_boundary.emplace_back(idx, q * quarter + j);
                break;
            }
        }
        hit[static_cast<std::size_t>(q * quarter + local)] = true;
    }

    for (int j = 0; j < arcs; ++j)
        if (!hit[static_cast<std::size_t>(j)]) report.empty_arcs.push_back(j);
    return report;
}

}  // namespace ratset
