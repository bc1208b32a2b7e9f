#include "ratset/lifting.hpp"

#include "ratset/sphere_map.hpp"

namespace ratset {

LiftConfig::LiftConfig(Rat r0_, std::size_t target_dim_, unsigned base_bound_)
    : r0(std::move(r0_)), target_dim(target_dim_), base_bound(base_bound_) {
    if (!r0.is_positive())
        throw std::invalid_argument("LiftConfig: r0 must be positive");
    if (!rational_sqrt(Rat(1) + square(r0)))
        throw std::invalid_argument("LiftConfig: 1 + r0^2 = " +
                                    (Rat(1) + square(r0)).to_string() +
                                    " is not a rational square");
    if (target_dim < 2)
        throw std::invalid_argument("LiftConfig: target dimension must be >= 2");
    if (base_bound < 1)
        throw std::invalid_argument("LiftConfig: base bound must be >= 1");
}

PointSet lift_once(const PointSet& x, const Rat& r0) {
    if (!r0.is_positive() || !rational_sqrt(Rat(1) + square(r0)))
        throw std::invalid_argument(
            "lift_once: r0 must be positive with 1 + r0^2 a rational square");

    // X1 = {origin} union X, the origin first; it maps to the pole e.
    std::vector<QPoint> stage;
    stage.reserve(x.size() + 1);
    stage.push_back(QPoint::origin(x.dim()));
    for (const QPoint& p : x)
        if (!p.is_origin()) stage.push_back(p);

    std::vector<QPoint> out;
    out.reserve(stage.size());
    for (const QPoint& p : stage) {
        std::vector<Rat> scaled;
        scaled.reserve(p.dim());
        for (const Rat& c : p.coords()) scaled.push_back(r0 * c);
        out.push_back(phi_inv(QPoint(std::move(scaled))).to_qpoint());
    }

    PointSet::Meta meta = x.meta();
    meta["lift_r0"] = r0.to_string();
    PointSet result(x.dim() + 1, std::move(out), std::move(meta));

    const RationalSetReport rep = verify_rational_set(result);
    if (!rep.ok)
        throw LiftError(rep.violations.front().first,
                        rep.violations.front().second);
    return result;
}

PointSet build_rational_set(const LiftConfig& cfg) {
    PointSet cur = gen_dense_circle_set(cfg.base_bound);
    while (cur.dim() < cfg.target_dim) cur = lift_once(cur, cfg.r0);

    // The ambient origin lies on no sphere through the unit-sphere points
    // and off their affine span's deficiency; adjoin it first.
    std::vector<QPoint> pts;
    pts.reserve(cur.size() + 1);
    pts.push_back(QPoint::origin(cur.dim()));
    for (const QPoint& p : cur) pts.push_back(p);

    PointSet::Meta meta;
    meta["generator"] = "lift";
    meta["dim"] = std::to_string(cfg.target_dim);
    meta["bound"] = std::to_string(cfg.base_bound);
    meta["r0"] = cfg.r0.to_string();
    PointSet out(cur.dim(), std::move(pts), std::move(meta));

    const RationalSetReport rep = verify_rational_set(out);
    if (!rep.ok)
        throw LiftError(rep.violations.front().first,
                        rep.violations.front().second);

    out.meta()["rank"] = std::to_string(affine_rank(out));
    out.meta()["cospherical"] = is_cospherical(out) ? "true" : "false";
    return out;
}

PointSet integral_set(const PointSet& x) {
    const RationalSetReport rep = verify_rational_set(x);
    if (!rep.ok)
        throw std::invalid_argument(
            "integral_set: input is not a rational set; first failing pair (" +
            std::to_string(rep.violations.front().first) + ", " +
            std::to_string(rep.violations.front().second) + ")");

    Int lcm_den(1);
    for (const QPoint& p : x)
        for (const Rat& c : p.coords())
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                    c.den().get_mpz_t());

    const Rat scale(lcm_den);
    std::vector<QPoint> out;
    out.reserve(x.size());
    for (const QPoint& p : x) {
        std::vector<Rat> coords;
        coords.reserve(p.dim());
        for (const Rat& c : p.coords()) coords.push_back(c * scale);
        out.push_back(QPoint(std::move(coords)));
    }

    PointSet::Meta meta = x.meta();
    meta["scale_lcm"] = lcm_den.get_str();
    PointSet result(x.dim(), std::move(out), std::move(meta));
    // Certificates describe this output, not the set it was cut from.
    result.meta()["rank"] = std::to_string(affine_rank(result));
    if (result.size() >= 2)
        result.meta()["cospherical"] = is_cospherical(result) ? "true" : "false";
    return result;
}

namespace {

// Fraction-free (Bareiss) elimination rank of an integer matrix. Entries
// stay determinants of submatrices, so the division below is exact; the
// remainder check turns any violation into a loud failure.
std::size_t int_matrix_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Int num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                            prev.get_mpz_t());
                if (sgn(rem) != 0)
                    throw std::logic_error("int_matrix_rank: inexact division");
                m[r][c] = std::move(q);
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// Clears denominators row by row (rank-invariant) and runs Bareiss.
std::size_t rational_matrix_rank(const std::vector<std::vector<Rat>>& m) {
    std::vector<std::vector<Int>> z;
    z.reserve(m.size());
    for (const auto& row : m) {
        Int l(1);
        for (const Rat& v : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        std::vector<Int> zr;
        zr.reserve(row.size());
        for (const Rat& v : row) zr.push_back(v.num() * (l / v.den()));
        z.push_back(std::move(zr));
    }
    return int_matrix_rank(std::move(z));
}

std::vector<std::vector<Rat>> difference_matrix(const PointSet& x,
                                                bool lift_norms) {
    std::vector<std::vector<Rat>> m;
    if (x.size() < 2) return m;
    const QPoint& base = x[0];
    Rat base_norm(0);
    for (const Rat& c : base.coords()) base_norm += square(c);
    m.reserve(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        std::vector<Rat> row;
        row.reserve(x.dim() + (lift_norms ? 1 : 0));
        for (std::size_t c = 0; c < x.dim(); ++c)
            row.push_back(x[i][c] - base[c]);
        if (lift_norms) {
            Rat norm(0);
            for (const Rat& v : x[i].coords()) norm += square(v);
            row.push_back(norm - base_norm);
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

std::size_t affine_rank(const PointSet& x) {
    if (x.size() == 0) throw std::invalid_argument("affine_rank: empty set");
    return rational_matrix_rank(difference_matrix(x, false));
}

bool is_cospherical(const PointSet& x) {
    if (x.size() < 2)
        throw std::invalid_argument("is_cospherical: need at least 2 points");
    // Consistency of the circumsphere system: appending the lifted norm
    // column must not raise the rank. A raised rank with full spatial rank
    // means no sphere; with deficient spatial rank it means the points sit
    // in a hyperplane slice no sphere can cut them out of.
    const std::size_t base_rank = rational_matrix_rank(difference_matrix(x, false));
    const std::size_t lifted_rank = rational_matrix_rank(difference_matrix(x, true));
    return base_rank == lifted_rank;
}

}  // namespace ratset
