#include "ratset/exact_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace ratset {

std::optional<Int> integer_sqrt(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("integer_sqrt: negative input");
    if (n == 0 || n == 1) return n;
    // Start above the root: 2^ceil(bits/2) >= sqrt(n).
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int x;
    mpz_ui_pow_ui(x.get_mpz_t(), 2, static_cast<unsigned long>((bits + 1) / 2));
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    // x = floor(sqrt(n)); the exact check decides.
    if (x * x == n) return x;
    return std::nullopt;
}

bool is_perfect_square(const Int& n) {
    if (sgn(n) < 0) return false;
    return integer_sqrt(n).has_value();
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r.is_negative())
        throw std::domain_error("rational_sqrt: negative input");
    auto sn = integer_sqrt(r.num());
    if (!sn) return std::nullopt;
    auto sd = integer_sqrt(r.den());
    if (!sd) return std::nullopt;
    return Rat(*sn, *sd);
}

RationalClass classify(const Rat& r) {
    const Int p = ::abs(r.num());
    const Int& q = r.den();
    const Int p2 = p * p;
    const Int q2 = q * q;
    RationalClass c;
    c.elliptic = is_perfect_square(p2 + q2);
    c.hyperbolic = is_perfect_square(::abs(p2 - q2));
    return c;
}

bool operator<(const QPoint& a, const QPoint& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

std::string QPoint::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

Rat pairwise_distance_sq(const QPoint& p, const QPoint& q) {
    if (p.dim() != q.dim())
        throw std::invalid_argument("pairwise_distance_sq: dimension mismatch (" +
                                    std::to_string(p.dim()) + " vs " +
                                    std::to_string(q.dim()) + ")");
    Rat acc(0);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        Rat d = p[i] - q[i];
        acc += d * d;
    }
    return acc;
}

PointSet::PointSet(std::size_t dim, std::vector<QPoint> points, Meta meta)
    : dim_(dim), points_(std::move(points)), meta_(std::move(meta)) {
    if (dim_ == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
    std::set<QPoint> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].dim() != dim_)
            throw std::invalid_argument("PointSet: point " + std::to_string(i) +
                                        " has dimension " +
                                        std::to_string(points_[i].dim()) +
                                        ", expected " + std::to_string(dim_));
        if (!seen.insert(points_[i]).second)
            throw std::invalid_argument("PointSet: duplicate point at index " +
                                        std::to_string(i) + ": " +
                                        points_[i].to_string());
    }
}

PointSet PointSet::dedup(std::size_t dim, const std::vector<QPoint>& points,
                         Meta meta) {
    std::set<QPoint> seen;
    std::vector<QPoint> unique;
    unique.reserve(points.size());
    for (const QPoint& p : points)
        if (seen.insert(p).second) unique.push_back(p);
    return PointSet(dim, std::move(unique), std::move(meta));
}

std::optional<std::size_t> PointSet::index_of(const QPoint& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == p) return i;
    return std::nullopt;
}

PointSet PointSet::take_prefix(std::size_t n) const {
    if (n > points_.size())
        throw std::invalid_argument("take_prefix: asked for " + std::to_string(n) +
                                    " of " + std::to_string(points_.size()) +
                                    " points");
    std::vector<QPoint> pts(points_.begin(),
                            points_.begin() + static_cast<std::ptrdiff_t>(n));
    return PointSet(dim_, std::move(pts), meta_);
}

PointSet dilate(const PointSet& s, const Rat& factor) {
    if (factor.is_zero())
        throw std::invalid_argument("dilate: factor must be nonzero");
    std::vector<QPoint> out;
    out.reserve(s.size());
    for (const QPoint& p : s) {
        std::vector<Rat> coords;
        coords.reserve(p.dim());
        for (const Rat& c : p.coords()) coords.push_back(factor * c);
        out.push_back(QPoint(std::move(coords)));
    }
    return PointSet(s.dim(), std::move(out), s.meta());
}

PointSet translate(const PointSet& s, const QPoint& offset) {
    if (offset.dim() != s.dim())
        throw std::invalid_argument("translate: dimension mismatch");
    std::vector<QPoint> out;
    out.reserve(s.size());
    for (const QPoint& p : s) {
        std::vector<Rat> coords;
        coords.reserve(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i)
            coords.push_back(p[i] + offset[i]);
        out.push_back(QPoint(std::move(coords)));
    }
    return PointSet(s.dim(), std::move(out), s.meta());
}

namespace detail {

unsigned worker_count() {
    if (const char* env = std::getenv("RATSET_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v < 1) v = 1;
        if (v > 64) v = 64;
        return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::min(hw, 8u);
}

}  // namespace detail

RationalSetReport verify_rational_set(const PointSet& s) {
    const std::size_t n = s.size();
    RationalSetReport report;

    auto scan_rows = [&s](std::size_t row_begin, std::size_t row_end,
                          std::vector<std::pair<std::size_t, std::size_t>>& out) {
        for (std::size_t i = row_begin; i < row_end; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!rational_sqrt(pairwise_distance_sq(s[i], s[j])))
                    out.emplace_back(i, j);
    };

    const unsigned workers = detail::worker_count();
    if (workers <= 1 || n < 128) {
        scan_rows(0, n, report.violations);
    } else {
        // Contiguous row blocks of roughly equal pair counts; concatenating
        // block results in block order keeps the output sorted by (i, j).
        const std::size_t total_pairs = n * (n - 1) / 2;
        std::vector<std::size_t> splits{0};
        std::size_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += n - 1 - i;
            if (acc >= total_pairs / workers * splits.size() &&
                splits.size() < workers)
                splits.push_back(i + 1);
        }
        splits.push_back(n);
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> results(
            splits.size() - 1);
        std::vector<std::thread> threads;
        threads.reserve(results.size());
        for (std::size_t b = 0; b + 1 < splits.size(); ++b)
            threads.emplace_back(scan_rows, splits[b], splits[b + 1],
                                 std::ref(results[b]));
        for (auto& t : threads) t.join();
        for (auto& block : results)
            report.violations.insert(report.violations.end(), block.begin(),
                                     block.end());
    }
    report.ok = report.violations.empty();
    return report;
}

ScaledTypeReport verify_scaled_type(const PointSet& s, const QPoint& base,
                                    const Rat& scale, RationalType type) {
    if (base.dim() != s.dim())
        throw std::invalid_argument("verify_scaled_type: base dimension " +
                                    std::to_string(base.dim()) +
                                    " does not match set dimension " +
                                    std::to_string(s.dim()));
    if (!scale.is_positive())
        throw std::invalid_argument("verify_scaled_type: scale must be positive");

    ScaledTypeReport report;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto d = rational_sqrt(pairwise_distance_sq(base, s[i]));
        if (!d) {
            report.violations.push_back(i);
            continue;
        }
        if (d->is_zero()) continue;
        const RationalClass c = classify(*d / scale);
        const bool match =
            (type == RationalType::elliptic) ? c.elliptic : c.hyperbolic;
        if (!match) report.violations.push_back(i);
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace ratset
