// Brute-force oracles kept deliberately independent of the library's
// elimination-based certificates: ranks come from enumerating Laplace
// minors, cosphericity from solving circumsphere systems by Cramer's rule.
#pragma once

#include "ratset/exact_core.hpp"

#include <algorithm>
#include <vector>

namespace ratset::testing {

inline Rat laplace_det(const std::vector<std::vector<Rat>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rat det(0);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Rat>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rat> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const Rat term = m[0][col] * laplace_det(minor);
        det += sign > 0 ? term : -term;
        sign = -sign;
    }
    return det;
}

/// Rank as the largest size of a nonzero minor, fully enumerated.
inline std::size_t minor_rank(const std::vector<std::vector<Rat>>& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t size = std::min(rows, cols); size >= 1; --size) {
        std::vector<bool> rmask(rows, false), cmask(cols, false);
        std::fill(rmask.begin(), rmask.begin() + static_cast<long>(size), true);
        do {
            std::fill(cmask.begin(), cmask.end(), false);
            std::fill(cmask.begin(), cmask.begin() + static_cast<long>(size), true);
            do {
                std::vector<std::vector<Rat>> sub;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (!rmask[r]) continue;
                    std::vector<Rat> row;
                    for (std::size_t c = 0; c < cols; ++c)
                        if (cmask[c]) row.push_back(m[r][c]);
                    sub.push_back(std::move(row));
                }
                if (!laplace_det(sub).is_zero()) return size;
            } while (std::prev_permutation(cmask.begin(), cmask.end()));
        } while (std::prev_permutation(rmask.begin(), rmask.end()));
    }
    return 0;
}

inline std::vector<std::vector<Rat>> difference_rows(const PointSet& s,
                                                     bool lift_norms) {
    std::vector<std::vector<Rat>> m;
    const QPoint& base = s[0];
    Rat base_norm(0);
    for (const Rat& c : base.coords()) base_norm += square(c);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::vector<Rat> row;
        for (std::size_t c = 0; c < s.dim(); ++c) row.push_back(s[i][c] - base[c]);
        if (lift_norms) {
            Rat norm(0);
            for (const Rat& v : s[i].coords()) norm += square(v);
            row.push_back(norm - base_norm);
        }
        m.push_back(std::move(row));
    }
    return m;
}

inline std::size_t oracle_affine_rank(const PointSet& s) {
    return minor_rank(difference_rows(s, false));
}

/// Circumsphere oracle: for each affinely independent (k+1)-subset solve
/// the sphere equations by Cramer's rule and test every point; when no
/// such subset exists the minor-rank consistency of the difference system
/// decides.
inline bool oracle_cospherical(const PointSet& s) {
    const std::size_t k = s.dim();
    const std::size_t n = s.size();
    auto norm_sq = [&](const QPoint& p) {
        Rat acc(0);
        for (const Rat& c : p.coords()) acc += square(c);
        return acc;
    };
    if (n >= k + 1) {
        std::vector<bool> mask(n, false);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(k + 1), true);
        do {
            std::vector<std::size_t> sel;
            for (std::size_t i = 0; i < n; ++i)
                if (mask[i]) sel.push_back(i);
            // System: u . x_i - v = |x_i|^2, unknowns (u, v).
            std::vector<std::vector<Rat>> a;
            std::vector<Rat> rhs;
            for (const std::size_t i : sel) {
                std::vector<Rat> row;
                for (std::size_t c = 0; c < k; ++c) row.push_back(s[i][c]);
                row.push_back(Rat(-1));
                a.push_back(std::move(row));
                rhs.push_back(norm_sq(s[i]));
            }
            const Rat det = laplace_det(a);
            if (det.is_zero()) continue;
            std::vector<Rat> sol;
            for (std::size_t var = 0; var <= k; ++var) {
                auto a_var = a;
                for (std::size_t r = 0; r <= k; ++r) a_var[r][var] = rhs[r];
                sol.push_back(laplace_det(a_var) / det);
            }
            for (std::size_t i = 0; i < n; ++i) {
                Rat lhs(0);
                for (std::size_t c = 0; c < k; ++c) lhs += sol[c] * s[i][c];
                lhs -= sol[k];
                if (lhs != norm_sq(s[i])) return false;
            }
            return true;
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return minor_rank(difference_rows(s, false)) ==
           minor_rank(difference_rows(s, true));
}

}  // namespace ratset::testing
