#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tropifacet/geometry.hpp"
#include "tropifacet/semiring.hpp"

namespace tropifacet {

/// Rectangular matrix of finite tropical scalars. Bottom entries are
/// rejected by construction via TropScalar inputs; the plain-G constructor
/// is finite by type.
template <OrderedAbelianGroup G>
class TropMatrix {
  public:
    TropMatrix(int rows, int cols, std::vector<G> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows_ < 1 || cols_ < 1 || e_.size() != static_cast<size_t>(rows_) * cols_)
            throw DimensionError("matrix shape does not match entry count");
    }

    TropMatrix(int rows, int cols, const std::vector<TropScalar<G>>& entries)
        : rows_(rows), cols_(cols) {
        e_.reserve(entries.size());
        for (const auto& t : entries) {
            if (t.is_bottom()) throw ValidationError("bottom entries are not allowed in matrices");
            e_.push_back(t.finite());
        }
        if (rows_ < 1 || cols_ < 1 || e_.size() != static_cast<size_t>(rows_) * cols_)
            throw DimensionError("matrix shape does not match entry count");
    }

    /// n x p matrix whose columns are the given points (canonical coordinates).
    static TropMatrix from_columns(const std::vector<ProjectivePoint<G>>& pts) {
        if (pts.empty()) throw DimensionError("need at least one column");
        int n = pts[0].dimension();
        for (const auto& p : pts) require_same_dimension(pts[0], p);
        std::vector<G> e;
        e.reserve(static_cast<size_t>(n) * pts.size());
        for (int i = 0; i < n; ++i)
            for (const auto& p : pts) e.push_back(p[i]);
        return TropMatrix(n, static_cast<int>(pts.size()), std::move(e));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const G& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    TropMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        std::vector<G> e;
        e.reserve(rows.size() * cols.size());
        for (int r : rows)
            for (int c : cols) e.push_back(at(r, c));
        return TropMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                          std::move(e));
    }

  private:
    int rows_, cols_;
    std::vector<G> e_;
};

namespace detail {

/// Tropical permanent with multiplicity of the optimum, by dynamic
/// programming over column subsets (row index = popcount - 1). Exact:
/// only group addition and comparisons are used. The multiplicity count
/// saturates at 2, which is all singularity detection needs.
template <OrderedAbelianGroup G>
std::pair<G, bool> tperm_with_uniqueness(const TropMatrix<G>& U, int max_k) {
    if (U.rows() != U.cols()) throw DimensionError("tropical permanent needs a square matrix");
    const int k = U.rows();
    if (k > max_k)
        throw ResourceError("permanent size " + std::to_string(k) + " exceeds budget " +
                            std::to_string(max_k));
    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    std::vector<G> best(full + 1);
    std::vector<std::uint8_t> mult(full + 1, 0);
    mult[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int row = __builtin_popcount(mask) - 1;
        bool first = true;
        for (std::uint32_t m = mask; m;) {
            const int c = __builtin_ctz(m);
            m &= m - 1;
            const std::uint32_t rest = mask & ~(1u << c);
            G cand = best[rest] + U.at(row, c);
            if (first || best[mask] < cand) {
                best[mask] = std::move(cand);
                mult[mask] = mult[rest];
                first = false;
            } else if (cand == best[mask]) {
                mult[mask] = static_cast<std::uint8_t>(std::min(2, mult[mask] + mult[rest]));
            }
        }
    }
    return {best[full], mult[full] < 2};
}

}  // namespace detail

/// Max over permutations sigma of sum_i u_{i,sigma(i)}.
template <OrderedAbelianGroup G>
G tperm(const TropMatrix<G>& U, int max_k = 8) {
    return detail::tperm_with_uniqueness(U, max_k).first;
}

/// True iff the tropical permanent is attained by at least two permutations.
template <OrderedAbelianGroup G>
bool is_tropically_singular(const TropMatrix<G>& U, int max_k = 8) {
    return !detail::tperm_with_uniqueness(U, max_k).second;
}

namespace detail {

template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

/// Points are in general position when every square submatrix of the
/// matrix whose columns are the points is tropically non-singular.
template <OrderedAbelianGroup G>
bool in_general_position(const std::vector<ProjectivePoint<G>>& points, int max_k = 8) {
    if (points.empty()) return true;
    const auto U = TropMatrix<G>::from_columns(points);
    const int n = U.rows(), p = U.cols();
    const int kmax = std::min(n, p);
    // 1x1 submatrices are never singular.
    for (int k = 2; k <= kmax; ++k) {
        bool ok = true;
        detail::for_each_combination(n, k, [&](const std::vector<int>& rows) {
            if (!ok) return;
            detail::for_each_combination(p, k, [&](const std::vector<int>& cols) {
                if (!ok) return;
                if (is_tropically_singular(U.submatrix(rows, cols), max_k)) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace tropifacet
