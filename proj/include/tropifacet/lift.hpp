#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropifacet/polytope.hpp"
#include "tropifacet/series.hpp"

namespace tropifacet {

namespace detail {

inline std::string subset_string(IndexSet s) {
    std::string out = "{";
    for (int i : s.to_vector()) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
    return out + "}";
}

}  // namespace detail

/// Cone over the series field whose coordinate-wise valuations realize a
/// tropical polytope. Every generator coordinate is a positive series.
template <OrderedAbelianGroup G>
class LiftedCone {
  public:
    LiftedCone(TropicalPolytope<G> tropical, std::vector<SeriesVector<G>> generators)
        : trop_(std::move(tropical)), gens_(std::move(generators)) {
        const int n = trop_.dimension(), p = trop_.generator_count();
        if (static_cast<int>(gens_.size()) != p)
            throw ValidationError("lift needs one series vector per tropical generator");
        for (int r = 0; r < p; ++r) {
            const auto& row = gens_[static_cast<size_t>(r)];
            if (static_cast<int>(row.size()) != n)
                throw ValidationError("lift generator " + std::to_string(r + 1) +
                                      " has wrong dimension");
            std::vector<G> vals;
            vals.reserve(row.size());
            for (int i = 0; i < n; ++i) {
                if (sign(row[static_cast<size_t>(i)]) <= 0)
                    throw ValidationError("lift entry (" + std::to_string(r + 1) + "," +
                                          std::to_string(i + 1) + ") is not a positive series");
                vals.push_back(valuation(row[static_cast<size_t>(i)]).finite());
            }
            const ProjectivePoint<G> vp(std::move(vals));
            if (vp != trop_.generator(r)) {
                for (int i = 0; i < n; ++i)
                    if (vp[i] != trop_.generator(r)[i])
                        throw ValidationError(
                            "lift entry (" + std::to_string(r + 1) + "," + std::to_string(i + 1) +
                            ") has the wrong valuation for tropical generator " +
                            std::to_string(r + 1));
            }
        }
    }

    const TropicalPolytope<G>& tropical() const { return trop_; }
    const std::vector<SeriesVector<G>>& generators() const { return gens_; }
    const SeriesVector<G>& generator(int r) const { return gens_[static_cast<size_t>(r)]; }
    int dimension() const { return trop_.dimension(); }
    int generator_count() const { return trop_.generator_count(); }

  private:
    TropicalPolytope<G> trop_;
    std::vector<SeriesVector<G>> gens_;
};

/// Monomial lift: generator r, coordinate i is t^(-v^r_i).
template <OrderedAbelianGroup G>
LiftedCone<G> canonical_lift(const TropicalPolytope<G>& P) {
    std::vector<SeriesVector<G>> rows;
    rows.reserve(static_cast<size_t>(P.generator_count()));
    for (const auto& v : P.generators()) {
        SeriesVector<G> row;
        row.reserve(static_cast<size_t>(P.dimension()));
        for (const auto& c : v.coords()) row.push_back(monomial(-c, Rat(1)));
        rows.push_back(std::move(row));
    }
    return LiftedCone<G>(P, std::move(rows));
}

/// Wraps user-provided series vectors as a lift, validating positivity and
/// the valuation round trip.
template <OrderedAbelianGroup G>
LiftedCone<G> custom_lift(const TropicalPolytope<G>& P, std::vector<SeriesVector<G>> rows) {
    return LiftedCone<G>(P, std::move(rows));
}

/// Normal of the hyperplane through n-1 column vectors:
/// f_i = (-1)^(i+1) det(columns with row i deleted). Orthogonality to every
/// column is asserted exactly.
template <OrderedAbelianGroup G>
SeriesVector<G> cofactor_normal(const std::vector<SeriesVector<G>>& columns, int max_k = 6) {
    if (columns.empty()) throw DimensionError("cofactor normal needs at least one column");
    const int n = static_cast<int>(columns[0].size());
    if (static_cast<int>(columns.size()) != n - 1)
        throw DimensionError("cofactor normal needs n-1 columns of dimension n");
    for (const auto& c : columns)
        if (static_cast<int>(c.size()) != n) throw DimensionError("column dimension mismatch");

    SeriesVector<G> f;
    f.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<SeriesVector<G>> minor;
        minor.reserve(static_cast<size_t>(n) - 1);
        for (int row = 0; row < n; ++row) {
            if (row == i) continue;
            SeriesVector<G> mrow;
            mrow.reserve(columns.size());
            for (const auto& col : columns) mrow.push_back(col[static_cast<size_t>(row)]);
            minor.push_back(std::move(mrow));
        }
        FiniteSeries<G> d = determinant(minor, max_k);
        f.push_back(i % 2 == 0 ? d : -d);
    }
    for (const auto& col : columns)
        if (!dot(f, col).is_zero()) throw InternalError("cofactor normal is not orthogonal");
    return f;
}

/// Simplicial facet of a lifted cone: the n-1 generators spanning it and a
/// normal oriented so that f . v^r >= 0 for every generator, with equality
/// exactly on the support.
template <OrderedAbelianGroup G>
struct Facet {
    IndexSet support;
    SeriesVector<G> normal;
};

namespace detail {

template <OrderedAbelianGroup G>
std::vector<SeriesVector<G>> pick_columns(const LiftedCone<G>& L, const std::vector<int>& which) {
    std::vector<SeriesVector<G>> cols;
    cols.reserve(which.size());
    for (int r : which) cols.push_back(L.generator(r));
    return cols;
}

template <OrderedAbelianGroup G>
void verify_series_general_position(const LiftedCone<G>& L, int max_k) {
    const int n = L.dimension(), p = L.generator_count();
    detail::for_each_combination(p, n, [&](const std::vector<int>& cols) {
        std::vector<SeriesVector<G>> m(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            m[static_cast<size_t>(i)].reserve(cols.size());
            for (int r : cols) m[static_cast<size_t>(i)].push_back(L.generator(r)[static_cast<size_t>(i)]);
        }
        if (determinant(m, max_k).is_zero()) {
            IndexSet bad;
            for (int r : cols) bad.insert(r);
            throw DegeneracyError("lift generators are not in general position: columns " +
                                  subset_string(bad) + " have a zero minor");
        }
    });
}

/// Cofactor normal of a candidate support, oriented (if possible) so the
/// remaining generators land on the positive side. Returns the oriented
/// normal, or nothing when the signs are mixed (not a facet).
template <OrderedAbelianGroup G>
std::optional<SeriesVector<G>> oriented_facet_normal(const LiftedCone<G>& L,
                                                     const std::vector<int>& support, int max_k) {
    IndexSet R;
    for (int r : support) R.insert(r);
    SeriesVector<G> f = cofactor_normal(pick_columns(L, support), max_k);
    for (const auto& fi : f)
        if (fi.is_zero())
            throw DegeneracyError("degenerate support " + subset_string(R) +
                                  ": a cofactor vanishes");
    int orientation = 0;
    for (int r = 0; r < L.generator_count(); ++r) {
        if (R.contains(r)) continue;
        const int s = sign(dot(f, L.generator(r)));
        if (s == 0)
            throw DegeneracyError("degenerate support " + subset_string(R) + ": generator " +
                                  std::to_string(r + 1) + " lies on its hyperplane");
        if (orientation == 0) orientation = s;
        if (s != orientation) return std::nullopt;
    }
    if (orientation < 0)
        for (auto& fi : f) fi = -fi;
    return f;
}

}  // namespace detail

/// All facets of a lifted cone with generators in general position over
/// the series field (verified up front). Every facet is simplicial: it is
/// spanned by n-1 generators, so the (n-1)-subsets are tested exhaustively.
template <OrderedAbelianGroup G>
std::vector<Facet<G>> enumerate_facets(const LiftedCone<G>& L, const Budget& budget = {}) {
    const int n = L.dimension(), p = L.generator_count();
    if (p < n)
        throw PreconditionError("facet enumeration needs at least as many generators as the dimension");
    detail::verify_series_general_position(L, budget.max_determinant_size);

    std::vector<Facet<G>> facets;
    detail::for_each_combination(p, n - 1, [&](const std::vector<int>& support) {
        auto f = detail::oriented_facet_normal(L, support, budget.max_determinant_size);
        if (!f) return;
        IndexSet R;
        for (int r : support) R.insert(r);
        facets.push_back(Facet<G>{R, std::move(*f)});
    });
    return facets;  // combination order is ascending support order
}

/// Image of the facet-defining half-space under the valuation map:
/// apex from the negated valuations of the normal, I from its positive
/// coordinates.
template <OrderedAbelianGroup G>
TropicalHalfSpace<G> tropicalize_facet(const Facet<G>& F) {
    std::vector<G> apex;
    IndexSet I;
    apex.reserve(F.normal.size());
    for (size_t i = 0; i < F.normal.size(); ++i) {
        if (F.normal[i].is_zero())
            throw DegeneracyError("facet normal has a zero coordinate");
        apex.push_back(F.normal[i].least_exponent());
        if (sign(F.normal[i]) > 0) I.insert(static_cast<int>(i));
    }
    return TropicalHalfSpace<G>(ProjectivePoint<G>(std::move(apex)), I);
}

/// Tropicalization of a perturbed-lift facet directly into the unperturbed
/// space, using the sign and first-level valuation the mu/nu instantiation
/// would have.
inline TropicalHalfSpace<Rat> tropicalize_facet_projected(const Facet<LexTriple>& F) {
    std::vector<Rat> apex;
    IndexSet I;
    apex.reserve(F.normal.size());
    for (size_t i = 0; i < F.normal.size(); ++i) {
        auto [s, val] = project_series(F.normal[i]);
        if (s == 0) throw DegeneracyError("facet normal has a zero coordinate");
        apex.push_back(-val.finite());
        if (s > 0) I.insert(static_cast<int>(i));
    }
    return TropicalHalfSpace<Rat>(ProjectivePoint<Rat>(std::move(apex)), I);
}

template <OrderedAbelianGroup G>
struct FacetCheck {
    bool is_facet = false;
    std::optional<TropicalHalfSpace<G>> halfspace;
};

/// Facet characterization: R spans a facet iff some half-space contains the
/// tropical polytope with the R generators on its boundary. On success the
/// half-space is returned and both conditions are asserted with the
/// tropical predicates.
template <OrderedAbelianGroup G>
FacetCheck<G> facet_characterization_check(const TropicalPolytope<G>& P, const LiftedCone<G>& L,
                                           IndexSet R, const Budget& budget = {}) {
    const int n = P.dimension(), p = P.generator_count();
    if (L.generator_count() != p || L.dimension() != n)
        throw DimensionError("lift does not match the polytope");
    if (p < n)
        throw PreconditionError("facet characterization needs at least as many generators as the dimension");
    if (R.size() != n - 1 || !R.subset_of(IndexSet::full(p)))
        throw ValidationError("support must be an (n-1)-subset of the generators");
    if (!in_general_position(P.generators(), budget.max_permanent_size))
        throw PreconditionError("tropical generators are not in general position");

    auto f = detail::oriented_facet_normal(L, R.to_vector(), budget.max_determinant_size);
    if (!f) return {};
    TropicalHalfSpace<G> H = tropicalize_facet(Facet<G>{R, *f});
    for (int r = 0; r < p; ++r)
        if (!halfspace_contains(H, P.generator(r)))
            throw InternalError("facet half-space misses generator " + std::to_string(r + 1));
    for (int r : R.to_vector())
        if (!on_halfspace_boundary(H, P.generator(r)))
            throw InternalError("facet support generator " + std::to_string(r + 1) +
                                " is not on the boundary");
    return {true, std::move(H)};
}

}  // namespace tropifacet
