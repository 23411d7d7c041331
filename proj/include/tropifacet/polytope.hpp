#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tropifacet/budget.hpp"
#include "tropifacet/geometry.hpp"
#include "tropifacet/trop_linalg.hpp"

namespace tropifacet {

/// Tropical polytope given by its (pairwise distinct) generators.
template <OrderedAbelianGroup G>
class TropicalPolytope {
  public:
    explicit TropicalPolytope(std::vector<ProjectivePoint<G>> generators)
        : gens_(std::move(generators)) {
        if (gens_.empty()) throw ValidationError("a polytope needs at least one generator");
        if (gens_.size() > IndexSet::kMaxUniverse)
            throw ValidationError("at most 64 generators are supported");
        for (const auto& g : gens_) require_same_dimension(gens_[0], g);
        for (size_t r = 0; r < gens_.size(); ++r)
            for (size_t s = r + 1; s < gens_.size(); ++s)
                if (gens_[r] == gens_[s])
                    throw ValidationError("generators " + std::to_string(r + 1) + " and " +
                                          std::to_string(s + 1) + " coincide projectively");
    }

    int dimension() const { return gens_[0].dimension(); }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const std::vector<ProjectivePoint<G>>& generators() const { return gens_; }
    const ProjectivePoint<G>& generator(int r) const { return gens_[static_cast<size_t>(r)]; }

  private:
    std::vector<ProjectivePoint<G>> gens_;
};

using PolytopeRat = TropicalPolytope<Rat>;
using PolytopeLex = TropicalPolytope<LexTriple>;

/// Type of a point: S_i lists the generators contained in the i-th sector.
struct TypeVector {
    std::vector<IndexSet> sets;

    friend bool operator==(const TypeVector& a, const TypeVector& b) { return a.sets == b.sets; }
    friend bool operator!=(const TypeVector& a, const TypeVector& b) { return !(a == b); }

    /// Componentwise subset: this type occurs within the cell of `other`.
    bool subset_of(const TypeVector& other) const {
        if (sets.size() != other.sets.size()) return false;
        for (size_t i = 0; i < sets.size(); ++i)
            if (!sets[i].subset_of(other.sets[i])) return false;
        return true;
    }
};

/// Residuation: the greatest point of P below x (coordinate-wise, up to
/// scaling). Fixed points of the projection are exactly the members of P.
template <OrderedAbelianGroup G>
ProjectivePoint<G> project_onto(const TropicalPolytope<G>& P, const ProjectivePoint<G>& x) {
    require_same_dimension(P.generator(0), x);
    const int n = P.dimension(), p = P.generator_count();
    std::vector<G> out;
    for (int r = 0; r < p; ++r) {
        const auto& v = P.generator(r);
        G lam = x[0] - v[0];
        for (int i = 1; i < n; ++i) {
            G d = x[i] - v[i];
            if (d < lam) lam = std::move(d);
        }
        if (r == 0) {
            out.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) out.push_back(lam + v[i]);
        } else {
            for (int i = 0; i < n; ++i) {
                G c = lam + v[i];
                if (out[static_cast<size_t>(i)] < c) out[static_cast<size_t>(i)] = std::move(c);
            }
        }
    }
    return ProjectivePoint<G>(std::move(out));
}

template <OrderedAbelianGroup G>
bool polytope_contains(const TropicalPolytope<G>& P, const ProjectivePoint<G>& x) {
    return project_onto(P, x) == x;
}

template <OrderedAbelianGroup G>
TypeVector type_of(const TropicalPolytope<G>& P, const ProjectivePoint<G>& a) {
    require_same_dimension(P.generator(0), a);
    const int n = P.dimension(), p = P.generator_count();
    TypeVector S;
    S.sets.resize(static_cast<size_t>(n));
    for (int r = 0; r < p; ++r) {
        const auto& v = P.generator(r);
        G best = v[0] - a[0];
        for (int i = 1; i < n; ++i) {
            G d = v[i] - a[i];
            if (best < d) best = std::move(d);
        }
        for (int i = 0; i < n; ++i)
            if (v[i] - a[i] == best) S.sets[static_cast<size_t>(i)].insert(r);
    }
    return S;
}

/// Dimension of the cell X_S: connected components of the coordinate graph
/// (edge {i,j} iff S_i and S_j intersect) minus one.
inline int cell_dimension(const TypeVector& S) {
    const int n = static_cast<int>(S.sets.size());
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<size_t>(start)] >= 0) continue;
        std::vector<int> stack{start};
        comp[static_cast<size_t>(start)] = components;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (comp[static_cast<size_t>(j)] >= 0) continue;
                if (!(S.sets[static_cast<size_t>(i)] & S.sets[static_cast<size_t>(j)]).empty()) {
                    comp[static_cast<size_t>(j)] = components;
                    stack.push_back(j);
                }
            }
        }
        ++components;
    }
    return components - 1;
}

struct ExtremePointReport {
    std::vector<bool> extreme;       // per generator
    std::vector<IndexSet> types;     // extremality types per generator
};

/// Marks generator r extreme of type i when no other generator lies in
/// S(v^r, i). The resulting flag is cross-checked against the independent
/// membership characterization (v^r in the hull of the others iff the
/// residuation projection fixes it); disagreement is an implementation bug.
template <OrderedAbelianGroup G>
ExtremePointReport extreme_points(const TropicalPolytope<G>& P) {
    const int n = P.dimension(), p = P.generator_count();
    ExtremePointReport rep;
    rep.extreme.resize(static_cast<size_t>(p));
    rep.types.resize(static_cast<size_t>(p));
    for (int r = 0; r < p; ++r) {
        IndexSet T;
        for (int i = 0; i < n; ++i) {
            bool other_in_sector = false;
            for (int s = 0; s < p && !other_in_sector; ++s)
                if (s != r && sector_contains(P.generator(r), i, P.generator(s)))
                    other_in_sector = true;
            if (!other_in_sector) T.insert(i);
        }
        bool is_extreme = !T.empty();

        bool member_of_rest = false;
        if (p > 1) {
            std::vector<ProjectivePoint<G>> others;
            others.reserve(static_cast<size_t>(p) - 1);
            for (int s = 0; s < p; ++s)
                if (s != r) others.push_back(P.generator(s));
            TropicalPolytope<G> rest(std::move(others));
            member_of_rest = polytope_contains(rest, P.generator(r));
        }
        if (is_extreme == member_of_rest)
            throw InternalError("extreme-point characterizations disagree on generator " +
                                std::to_string(r + 1));
        rep.extreme[static_cast<size_t>(r)] = is_extreme;
        rep.types[static_cast<size_t>(r)] = T;
    }
    return rep;
}

/// Pure iff every extreme generator has exactly one extremality type.
template <OrderedAbelianGroup G>
bool is_pure(const TropicalPolytope<G>& P) {
    auto rep = extreme_points(P);
    for (size_t r = 0; r < rep.extreme.size(); ++r)
        if (rep.extreme[r] && rep.types[r].size() != 1) return false;
    return true;
}

namespace detail {

/// Edges of the labeled tree encoded by a Pruefer sequence over n nodes.
inline std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) - 1);
    for (int x : seq) {
        int leaf = 0;
        while (deg[static_cast<size_t>(leaf)] != 1) ++leaf;
        edges.emplace_back(leaf, x);
        deg[static_cast<size_t>(leaf)] = 0;
        --deg[static_cast<size_t>(x)];
    }
    int u = -1;
    for (int i = 0; i < n; ++i)
        if (deg[static_cast<size_t>(i)] == 1) {
            if (u < 0) {
                u = i;
            } else {
                edges.emplace_back(u, i);
            }
        }
    return edges;
}

/// Propagation order (parent, child, edge slot) for a tree rooted at node 0.
inline std::vector<std::array<int, 3>> tree_propagation_order(
    const std::vector<std::pair<int, int>>& edges, int n) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<size_t>(edges[e].first)].push_back({edges[e].second, static_cast<int>(e)});
        adj[static_cast<size_t>(edges[e].second)].push_back({edges[e].first, static_cast<int>(e)});
    }
    std::vector<std::array<int, 3>> order;
    order.reserve(edges.size());
    std::vector<bool> visited(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    visited[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[static_cast<size_t>(u)]) {
            if (visited[static_cast<size_t>(w)]) continue;
            visited[static_cast<size_t>(w)] = true;
            order.push_back({u, w, e});
            stack.push_back(w);
        }
    }
    return order;
}

template <OrderedAbelianGroup G>
std::vector<ProjectivePoint<G>> enumerate_pseudovertices_impl(const TropicalPolytope<G>& P,
                                                              const Budget& budget) {
    const int n = P.dimension(), p = P.generator_count();
    if (n > budget.max_dimension || p > budget.max_generators)
        throw ResourceError("pseudovertex enumeration budget: n=" + std::to_string(n) + " p=" +
                            std::to_string(p) + " exceeds n<=" +
                            std::to_string(budget.max_dimension) + " p<=" +
                            std::to_string(budget.max_generators));
    std::int64_t trees = 1;
    for (int i = 0; i < n - 2; ++i) trees *= n;
    std::int64_t labelings = 1;
    for (int i = 0; i < n - 1; ++i) labelings *= p;
    if (trees > budget.max_candidates / labelings)
        throw ResourceError("pseudovertex enumeration budget: " + std::to_string(trees) + " trees x " +
                            std::to_string(labelings) + " labelings exceeds cap " +
                            std::to_string(budget.max_candidates));

    std::set<std::vector<G>> seen;
    std::set<std::vector<G>> found;

    std::vector<int> pruefer(static_cast<size_t>(std::max(0, n - 2)), 0);
    std::vector<int> labels(static_cast<size_t>(n - 1), 0);
    std::vector<G> a(static_cast<size_t>(n));

    bool trees_done = false;
    while (!trees_done) {
        const auto edges = pruefer_decode(pruefer, n);
        const auto order = tree_propagation_order(edges, n);
        std::fill(labels.begin(), labels.end(), 0);
        bool labels_done = false;
        while (!labels_done) {
            // Each edge {i,j} with label r pins a_j - a_i = v^r_j - v^r_i.
            a[0] = G{};
            for (const auto& [u, w, e] : order) {
                const auto& v = P.generator(labels[static_cast<size_t>(e)]);
                a[static_cast<size_t>(w)] = a[static_cast<size_t>(u)] + v[w] - v[u];
            }
            // The pinned relation must be realized: the edge's generator has
            // its residual maximum at both endpoints.
            bool consistent = true;
            for (size_t e = 0; e < edges.size() && consistent; ++e) {
                const auto& v = P.generator(labels[e]);
                const int i = edges[e].first;
                G ri = v[i] - a[static_cast<size_t>(i)];
                for (int k = 0; k < n; ++k) {
                    if (k == i) continue;
                    if (ri < v[k] - a[static_cast<size_t>(k)]) {
                        consistent = false;
                        break;
                    }
                }
            }
            if (consistent && seen.insert(a).second) {
                ProjectivePoint<G> cand(a);
                if (cell_dimension(type_of(P, cand)) == 0) found.insert(cand.coords());
            }
            // Odometer over labelings.
            labels_done = true;
            for (size_t i = 0; i < labels.size(); ++i) {
                if (++labels[i] < p) {
                    labels_done = false;
                    break;
                }
                labels[i] = 0;
            }
        }
        trees_done = true;
        for (size_t i = 0; i < pruefer.size(); ++i) {
            if (++pruefer[i] < n) {
                trees_done = false;
                break;
            }
            pruefer[i] = 0;
        }
    }

    std::vector<ProjectivePoint<G>> out;
    out.reserve(found.size());
    for (const auto& c : found) out.push_back(ProjectivePoint<G>(c));
    return out;
}

}  // namespace detail

/// All zero-dimensional cells of the natural cell decomposition, sorted
/// lexicographically on canonical coordinates.
template <OrderedAbelianGroup G>
std::vector<ProjectivePoint<G>> enumerate_pseudovertices(const TropicalPolytope<G>& P,
                                                         const Budget& budget = {}) {
    if constexpr (std::is_same_v<G, Rat>) {
        // Scaling all coordinates by a positive integer is a semiring
        // automorphism, so enumerate on integer data and scale back.
        using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                                  boost::multiprecision::et_off>;
        Int lcm_den(1);
        for (const auto& g : P.generators())
            for (const auto& c : g.coords())
                lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
        if (lcm_den == 1) return detail::enumerate_pseudovertices_impl(P, budget);
        const Rat scale(lcm_den);
        std::vector<PointRat> scaled;
        scaled.reserve(P.generators().size());
        for (const auto& g : P.generators()) {
            std::vector<Rat> c;
            c.reserve(g.coords().size());
            for (const auto& x : g.coords()) c.push_back(x * scale);
            scaled.push_back(PointRat(std::move(c)));
        }
        auto pv = detail::enumerate_pseudovertices_impl(PolytopeRat(std::move(scaled)), budget);
        std::vector<PointRat> out;
        out.reserve(pv.size());
        for (const auto& q : pv) {
            std::vector<Rat> c;
            c.reserve(q.coords().size());
            for (const auto& x : q.coords()) c.push_back(x / scale);
            out.push_back(PointRat(std::move(c)));
        }
        return out;
    } else {
        return detail::enumerate_pseudovertices_impl(P, budget);
    }
}

namespace detail {

/// Properties (i)-(iii) of the (I,j)-pseudovertex characterization.
inline bool ij_properties(const TypeVector& S, IndexSet I, int j, int p) {
    IndexSet covered;
    for (int i : I.to_vector()) covered = covered | S.sets[static_cast<size_t>(i)];
    if (covered != IndexSet::full(p)) return false;  // (i)

    const int n = static_cast<int>(S.sets.size());
    for (int k = 0; k < n; ++k) {  // (ii)
        if (I.contains(k)) continue;
        bool linked = false;
        for (int i : I.to_vector())
            if (!(S.sets[static_cast<size_t>(i)] & S.sets[static_cast<size_t>(k)]).empty()) {
                linked = true;
                break;
            }
        if (!linked) return false;
    }
    for (int i : I.to_vector()) {  // (iii)
        IndexSet rest;
        for (int h : I.to_vector())
            if (h != i) rest = rest | S.sets[static_cast<size_t>(h)];
        if ((S.sets[static_cast<size_t>(i)] & S.sets[static_cast<size_t>(j)]).minus(rest).empty())
            return false;
    }
    return true;
}

}  // namespace detail

template <OrderedAbelianGroup G>
bool is_Ij_pseudovertex(const TropicalPolytope<G>& P, const ProjectivePoint<G>& a, IndexSet I,
                        int j) {
    const int n = P.dimension();
    if (I.empty() || !I.subset_of(IndexSet::full(n)) || I == IndexSet::full(n))
        throw ValidationError("I must be a non-empty proper subset of the coordinates");
    if (j < 0 || j >= n || I.contains(j)) throw ValidationError("j must be a coordinate outside I");
    return detail::ij_properties(type_of(P, a), I, j, P.generator_count());
}

namespace detail {

template <OrderedAbelianGroup G>
void require_pure(const TropicalPolytope<G>& P, const ExtremePointReport& rep) {
    for (size_t r = 0; r < rep.extreme.size(); ++r) {
        if (!rep.extreme[r] || rep.types[r].size() == 1) continue;
        std::string types;
        for (int i : rep.types[r].to_vector()) types += (types.empty() ? "" : ",") + std::to_string(i + 1);
        throw PreconditionError("polytope is not pure: generator " + std::to_string(r + 1) +
                                " is extreme of types {" + types + "}");
    }
    (void)P;
}

template <OrderedAbelianGroup G>
std::vector<TropicalHalfSpace<G>> canonical_representation_from(
    const TropicalPolytope<G>& P, const std::vector<ProjectivePoint<G>>& pseudovertices) {
    const int n = P.dimension(), p = P.generator_count();
    std::set<TropicalHalfSpace<G>> result;
    for (const auto& a : pseudovertices) {
        const TypeVector S = type_of(P, a);
        const std::uint64_t full = IndexSet::full(n).mask();
        for (std::uint64_t m = 1; m < full; ++m) {
            IndexSet I = IndexSet::from_mask(m);
            for (int j = 0; j < n; ++j) {
                if (I.contains(j)) continue;
                if (detail::ij_properties(S, I, j, p)) {
                    result.insert(TropicalHalfSpace<G>(a, I));
                    break;
                }
            }
        }
    }
    return {result.begin(), result.end()};
}

}  // namespace detail

/// External representation of a pure polytope: the half-spaces H(a, I)
/// over all (I,j)-pseudovertices a. May contain superfluous half-spaces;
/// no minimization is attempted.
template <OrderedAbelianGroup G>
std::vector<TropicalHalfSpace<G>> canonical_representation(const TropicalPolytope<G>& P,
                                                           const Budget& budget = {}) {
    detail::require_pure(P, extreme_points(P));
    return detail::canonical_representation_from(P, enumerate_pseudovertices(P, budget));
}

/// The n-1 extreme points on the boundary of H(a, I) promised for a pure
/// polytope: for k outside I and j, a type-k extreme generator in S_k(a);
/// for i in I, a type-j extreme generator in (S_i & S_j) \ union of the
/// other S_h, h in I. Returns coordinate -> generator (0-based).
template <OrderedAbelianGroup G>
std::map<int, int> witness_extreme_points(const TropicalPolytope<G>& P,
                                          const ProjectivePoint<G>& a, IndexSet I, int j) {
    const auto rep = extreme_points(P);
    detail::require_pure(P, rep);
    if (!is_Ij_pseudovertex(P, a, I, j))
        throw PreconditionError("apex is not an (I,j)-pseudovertex for the given I, j");
    const int n = P.dimension(), p = P.generator_count();
    const TypeVector S = type_of(P, a);

    auto extreme_of_type = [&](int r, int k) {
        return rep.extreme[static_cast<size_t>(r)] && rep.types[static_cast<size_t>(r)].contains(k);
    };

    std::map<int, int> witness;
    for (int k = 0; k < n; ++k) {
        if (k == j || I.contains(k)) continue;
        int pick = -1;
        for (int r = 0; r < p && pick < 0; ++r)
            if (extreme_of_type(r, k) && S.sets[static_cast<size_t>(k)].contains(r)) pick = r;
        if (pick < 0)
            throw InternalError("no witness extreme point of type " + std::to_string(k + 1));
        witness[k] = pick;
    }
    for (int i : I.to_vector()) {
        IndexSet rest;
        for (int h : I.to_vector())
            if (h != i) rest = rest | S.sets[static_cast<size_t>(h)];
        IndexSet eligible =
            (S.sets[static_cast<size_t>(i)] & S.sets[static_cast<size_t>(j)]).minus(rest);
        int pick = -1;
        for (int r = 0; r < p && pick < 0; ++r)
            if (eligible.contains(r) && extreme_of_type(r, j)) pick = r;
        if (pick < 0)
            throw InternalError("no witness extreme point for sector " + std::to_string(i + 1));
        witness[i] = pick;
    }

    std::set<int> distinct;
    const TropicalHalfSpace<G> H(a, I);
    for (const auto& [k, r] : witness) {
        if (!distinct.insert(r).second) throw InternalError("witness generators are not distinct");
        if (!on_halfspace_boundary(H, P.generator(r)))
            throw InternalError("witness generator " + std::to_string(r + 1) +
                                " is not on the half-space boundary");
    }
    return witness;
}

}  // namespace tropifacet
