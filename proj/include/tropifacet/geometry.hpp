#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropifacet/errors.hpp"
#include "tropifacet/rational.hpp"

namespace tropifacet {

/// Small set of 0-based indices backed by a 64-bit mask. Used both for
/// generator index sets S_i and for half-space coordinate sets I.
class IndexSet {
  public:
    static constexpr int kMaxUniverse = 64;

    IndexSet() = default;
    IndexSet(std::initializer_list<int> xs) {
        for (int x : xs) insert(x);
    }

    static IndexSet full(int n) {
        check_range(n - 1);
        return IndexSet(n == 64 ? ~0ull : (1ull << n) - 1);
    }
    static IndexSet from_mask(std::uint64_t m) { return IndexSet(m); }

    void insert(int i) {
        check_range(i);
        bits_ |= 1ull << i;
    }
    bool contains(int i) const { return i >= 0 && i < 64 && (bits_ >> i) & 1ull; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t mask() const { return bits_; }

    bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
    IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
    IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t m = bits_; m;) {
            int i = __builtin_ctzll(m);
            out.push_back(i);
            m &= m - 1;
        }
        return out;
    }

    friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(IndexSet a, IndexSet b) { return a.bits_ != b.bits_; }
    friend bool operator<(IndexSet a, IndexSet b) { return a.bits_ < b.bits_; }

  private:
    explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
    static void check_range(int i) {
        if (i < 0 || i >= kMaxUniverse) throw ValidationError("index set supports indices 0..63");
    }
    std::uint64_t bits_ = 0;
};

inline IndexSet complement(IndexSet s, int n) { return IndexSet::full(n).minus(s); }

/// Point of the tropical projective space over G, stored in canonical form:
/// the first coordinate is the group identity.
template <OrderedAbelianGroup G>
class ProjectivePoint {
  public:
    explicit ProjectivePoint(std::vector<G> coords) : c_(std::move(coords)) {
        if (c_.size() < 2) throw ValidationError("projective points need dimension >= 2");
        G base = c_[0];
        for (auto& x : c_) x = x - base;
    }

    int dimension() const { return static_cast<int>(c_.size()); }
    const G& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<G>& coords() const { return c_; }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.c_ < b.c_;
    }

  private:
    std::vector<G> c_;
};

using PointRat = ProjectivePoint<Rat>;
using PointLex = ProjectivePoint<LexTriple>;

/// pi1 applied coordinate-wise; the result is already canonical.
inline PointRat project1(const PointLex& p) {
    std::vector<Rat> c;
    c.reserve(p.coords().size());
    for (const auto& t : p.coords()) c.push_back(pi1(t));
    return PointRat(std::move(c));
}

template <OrderedAbelianGroup G>
void require_same_dimension(const ProjectivePoint<G>& a, const ProjectivePoint<G>& b) {
    if (a.dimension() != b.dimension())
        throw DimensionError("points have different dimensions");
}

/// x lies in the closed sector S(a,i): the i-th residual x_i - a_i
/// dominates every other residual.
template <OrderedAbelianGroup G>
bool sector_contains(const ProjectivePoint<G>& apex, int i, const ProjectivePoint<G>& x) {
    require_same_dimension(apex, x);
    const int n = apex.dimension();
    if (i < 0 || i >= n) throw ValidationError("sector index out of range");
    G ri = x[i] - apex[i];
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (ri < x[j] - apex[j]) return false;
    }
    return true;
}

/// Tropical half-space H(a, I): apex plus a non-empty proper subset of
/// coordinates (0-based).
template <OrderedAbelianGroup G>
class TropicalHalfSpace {
  public:
    TropicalHalfSpace(ProjectivePoint<G> apex, IndexSet I)
        : apex_(std::move(apex)), I_(I) {
        if (I_.empty() || !I_.subset_of(IndexSet::full(apex_.dimension())) ||
            I_ == IndexSet::full(apex_.dimension()))
            throw ValidationError("half-space index set must be a non-empty proper subset");
    }

    const ProjectivePoint<G>& apex() const { return apex_; }
    IndexSet indices() const { return I_; }
    int dimension() const { return apex_.dimension(); }

    friend bool operator==(const TropicalHalfSpace& a, const TropicalHalfSpace& b) {
        return a.I_ == b.I_ && a.apex_ == b.apex_;
    }
    friend bool operator<(const TropicalHalfSpace& a, const TropicalHalfSpace& b) {
        if (a.apex_ != b.apex_) return a.apex_ < b.apex_;
        return a.I_ < b.I_;
    }

  private:
    ProjectivePoint<G> apex_;
    IndexSet I_;
};

using HalfSpaceRat = TropicalHalfSpace<Rat>;
using HalfSpaceLex = TropicalHalfSpace<LexTriple>;

namespace detail {

// Residual maxima of x - a over I and over its complement.
template <OrderedAbelianGroup G>
std::pair<G, G> side_maxima(const TropicalHalfSpace<G>& h, const ProjectivePoint<G>& x) {
    require_same_dimension(h.apex(), x);
    const int n = h.dimension();
    bool have_in = false, have_out = false;
    G best_in{}, best_out{};
    for (int j = 0; j < n; ++j) {
        G r = x[j] - h.apex()[j];
        if (h.indices().contains(j)) {
            if (!have_in || best_in < r) best_in = r;
            have_in = true;
        } else {
            if (!have_out || best_out < r) best_out = r;
            have_out = true;
        }
    }
    return {best_in, best_out};
}

}  // namespace detail

template <OrderedAbelianGroup G>
bool halfspace_contains(const TropicalHalfSpace<G>& h, const ProjectivePoint<G>& x) {
    auto [in, out] = detail::side_maxima(h, x);
    bool by_maxima = !(in < out);
    // Equivalent sector form, cross-checked on every call.
    bool by_sectors = false;
    for (int i : h.indices().to_vector())
        if (sector_contains(h.apex(), i, x)) {
            by_sectors = true;
            break;
        }
    if (by_maxima != by_sectors)
        throw InternalError("half-space membership forms disagree");
    return by_maxima;
}

template <OrderedAbelianGroup G>
bool on_halfspace_boundary(const TropicalHalfSpace<G>& h, const ProjectivePoint<G>& x) {
    auto [in, out] = detail::side_maxima(h, x);
    return in == out;
}

}  // namespace tropifacet
