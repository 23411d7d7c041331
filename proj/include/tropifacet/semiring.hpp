#pragma once

#include <optional>
#include <utility>

#include "tropifacet/rational.hpp"

namespace tropifacet {

/// Element of the tropical semiring over a value group G: either a finite
/// group element or bottom. operator+ is max under the group order,
/// operator* the group law; bottom is the additive identity and absorbs
/// under multiplication.
template <OrderedAbelianGroup G>
class TropScalar {
  public:
    TropScalar() = default;  // bottom
    TropScalar(G g) : v_(std::move(g)) {}

    static TropScalar bottom() { return TropScalar(); }

    bool is_bottom() const { return !v_.has_value(); }
    const G& finite() const {
        if (!v_) throw Error("bottom tropical scalar has no finite value");
        return *v_;
    }

    /// Multiplicative (group) inverse of a finite value.
    TropScalar inv() const { return TropScalar(-finite()); }

    friend TropScalar operator+(const TropScalar& x, const TropScalar& y) {
        if (x.is_bottom()) return y;
        if (y.is_bottom()) return x;
        return *x.v_ < *y.v_ ? y : x;
    }
    friend TropScalar operator*(const TropScalar& x, const TropScalar& y) {
        if (x.is_bottom() || y.is_bottom()) return bottom();
        return TropScalar(*x.v_ + *y.v_);
    }

    friend bool operator==(const TropScalar& x, const TropScalar& y) {
        return x.v_ == y.v_;
    }
    friend bool operator!=(const TropScalar& x, const TropScalar& y) { return !(x == y); }
    friend bool operator<(const TropScalar& x, const TropScalar& y) {
        if (x.is_bottom()) return !y.is_bottom();
        if (y.is_bottom()) return false;
        return *x.v_ < *y.v_;
    }
    friend bool operator<=(const TropScalar& x, const TropScalar& y) { return !(y < x); }

  private:
    std::optional<G> v_;
};

using TropRat = TropScalar<Rat>;
using TropLex = TropScalar<LexTriple>;

}  // namespace tropifacet
