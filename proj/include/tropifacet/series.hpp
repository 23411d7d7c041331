#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropifacet/semiring.hpp"

namespace tropifacet {

/// Real Hahn series with finite support over the value group G: a finite
/// formal sum of non-zero rational coefficients at exponents in G. The
/// empty sum is the zero series.
template <OrderedAbelianGroup G>
class FiniteSeries {
  public:
    FiniteSeries() = default;

    static FiniteSeries zero() { return {}; }
    static FiniteSeries one() { return monomial(G{}, Rat(1)); }
    static FiniteSeries monomial(G exponent, Rat coefficient) {
        FiniteSeries s;
        if (coefficient != 0) s.t_.emplace(std::move(exponent), std::move(coefficient));
        return s;
    }

    bool is_zero() const { return t_.empty(); }
    size_t support_size() const { return t_.size(); }
    const std::map<G, Rat>& terms() const { return t_; }

    /// Least exponent and its coefficient (the leading term).
    const G& least_exponent() const {
        if (t_.empty()) throw Error("zero series has no support");
        return t_.begin()->first;
    }
    const Rat& leading_coefficient() const {
        if (t_.empty()) throw Error("zero series has no support");
        return t_.begin()->second;
    }

    friend FiniteSeries operator+(const FiniteSeries& x, const FiniteSeries& y) {
        FiniteSeries out = x;
        for (const auto& [e, c] : y.t_) out.add_term(e, c);
        return out;
    }
    friend FiniteSeries operator-(const FiniteSeries& x, const FiniteSeries& y) {
        FiniteSeries out = x;
        for (const auto& [e, c] : y.t_) out.add_term(e, -c);
        return out;
    }
    FiniteSeries operator-() const {
        FiniteSeries out;
        for (const auto& [e, c] : t_) out.t_.emplace(e, -c);
        return out;
    }
    friend FiniteSeries operator*(const FiniteSeries& x, const FiniteSeries& y) {
        FiniteSeries out;
        for (const auto& [ex, cx] : x.t_)
            for (const auto& [ey, cy] : y.t_) out.add_term(ex + ey, cx * cy);
        return out;
    }

    friend bool operator==(const FiniteSeries& x, const FiniteSeries& y) { return x.t_ == y.t_; }
    friend bool operator!=(const FiniteSeries& x, const FiniteSeries& y) { return !(x == y); }

  private:
    void add_term(const G& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    std::map<G, Rat> t_;
};

using SeriesRat = FiniteSeries<Rat>;
using SeriesLex = FiniteSeries<LexTriple>;

template <OrderedAbelianGroup G>
using SeriesVector = std::vector<FiniteSeries<G>>;

/// Bottom for the zero series, otherwise the group inverse of the least
/// exponent.
template <OrderedAbelianGroup G>
TropScalar<G> valuation(const FiniteSeries<G>& x) {
    if (x.is_zero()) return TropScalar<G>::bottom();
    return TropScalar<G>(-x.least_exponent());
}

/// Sign of the leading coefficient; 0 for the zero series.
template <OrderedAbelianGroup G>
int sign(const FiniteSeries<G>& x) {
    if (x.is_zero()) return 0;
    return x.leading_coefficient() > 0 ? 1 : -1;
}

template <OrderedAbelianGroup G>
bool is_positive(const FiniteSeries<G>& x) {
    return sign(x) > 0;
}

/// Total order of the Hahn series field: x >= y iff x - y is positive or zero.
template <OrderedAbelianGroup G>
int compare(const FiniteSeries<G>& x, const FiniteSeries<G>& y) {
    return sign(x - y);
}

template <OrderedAbelianGroup G>
FiniteSeries<G> monomial(const G& e, const Rat& c) {
    return FiniteSeries<G>::monomial(e, c);
}

template <OrderedAbelianGroup G>
FiniteSeries<G> dot(const SeriesVector<G>& x, const SeriesVector<G>& y) {
    if (x.size() != y.size()) throw DimensionError("dot product needs equal lengths");
    FiniteSeries<G> acc;
    for (size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
    return acc;
}

/// Exact determinant over the series ring by division-free cofactor
/// expansion; minors are memoized on the column subset.
template <OrderedAbelianGroup G>
FiniteSeries<G> determinant(const std::vector<SeriesVector<G>>& M, int max_k = 6) {
    const int k = static_cast<int>(M.size());
    if (k == 0) return FiniteSeries<G>::one();
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != k) throw DimensionError("determinant needs a square matrix");
    if (k > max_k)
        throw ResourceError("determinant size " + std::to_string(k) + " exceeds budget " +
                            std::to_string(max_k));

    const std::uint32_t full = (1u << k) - 1;
    std::vector<std::optional<FiniteSeries<G>>> memo(full + 1);
    memo[0] = FiniteSeries<G>::one();

    auto solve = [&](auto&& self, std::uint32_t cols) -> const FiniteSeries<G>& {
        if (memo[cols]) return *memo[cols];
        const int row = k - __builtin_popcount(cols);
        FiniteSeries<G> acc;
        int pos = 0;
        for (std::uint32_t m = cols; m; ++pos) {
            const int c = __builtin_ctz(m);
            m &= m - 1;
            const auto& minor = self(self, cols & ~(1u << c));
            FiniteSeries<G> term = M[static_cast<size_t>(row)][static_cast<size_t>(c)] * minor;
            acc = (pos % 2 == 0) ? acc + term : acc - term;
        }
        memo[cols] = std::move(acc);
        return *memo[cols];
    };
    return solve(solve, full);
}

/// Sign and first-level valuation that the mu/nu-instantiated series has
/// for all sufficiently small 0 < mu << nu << 1: the lexicographic sign
/// and pi1 of the valuation.
inline std::pair<int, TropScalar<Rat>> project_series(const FiniteSeries<LexTriple>& x) {
    if (x.is_zero()) return {0, TropScalar<Rat>::bottom()};
    return {sign(x), TropScalar<Rat>(-pi1(x.least_exponent()))};
}

/// Exact substitution of rational mu, nu for the first- and second-order
/// perturbation levels: a term c * t^(a,b,e) becomes (c mu^b nu^e) * t^a.
/// Requires integer b and e so all coefficients stay rational.
inline FiniteSeries<Rat> instantiate(const FiniteSeries<LexTriple>& x, const Rat& mu,
                                     const Rat& nu) {
    if (!(mu > 0 && mu < 1 && nu > 0 && nu < 1))
        throw PreconditionError("instantiate needs 0 < mu, nu < 1");
    FiniteSeries<Rat> out;
    for (const auto& [e, c] : x.terms()) {
        if (!is_integer(pi2(e)) || !is_integer(pi3(e)))
            throw PreconditionError("instantiate needs integer perturbation exponents, got t^" +
                                    to_string(e));
        const auto b = static_cast<long long>(pi2(e));
        const auto d = static_cast<long long>(pi3(e));
        out = out + FiniteSeries<Rat>::monomial(pi1(e), c * rat_pow(mu, b) * rat_pow(nu, d));
    }
    return out;
}

}  // namespace tropifacet
