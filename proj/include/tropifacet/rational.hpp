#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "tropifacet/errors.hpp"

namespace tropifacet {

/// Exact arbitrary-precision rational. All arithmetic in this library is
/// exact; no floating point is used outside of SVG coordinate emission.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Parses "p/q", integers and decimal literals ("2.5176") into exact
/// rationals. Throws ValidationError on malformed input.
Rat parse_rational(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Integer power with negative exponents allowed (base must be non-zero
/// when e < 0).
Rat rat_pow(const Rat& base, long long e);

/// Returns true when r has denominator 1.
bool is_integer(const Rat& r);

/// Triples of rationals under component-wise addition and lexicographic
/// order: the value group behind the symbolic perturbation. A triple
/// (a, b, c) stands for a + b*eps + c*eps^2 with eps infinitesimal.
struct LexTriple {
    Rat first;
    Rat second;
    Rat third;

    LexTriple() = default;
    LexTriple(Rat a, Rat b, Rat c)
        : first(std::move(a)), second(std::move(b)), third(std::move(c)) {}

    friend LexTriple operator+(const LexTriple& x, const LexTriple& y) {
        return {x.first + y.first, x.second + y.second, x.third + y.third};
    }
    friend LexTriple operator-(const LexTriple& x, const LexTriple& y) {
        return {x.first - y.first, x.second - y.second, x.third - y.third};
    }
    LexTriple operator-() const { return {-first, -second, -third}; }

    friend bool operator==(const LexTriple& x, const LexTriple& y) {
        return x.first == y.first && x.second == y.second && x.third == y.third;
    }
    friend bool operator!=(const LexTriple& x, const LexTriple& y) { return !(x == y); }
    friend bool operator<(const LexTriple& x, const LexTriple& y) {
        if (x.first != y.first) return x.first < y.first;
        if (x.second != y.second) return x.second < y.second;
        return x.third < y.third;
    }
    friend bool operator>(const LexTriple& x, const LexTriple& y) { return y < x; }
    friend bool operator<=(const LexTriple& x, const LexTriple& y) { return !(y < x); }
    friend bool operator>=(const LexTriple& x, const LexTriple& y) { return !(x < y); }
};

inline const Rat& pi1(const LexTriple& t) { return t.first; }
inline const Rat& pi2(const LexTriple& t) { return t.second; }
inline const Rat& pi3(const LexTriple& t) { return t.third; }

/// Embeds a rational as the unperturbed triple (r, 0, 0).
inline LexTriple lex_of(Rat r) { return {std::move(r), Rat(0), Rat(0)}; }

/// Rendered as "(a,b,c)".
std::string to_string(const LexTriple& t);

/// Requirements on a value group element type: default construction gives
/// the identity, +/- are the group law, < is the (total) order.
template <class G>
concept OrderedAbelianGroup = std::regular<G> && requires(const G& a, const G& b) {
    { a + b } -> std::convertible_to<G>;
    { a - b } -> std::convertible_to<G>;
    { -a } -> std::convertible_to<G>;
    { a < b } -> std::convertible_to<bool>;
};

static_assert(OrderedAbelianGroup<Rat>);
static_assert(OrderedAbelianGroup<LexTriple>);

}  // namespace tropifacet
