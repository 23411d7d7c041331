#include "tropifacet/rational.hpp"

#include <cctype>
#include <sstream>

namespace tropifacet {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rat pow10(size_t k) {
    Rat r(1);
    for (size_t i = 0; i < k; ++i) r *= 10;
    return r;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    const std::string context(text);
    if (s.empty()) throw ValidationError("cannot parse rational from empty string");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ValidationError("cannot parse rational '" + context + "'");

    auto slash = s.find('/');
    auto dot = s.find('.');
    Rat value;
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ValidationError("cannot parse rational '" + context + "'");
        Rat d{std::string(den)};
        if (d == 0) throw ValidationError("zero denominator in rational '" + context + "'");
        value = Rat{std::string(num)} / d;
    } else if (dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac))
            throw ValidationError("cannot parse rational '" + context + "'");
        value = Rat{std::string(whole)} + Rat{std::string(frac)} / pow10(frac.size());
    } else {
        if (!all_digits(s)) throw ValidationError("cannot parse rational '" + context + "'");
        value = Rat{std::string(s)};
    }
    return negative ? -value : value;
}

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const LexTriple& t) {
    return "(" + to_string(t.first) + "," + to_string(t.second) + "," + to_string(t.third) + ")";
}

Rat rat_pow(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw ValidationError("zero base with negative exponent");
        return Rat(0);
    }
    bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    Rat acc(1);
    Rat b = base;
    while (k > 0) {
        if (k & 1ull) acc *= b;
        b *= b;
        k >>= 1;
    }
    return invert ? Rat(1) / acc : acc;
}

bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

}  // namespace tropifacet
