#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "tropifacet/series.hpp"

namespace tropifacet {

namespace detail {

template <OrderedAbelianGroup G>
struct ExponentFormat;

template <>
struct ExponentFormat<Rat> {
    static std::string render(const Rat& e) { return "(" + to_string(e) + ")"; }
    static Rat assemble(const std::vector<Rat>& parts, const std::string& context) {
        if (parts.size() != 1)
            throw ValidationError("expected a rational exponent in '" + context + "'");
        return parts[0];
    }
};

template <>
struct ExponentFormat<LexTriple> {
    static std::string render(const LexTriple& e) { return to_string(e); }
    static LexTriple assemble(const std::vector<Rat>& parts, const std::string& context) {
        if (parts.size() == 1) return lex_of(parts[0]);
        if (parts.size() == 3) return {parts[0], parts[1], parts[2]};
        throw ValidationError("expected a rational or triple exponent in '" + context + "'");
    }
};

}  // namespace detail

/// Renders a series as a sorted sum of "c*t^(e)" terms, e.g.
/// "t^(-2) - 1/4*t^(0)"; constants drop the "t^" part, unit coefficients
/// are omitted. parse_series accepts the same grammar.
template <OrderedAbelianGroup G>
std::string render_series(const FiniteSeries<G>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : x.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Rat mag = negative ? Rat(-c) : c;
        if (e == G{}) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += "t^" + detail::ExponentFormat<G>::render(e);
        }
    }
    return out;
}

namespace detail {

class SeriesCursor {
  public:
    explicit SeriesCursor(std::string_view s) : s_(s) {}
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    /// Longest prefix that parses as a (signed) rational.
    Rat rational(const std::string& context) {
        size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                s_[pos_] == '.'))
            ++pos_;
        if (pos_ == start) throw ValidationError("expected a number in '" + context + "'");
        return parse_rational(s_.substr(start, pos_ - start));
    }

  private:
    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace detail

template <OrderedAbelianGroup G>
FiniteSeries<G> parse_series(std::string_view text) {
    const std::string context(text);
    detail::SeriesCursor cur(text);
    FiniteSeries<G> out;
    cur.skip_ws();
    if (cur.done()) throw ValidationError("empty series literal");
    bool negative = cur.consume('-');
    if (!negative) cur.consume('+');
    while (true) {
        cur.skip_ws();
        // term: [coefficient ['*']] ['t' '^' exponent]
        Rat coef(1);
        bool have_coef = false;
        if (cur.peek() != 't') {
            coef = cur.rational(context);
            have_coef = true;
            cur.skip_ws();
            cur.consume('*');
            cur.skip_ws();
        }
        G exponent{};
        if (cur.consume('t')) {
            if (!cur.consume('^'))
                throw ValidationError("expected '^' after 't' in '" + context + "'");
            std::vector<Rat> parts;
            if (cur.consume('(')) {
                parts.push_back(cur.rational(context));
                while (cur.consume(',')) parts.push_back(cur.rational(context));
                if (!cur.consume(')'))
                    throw ValidationError("unterminated exponent in '" + context + "'");
            } else {
                parts.push_back(cur.rational(context));
            }
            exponent = detail::ExponentFormat<G>::assemble(parts, context);
        } else if (!have_coef) {
            throw ValidationError("expected a term in '" + context + "'");
        }
        out = out + FiniteSeries<G>::monomial(exponent, negative ? Rat(-coef) : coef);
        cur.skip_ws();
        if (cur.done()) break;
        if (cur.consume('+')) {
            negative = false;
        } else if (cur.consume('-')) {
            negative = true;
        } else {
            throw ValidationError("unexpected character '" + std::string(1, cur.peek()) +
                                  "' in series '" + context + "'");
        }
    }
    return out;
}

}  // namespace tropifacet
