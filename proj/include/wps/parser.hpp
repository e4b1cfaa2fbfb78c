#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "wps/polynomial.hpp"

namespace wps {

/// Parser for the polynomial grammar: terms joined by '+'/'-'; a term is an
/// optional rational coefficient ("p/q" or integer) followed by '*'-separated
/// powers "var^k". Whitespace is insignificant. Errors report positions.
namespace detail {

class PolyParser {
public:
    PolyParser(const WeightedSpace& space, long long degree, std::string_view text)
        : X_(space), degree_(degree), text_(text) {}

    WeightedPolynomial run() {
        WeightedPolynomial f(X_, degree_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            int sign = 1;
            skip_ws();
            if (first) {
                if (peek() == '+' || peek() == '-') {
                    if (get() == '-') sign = -1;
                }
                first = false;
            } else {
                if (at_end()) break;
                char op = get();
                if (op == '+')
                    sign = 1;
                else if (op == '-')
                    sign = -1;
                else
                    fail("expected '+' or '-'");
            }
            parse_term(f, sign);
            skip_ws();
            if (at_end()) break;
        }
        return f;
    }

private:
    void parse_term(WeightedPolynomial& f, int sign) {
        std::size_t term_start = pos_;
        Rational coeff(sign);
        ExponentVector mono(X_.var_count(), 0);
        bool saw_factor = false;
        bool saw_variable = false;

        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (saw_factor)
                    fail("numeric coefficient must lead the term");
                coeff *= parse_rational();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                parse_power(mono);
                saw_variable = true;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            saw_factor = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
                if (at_end()) fail("dangling '*'");
            } else {
                break;
            }
        }
        if (!saw_factor) fail("empty term");

        if (coeff == 0) return;  // "0" and friends contribute nothing
        long long deg = weighted_degree(X_, mono);
        if (deg != degree_) {
            std::string term_text(text_.substr(term_start, pos_ - term_start));
            while (!term_text.empty() && std::isspace(static_cast<unsigned char>(
                                             term_text.back())))
                term_text.pop_back();
            throw Error(ErrorCode::DegreeMismatch,
                        "term '" + term_text + "' has weighted degree " +
                            std::to_string(deg) + ", expected " +
                            std::to_string(degree_));
        }
        (void)saw_variable;
        f.add_term(mono, coeff);
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        skip_ws();
        if (!at_end() && peek() == '/') {
            get();
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected denominator after '/'");
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_integer() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            digits += get();
        return Integer(digits);
    }

    void parse_power(ExponentVector& mono) {
        std::size_t name_start = pos_;
        std::string name;
        while (!at_end() &&
               (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += get();
        int idx = X_.index_of(name);
        if (idx < 0)
            throw Error(ErrorCode::UnknownVariable,
                        "unknown variable '" + name + "' at position " +
                            std::to_string(name_start));
        long long exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            get();
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected exponent after '^'");
            Integer e = parse_integer();
            if (e > 1'000'000) fail("exponent too large");
            exp = static_cast<long long>(e);
        }
        mono[idx] += exp;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SyntaxError,
                    what + " at position " + std::to_string(pos_));
    }

    const WeightedSpace& X_;
    long long degree_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline WeightedPolynomial parse_polynomial(const WeightedSpace& X, long long d,
                                           std::string_view text) {
    return detail::PolyParser(X, d, text).run();
}

}  // namespace wps
