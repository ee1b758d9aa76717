#include "chordal/bivar_poly.hpp"
#include "chordal/errors.hpp"
#include "chordal/univar_poly.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace chordal {

namespace {

constexpr int kMaxExponent = 100000;

std::string int_str(const Int& v) { return v.str(); }

void append_power(std::string& out, char var, int deg) {
    out.push_back(var);
    if (deg > 1) {
        out.push_back('^');
        out += std::to_string(deg);
    }
}

// ---- parsing ------------------------------------------------------------

struct RawTerm {
    Rational coeff{1};
    int x_deg = 0;  // doubles as the z-degree in univariate mode
    int y_deg = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    bool match(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial parse: " + why + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
    }

    Int read_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
        return Int(digits);
    }

    int read_exponent() {
        skip_ws();
        Int e = read_uint();
        if (e > kMaxExponent) fail("exponent too large");
        return e.convert_to<int>();
    }

    // uint, uint/uint, or uint.digits
    Rational read_number() {
        Int whole = read_uint();
        if (match('/')) {
            Int den = read_uint();
            if (den == 0) fail("zero denominator");
            return Rational(whole, den);
        }
        if (peek() == '.' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            std::string frac;
            while (std::isdigit(static_cast<unsigned char>(peek()))) frac.push_back(text_[pos_++]);
            Int den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            return Rational(whole) + Rational(Int(frac), den);
        }
        return Rational(whole);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// `vars` maps accepted variable letters to slots 0 (x/z) and 1 (y).
std::vector<RawTerm> parse_terms(std::string_view text, std::string_view vars) {
    Lexer lex(text);
    std::vector<RawTerm> terms;

    lex.skip_ws();
    if (lex.done()) lex.fail("empty input");
    bool negative = lex.match('-');
    if (!negative) lex.match('+');

    for (;;) {
        RawTerm term;
        if (negative) term.coeff = -term.coeff;
        bool saw_factor = false;
        for (;;) {
            lex.skip_ws();
            const char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term.coeff *= lex.read_number();
                saw_factor = true;
            } else if (auto slot = vars.find(c); slot != std::string_view::npos) {
                lex.match(c);
                int deg = 1;
                lex.skip_ws();
                if (lex.match('^')) deg = lex.read_exponent();
                int& acc = slot == 0 ? term.x_deg : term.y_deg;
                if (deg > kMaxExponent - acc) lex.fail("exponent too large");
                acc += deg;
                saw_factor = true;
            } else {
                lex.fail("expected a coefficient or variable");
            }
            lex.skip_ws();
            if (!lex.match('*')) break;
        }
        if (!saw_factor) lex.fail("empty term");
        terms.push_back(std::move(term));

        lex.skip_ws();
        if (lex.done()) break;
        if (lex.match('-'))
            negative = true;
        else if (lex.match('+'))
            negative = false;
        else
            lex.fail("expected '+' or '-'");
        lex.skip_ws();
        if (lex.done()) lex.fail("dangling sign");
    }
    return terms;
}

// Renders one term body (no sign); `mag` printed unless it is 1 and a
// variable follows.
template <typename Magnitude>
std::string term_body(const Magnitude& mag, bool unit, char var_x, int xd, char var_y, int yd) {
    std::string body;
    const bool has_var = xd > 0 || yd > 0;
    if (!has_var) return mag;
    if (!unit) {
        body = mag;
        body.push_back('*');
    }
    if (xd > 0) append_power(body, var_x, xd);
    if (xd > 0 && yd > 0) body.push_back('*');
    if (yd > 0) append_power(body, var_y, yd);
    return body;
}

void join_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty()) {
        if (negative) out.push_back('-');
    } else {
        out += negative ? " - " : " + ";
    }
    out += body;
}

}  // namespace

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const Int mag = c < 0 ? Int(-c) : c;
        join_term(out, c < 0, term_body(int_str(mag), mag == 1, 'X', m.x_deg, 'Y', m.y_deg));
    }
    return out;
}

BivarPoly BivarPoly::parse(std::string_view text) {
    BivarPoly p;
    for (const auto& t : parse_terms(text, "XY")) {
        if (denominator(t.coeff) != 1)
            throw ParseError("polynomial parse: non-integer coefficient in \"" + std::string(text) + "\"");
        p.add_term(Monomial{t.x_deg, t.y_deg}, numerator(t.coeff));
    }
    return p;
}

std::string UnivarPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        join_term(out, c < 0, term_body(rational_str(mag), mag == 1, 'z', k, '\0', 0));
    }
    return out;
}

UnivarPoly UnivarPoly::parse(std::string_view text) {
    std::vector<Rational> coeffs;
    for (const auto& t : parse_terms(text, "z")) {
        if (coeffs.size() < static_cast<std::size_t>(t.x_deg) + 1)
            coeffs.resize(static_cast<std::size_t>(t.x_deg) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(t.x_deg)] += t.coeff;
    }
    return UnivarPoly(std::move(coeffs));
}

}  // namespace chordal
