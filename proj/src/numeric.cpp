#include "chordal/numeric.hpp"

#include "chordal/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace chordal {

Rational exact_rational(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("exact_rational: non-finite input");
    return Rational(v);  // binary doubles are rationals; conversion is exact
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("rational_pow: negative exponent");
    using boost::multiprecision::pow;
    return Rational(pow(numerator(base), static_cast<unsigned>(exponent)),
                    pow(denominator(base), static_cast<unsigned>(exponent)));
}

Complex complex_pow(Complex base, int exponent) {
    if (exponent < 0) return 1.0 / complex_pow(base, -exponent);
    Complex result{1.0, 0.0};
    while (exponent != 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Complex unit_root(int n, long long j) {
    if (n <= 0) throw std::invalid_argument("unit_root: n must be positive");
    long long r = j % n;
    if (r < 0) r += n;
    if (r == 0) return {1.0, 0.0};
    const double theta = 2.0 * pi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(theta), std::sin(theta)};
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("parse_rational: empty input");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("parse_rational: sign without digits");

    // a/b form
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ParseError("parse_rational: bad fraction: " + std::string(text));
        Int d{std::string(den)};
        if (d == 0) throw ParseError("parse_rational: zero denominator");
        Rational r(Int{std::string(num)}, d);
        return negative ? Rational(-r) : r;
    }

    // decimal with optional exponent
    std::string_view mantissa = s;
    int exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) throw ParseError("parse_rational: bad exponent: " + std::string(text));
        exp10 = std::atoi(std::string(es).c_str());
        if (eneg) exp10 = -exp10;
    }

    std::string digits;
    int frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view whole = mantissa.substr(0, dot), frac = mantissa.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw ParseError("parse_rational: lone dot");
        if (!whole.empty() && !all_digits(whole)) throw ParseError("parse_rational: bad number: " + std::string(text));
        if (!frac.empty() && !all_digits(frac)) throw ParseError("parse_rational: bad number: " + std::string(text));
        digits = std::string(whole) + std::string(frac);
        frac_digits = static_cast<int>(frac.size());
    } else {
        if (!all_digits(mantissa)) throw ParseError("parse_rational: bad number: " + std::string(text));
        digits = std::string(mantissa);
    }
    if (digits.empty()) digits = "0";

    Rational r{Int{digits}};
    int shift = exp10 - frac_digits;
    using boost::multiprecision::pow;
    if (shift > 0) r *= Rational(pow(Int(10), static_cast<unsigned>(shift)));
    if (shift < 0) r /= Rational(pow(Int(10), static_cast<unsigned>(-shift)));
    return negative ? Rational(-r) : r;
}

std::string rational_str(const Rational& v) {
    return v.str();
}

}  // namespace chordal
