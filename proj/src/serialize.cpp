#include "chordal/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace chordal {

std::string double_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

namespace {

std::string complex_pair(const Complex& z) {
    return "[" + double_str(z.real()) + "," + double_str(z.imag()) + "]";
}

}  // namespace

std::string to_json(const ChordReport& report, double integer_hint_tol) {
    std::string out = "{\"n\":" + std::to_string(report.n);
    out += ",\"a\":" + double_str(report.spec.a);
    out += ",\"b\":" + double_str(report.spec.b);
    out += ",\"chord_lengths\":[";
    for (std::size_t i = 0; i < report.chord_lengths.size(); ++i) {
        if (i) out.push_back(',');
        out += double_str(report.chord_lengths[i]);
    }
    out += "],\"numeric_product\":" + double_str(report.numeric_product);
    out += ",\"formula_value\":" + double_str(report.formula_value);
    out += ",\"relative_discrepancy\":" + double_str(report.relative_discrepancy);
    out += ",\"log_product\":" + double_str(report.log_product);
    if (integer_hint_tol > 0.0) {
        const double nearest = std::round(report.formula_value);
        if (std::abs(report.formula_value - nearest) <=
            integer_hint_tol * std::max(1.0, std::abs(report.formula_value)))
            out += ",\"as_integer\":" + std::to_string(static_cast<long long>(nearest));
    }
    out += "}";
    return out;
}

std::string to_json(const RadicalSolution& sol) {
    std::string out = "{\"n\":" + std::to_string(sol.n);
    out += ",\"p\":\"" + rational_str(sol.p) + "\"";
    out += ",\"q\":\"" + rational_str(sol.q) + "\"";
    out += ",\"a\":" + complex_pair(sol.a);
    out += ",\"b\":" + complex_pair(sol.b);
    out += ",\"twist\":" + std::to_string(sol.twist);
    out += ",\"roots\":[";
    for (std::size_t i = 0; i < sol.roots.size(); ++i) {
        if (i) out.push_back(',');
        out += complex_pair(sol.roots[i]);
    }
    out += "],\"max_residual\":" + double_str(sol.max_residual);
    out += "}";
    return out;
}

std::string poly_json(Family kind, int n, const BivarPoly& p) {
    std::string out = "{\"kind\":\"";
    out.push_back(family_char(kind));
    out += "\",\"n\":" + std::to_string(n) + ",\"terms\":[";
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) out.push_back(',');
        first = false;
        out += "{\"i\":" + std::to_string(m.x_deg) + ",\"j\":" + std::to_string(m.y_deg) +
               ",\"coeff\":\"" + c.str() + "\"}";
    }
    out += "]}";
    return out;
}

}  // namespace chordal
