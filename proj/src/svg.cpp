#include "chordal/svg.hpp"

#include <cstdio>
#include <ostream>

namespace chordal {

namespace {

std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_figure_svg(std::ostream& os, int n, const EllipseSpec& spec) {
    const auto points = lattice_points(n, spec);
    const double half = 1.1 * (spec.a + std::abs(spec.b));
    const double stroke = half / 220.0;
    const double dot = half / 70.0;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"" << svg_num(-half)
       << " " << svg_num(-half) << " " << svg_num(2 * half) << " " << svg_num(2 * half) << "\">\n";
    // SVG y grows downward; geometry points are emitted with y negated
    os << "  <ellipse cx=\"0\" cy=\"0\" rx=\"" << svg_num(spec.a + spec.b) << "\" ry=\""
       << svg_num(spec.a - spec.b) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << svg_num(stroke)
       << "\"/>\n";
    const Complex anchor = points.front();
    for (std::size_t j = 1; j < points.size(); ++j) {
        os << "  <line x1=\"" << svg_num(anchor.real()) << "\" y1=\"" << svg_num(-anchor.imag()) << "\" x2=\""
           << svg_num(points[j].real()) << "\" y2=\"" << svg_num(-points[j].imag())
           << "\" stroke=\"steelblue\" stroke-width=\"" << svg_num(stroke) << "\"/>\n";
    }
    for (const Complex& z : points) {
        os << "  <circle cx=\"" << svg_num(z.real()) << "\" cy=\"" << svg_num(-z.imag()) << "\" r=\""
           << svg_num(dot) << "\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace chordal
