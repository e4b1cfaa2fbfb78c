#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "wps/polytope.hpp"

namespace wps {

namespace detail {

inline double to_double(const Rational& q) {
    return numerator(q).convert_to<double>() /
           denominator(q).convert_to<double>();
}

}  // namespace detail

/// Render a 2D point set (optionally with its convex hull) to SVG 1.1 with
/// axes through the origin. Coordinates stay exact until the final viewport
/// mapping; the viewport is fixed at 640x640 with a 48px margin.
inline std::string render_svg2d(const HPointSet& S, bool hull) {
    if (S.dim != 2)
        throw Error(ErrorCode::DimensionNot2,
                    "SVG output supports 2-dimensional point sets only");
    const double size = 640.0, margin = 48.0;

    Rational min_x(0), max_x(0), min_y(0), max_y(0);
    for (const HPoint& p : S.points) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    }
    if (min_x == max_x) max_x = min_x + 1;
    if (min_y == max_y) max_y = min_y + 1;

    const double span_x = detail::to_double(max_x - min_x);
    const double span_y = detail::to_double(max_y - min_y);
    const double scale = (size - 2 * margin) / std::max(span_x, span_y);
    auto px = [&](const Rational& x) {
        return margin + (detail::to_double(x - min_x)) * scale;
    };
    auto py = [&](const Rational& y) {
        return size - margin - (detail::to_double(y - min_y)) * scale;
    };

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
    os << "  <line x1=\"" << px(min_x) << "\" y1=\"" << py(Rational(0))
       << "\" x2=\"" << px(max_x) << "\" y2=\"" << py(Rational(0))
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << px(Rational(0)) << "\" y1=\"" << py(min_y)
       << "\" x2=\"" << px(Rational(0)) << "\" y2=\"" << py(max_y)
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    if (hull && S.points.size() >= 2) {
        std::vector<HPoint> verts = hull2d(S.points);
        os << "  <polygon points=\"";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) os << " ";
            os << px(verts[i][0]) << "," << py(verts[i][1]);
        }
        os << "\" fill=\"#cfe2ff\" fill-opacity=\"0.5\" stroke=\"#3366cc\" "
              "stroke-width=\"1.5\"/>\n";
    }
    for (const HPoint& p : S.points) {
        os << "  <circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1])
           << "\" r=\"4\" fill=\"#222\"/>\n";
        os << "  <text x=\"" << px(p[0]) + 6 << "\" y=\"" << py(p[1]) - 6
           << "\" font-size=\"11\" font-family=\"monospace\">(" << to_string(p[0])
           << "," << to_string(p[1]) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline void emit_svg2d(const HPointSet& S, bool hull, const std::string& path) {
    std::string body = render_svg2d(S, hull);
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::IOError, "cannot open '" + path + "' for writing");
    out << body;
    if (!out)
        throw Error(ErrorCode::IOError, "failed writing '" + path + "'");
}

}  // namespace wps
