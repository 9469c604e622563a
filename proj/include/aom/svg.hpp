/**
 * SVG rendering of a planar arrangement: lines clipped to a window, bounded
 * regions shaded, and the bounded complex skeleton drawn on top.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aom/bounded_complex.hpp"
#include "aom/error.hpp"
#include "aom/realization.hpp"

namespace aom {

struct Bounds {
    double xmin = -1, ymin = -1, xmax = 1, ymax = 1;
};

/// "xmin,ymin,xmax,ymax"
inline Bounds parse_bounds(const std::string& text) {
    Bounds b;
    std::array<double*, 4> slots{&b.xmin, &b.ymin, &b.xmax, &b.ymax};
    std::istringstream in(text);
    std::string part;
    std::size_t k = 0;
    while (std::getline(in, part, ',')) {
        if (k == 4) throw DomainError("bounds need exactly four numbers");
        try {
            std::size_t pos = 0;
            *slots[k] = std::stod(part, &pos);
            if (pos != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw DomainError("bad bound '" + part + "'");
        }
        ++k;
    }
    if (k != 4) throw DomainError("bounds need exactly four numbers");
    if (!(b.xmin < b.xmax && b.ymin < b.ymax)) throw DomainError("bounds must satisfy xmin < xmax and ymin < ymax");
    return b;
}

struct SvgOptions {
    std::optional<Bounds> bounds;
    double size = 480;  ///< width of the image in pixels
};

namespace detail {

using Point = std::array<double, 2>;

inline Point to_point(const std::vector<Rational>& p) {
    return {p[0].convert_to<double>(), p[1].convert_to<double>()};
}

/// Clips the line a.x = b to the box; nullopt if it misses.
inline std::optional<std::array<Point, 2>> clip_line(const Hyperplane& h, const Bounds& bx) {
    const double a0 = h.normal[0].convert_to<double>(), a1 = h.normal[1].convert_to<double>();
    const double b = h.offset.convert_to<double>();
    std::vector<Point> hits;
    auto add = [&](Point p) {
        const double eps = 1e-9 * (1 + std::abs(p[0]) + std::abs(p[1]));
        if (p[0] < bx.xmin - eps || p[0] > bx.xmax + eps || p[1] < bx.ymin - eps || p[1] > bx.ymax + eps) return;
        for (const auto& q : hits)
            if (std::abs(q[0] - p[0]) < eps && std::abs(q[1] - p[1]) < eps) return;
        hits.push_back(p);
    };
    if (a1 != 0) {
        add({bx.xmin, (b - a0 * bx.xmin) / a1});
        add({bx.xmax, (b - a0 * bx.xmax) / a1});
    }
    if (a0 != 0) {
        add({(b - a1 * bx.ymin) / a0, bx.ymin});
        add({(b - a1 * bx.ymax) / a0, bx.ymax});
    }
    if (hits.size() < 2) return std::nullopt;
    return std::array<Point, 2>{hits[0], hits[1]};
}

}  // namespace detail

inline std::string render_svg(const Arrangement& arr, const SvgOptions& opts = {}) {
    using detail::Point;
    if (arr.dim() != 2) throw PreconditionError("svg output needs a planar arrangement (d = 2)");
    const auto om = realize(arr);
    const auto g = arr.size();
    const AffineOM m(om, g);
    const auto bc = bounded_complex(m);

    // Vertex positions: covectors of L+ whose zero set pins down a point.
    std::vector<std::pair<SignVector, Point>> vertices;
    for (const auto& x : positive_part(m))
        if (m.om().height(*m.om().index_of(x)) == 1)
            if (auto p = vertex_point(arr, x.zero_set())) vertices.emplace_back(x, detail::to_point(*p));

    Bounds bx;
    if (opts.bounds) {
        bx = *opts.bounds;
    } else if (!vertices.empty()) {
        bx = {vertices[0].second[0], vertices[0].second[1], vertices[0].second[0], vertices[0].second[1]};
        for (const auto& [x, p] : vertices) {
            bx.xmin = std::min(bx.xmin, p[0]);
            bx.xmax = std::max(bx.xmax, p[0]);
            bx.ymin = std::min(bx.ymin, p[1]);
            bx.ymax = std::max(bx.ymax, p[1]);
        }
        double mx = 0.2 * (bx.xmax - bx.xmin), my = 0.2 * (bx.ymax - bx.ymin);
        if (mx == 0) mx = 1;
        if (my == 0) my = 1;
        bx = {bx.xmin - mx, bx.ymin - my, bx.xmax + mx, bx.ymax + my};
    }

    const double w = opts.size;
    const double h = w * (bx.ymax - bx.ymin) / (bx.xmax - bx.xmin);
    auto px = [&](const Point& p) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(2) << (p[0] - bx.xmin) / (bx.xmax - bx.xmin) * w << ","
          << (bx.ymax - p[1]) / (bx.ymax - bx.ymin) * h;
        return s.str();
    };
    auto position = [&](const SignVector& v) -> std::optional<Point> {
        for (const auto& [x, p] : vertices)
            if (x == v) return p;
        return std::nullopt;
    };

    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
        << w << " " << h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Bounded regions: polygons through their vertices, sorted by angle.
    out << "<g fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < bc.covectors.size(); ++i) {
        if (bc.ranks[i] != 3) continue;
        std::vector<Point> corner;
        for (const auto& [x, p] : vertices)
            if (below(x, bc.covectors[i])) corner.push_back(p);
        if (corner.size() < 3) continue;
        Point c{0, 0};
        for (const auto& p : corner) c = {c[0] + p[0] / corner.size(), c[1] + p[1] / corner.size()};
        std::sort(corner.begin(), corner.end(), [&](const Point& a, const Point& b) {
            return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
        });
        out << "<polygon data-covector=\"" << bc.covectors[i].str() << "\" points=\"";
        for (std::size_t k = 0; k < corner.size(); ++k) out << (k ? " " : "") << px(corner[k]);
        out << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g stroke=\"#555555\" stroke-width=\"1\">\n";
    for (const auto& hp : arr.hyperplanes())
        if (auto seg = detail::clip_line(hp, bx)) {
            auto a = px((*seg)[0]), b = px((*seg)[1]);
            out << "<line data-label=\"" << hp.label << "\" x1=\"" << a.substr(0, a.find(',')) << "\" y1=\""
                << a.substr(a.find(',') + 1) << "\" x2=\"" << b.substr(0, b.find(',')) << "\" y2=\""
                << b.substr(b.find(',') + 1) << "\"/>\n";
        }
    out << "</g>\n";

    // Skeleton: bounded edges and vertices.
    out << "<g stroke=\"#08519c\" stroke-width=\"3\">\n";
    for (std::size_t i = 0; i < bc.covectors.size(); ++i) {
        if (bc.ranks[i] != 2) continue;
        std::vector<Point> ends;
        for (const auto& [x, p] : vertices)
            if (below(x, bc.covectors[i])) ends.push_back(p);
        if (ends.size() != 2) continue;
        auto a = px(ends[0]), b = px(ends[1]);
        out << "<line data-covector=\"" << bc.covectors[i].str() << "\" x1=\"" << a.substr(0, a.find(',')) << "\" y1=\""
            << a.substr(a.find(',') + 1) << "\" x2=\"" << b.substr(0, b.find(',')) << "\" y2=\""
            << b.substr(b.find(',') + 1) << "\"/>\n";
    }
    out << "</g>\n<g fill=\"#08306b\">\n";
    for (const auto& x : bc.covectors) {
        if (auto p = position(x)) {
            auto a = px(*p);
            out << "<circle data-covector=\"" << x.str() << "\" cx=\"" << a.substr(0, a.find(',')) << "\" cy=\""
                << a.substr(a.find(',') + 1) << "\" r=\"4\"/>\n";
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace aom
