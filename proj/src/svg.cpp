#include "polypush/svg.hpp"

#include "polypush/errors.hpp"

#include <cstdio>
#include <sstream>

namespace polypush {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

std::string render_svg(const SimplicialComplex& cx, const SetModel* sm, const PushRecord* overlay,
                       RenderOptions opts) {
    int px = 0, py = 1;
    if (cx.ambient_dim() > 2) {
        if (!opts.project)
            throw validation_error("render: ambient dimension > 2 needs --project i,j");
        px = opts.project->first;
        py = opts.project->second;
        if (px < 0 || py < 0 || px >= cx.ambient_dim() || py >= cx.ambient_dim() || px == py)
            throw validation_error("render: bad projection axes");
    } else if (cx.ambient_dim() < 2) {
        throw validation_error("render: ambient dimension must be at least 1");
    }
    auto proj = [&](const Vec& p) {
        return std::pair<double, double>(p[px], cx.ambient_dim() >= 2 ? p[py] : 0.0);
    };

    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    for (int v = 0; v < cx.num_vertices(); ++v) {
        auto [x, y] = proj(cx.vertex(v));
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }
    double span = std::max(hi_x - lo_x, hi_y - lo_y);
    if (span <= 0) span = 1;
    double margin = 0.05 * span;
    double scale = opts.width / (span + 2 * margin);
    double height = (hi_y - lo_y + 2 * margin) * scale;
    auto map = [&](const Vec& p) {
        auto [x, y] = proj(p);
        return std::pair<double, double>((x - lo_x + margin) * scale,
                                         height - (y - lo_y + margin) * scale);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(opts.width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(opts.width) << " "
        << num(height) << "\">\n";

    // Full simplices of dim 2 as filled patches.
    if (sm) {
        for (int f : sm->full) {
            if (cx.simplex(f).dim() != 2) continue;
            auto pts = cx.points_of(f);
            svg << "<polygon class=\"full\" fill=\"#c8c8c8\" stroke=\"none\" points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                auto [x, y] = map(pts[i]);
                svg << (i ? " " : "") << num(x) << "," << num(y);
            }
            svg << "\"/>\n";
        }
    }
    // Edges; Q edges highlighted.
    for (int s = 0; s < cx.num_simplices(); ++s) {
        if (cx.simplex(s).dim() != 1) continue;
        auto pts = cx.points_of(s);
        auto [x1, y1] = map(pts[0]);
        auto [x2, y2] = map(pts[1]);
        bool full_edge = sm && sm->is_full(s);
        const char* color = full_edge ? "#d03030" : (cx.in_q(s) ? "#202020" : "#a0a0a0");
        const char* width = full_edge ? "3" : (cx.in_q(s) ? "1.5" : "1");
        svg << "<line class=\"edge\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
            << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << color << "\" stroke-width=\""
            << width << "\"/>\n";
    }
    // Cone overlay: apex, rays, boundary images.
    if (overlay) {
        auto [zx, zy] = map(overlay->z0);
        for (const Vec& img : overlay->cone.images) {
            auto [ix, iy] = map(img);
            svg << "<line class=\"ray\" x1=\"" << num(zx) << "\" y1=\"" << num(zy) << "\" x2=\""
                << num(ix) << "\" y2=\"" << num(iy)
                << "\" stroke=\"#3060d0\" stroke-width=\"1\" stroke-dasharray=\"4,2\"/>\n";
            svg << "<circle class=\"image\" cx=\"" << num(ix) << "\" cy=\"" << num(iy)
                << "\" r=\"3\" fill=\"#3060d0\"/>\n";
        }
        svg << "<circle class=\"apex\" cx=\"" << num(zx) << "\" cy=\"" << num(zy)
            << "\" r=\"4\" fill=\"#d08020\"/>\n";
    }
    // Samples.
    if (sm) {
        for (const Sample& s : sm->samples) {
            auto [x, y] = map(s.point);
            svg << "<circle class=\"sample\" cx=\"" << num(x) << "\" cy=\"" << num(y)
                << "\" r=\"2.5\" fill=\"#208040\"/>\n";
        }
        for (int f : sm->full) {
            if (cx.simplex(f).dim() != 0) continue;
            auto [x, y] = map(cx.vertex(cx.simplex(f).vertices[0]));
            svg << "<circle class=\"full\" cx=\"" << num(x) << "\" cy=\"" << num(y)
                << "\" r=\"3.5\" fill=\"#d03030\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace polypush
