#include "mslope/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mslope {

namespace {

constexpr double kWidth = 900.0, kHeight = 640.0, kMargin = 56.0;

std::string num(double x) {
    char b[40];
    std::snprintf(b, sizeof b, "%.4f", x);
    std::string s(b);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct Frame {
    double vmin, vmax;

    double x(const Fraction& u) const {
        double uu = static_cast<double>(u.num()) / static_cast<double>(u.den());
        return kMargin + (uu + 1.0) / 2.0 * (kWidth - 2 * kMargin);
    }
    double y(double v) const {
        double t = (v - vmin) / (vmax - vmin);
        return kHeight - kMargin - t * (kHeight - 2 * kMargin);
    }
    double xy_x(const DVertex& w) const { return x(w.u()); }
    double xy_y(const DVertex& w) const {
        if (w.kind == DVertex::Kind::Infinity) return y(0.0);
        return y(static_cast<double>(w.v().num()) / static_cast<double>(w.v().den()));
    }
};

void farey_edges(std::ostringstream& out, const Frame& fr, i64 lo, i64 hi, i64 maxq) {
    auto line = [&](const Fraction& a, const Fraction& b) {
        DVertex va = angle_vertex(a), vb = angle_vertex(b);
        out << "  <line x1=\"" << num(fr.xy_x(va)) << "\" y1=\"" << num(fr.xy_y(va))
            << "\" x2=\"" << num(fr.xy_x(vb)) << "\" y2=\"" << num(fr.xy_y(vb))
            << "\" stroke=\"#d8d8d8\" stroke-width=\"0.8\"/>\n";
    };
    // mediant subdivision between consecutive integers
    struct Item { Fraction a, b; };
    for (i64 z = lo; z < hi; ++z) {
        std::vector<Item> stack{{Fraction(z), Fraction(z + 1)}};
        while (!stack.empty()) {
            Item it = stack.back();
            stack.pop_back();
            line(it.a, it.b);
            Fraction med(it.a.num() + it.b.num(), it.a.den() + it.b.den());
            if (med.den() <= maxq) {
                stack.push_back({it.a, med});
                stack.push_back({med, it.b});
            }
        }
    }
    // vertical edges on the integer line and spokes of <1/0>
    DVertex inf = infinity_vertex();
    for (i64 z = lo; z <= hi; ++z) {
        DVertex vz = angle_vertex(Fraction(z));
        if (z < hi) {
            DVertex vz1 = angle_vertex(Fraction(z + 1));
            out << "  <line x1=\"" << num(fr.xy_x(vz)) << "\" y1=\"" << num(fr.xy_y(vz))
                << "\" x2=\"" << num(fr.xy_x(vz1)) << "\" y2=\"" << num(fr.xy_y(vz1))
                << "\" stroke=\"#c0c0c0\" stroke-width=\"1.0\"/>\n";
        }
        out << "  <line x1=\"" << num(fr.xy_x(inf)) << "\" y1=\"" << num(fr.xy_y(inf))
            << "\" x2=\"" << num(fr.xy_x(vz)) << "\" y2=\"" << num(fr.xy_y(vz))
            << "\" stroke=\"#e6e6e6\" stroke-width=\"0.8\"/>\n";
    }
}

void polyline(std::ostringstream& out, const Frame& fr, const Edgepath& p,
              const std::string& color, const std::string& dash, double width) {
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << num(width)
        << "\" stroke-opacity=\"0.8\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    for (size_t i = 0; i < p.vertices.size(); ++i)
        out << (i ? " " : "") << num(fr.xy_x(p.vertices[i])) << "," << num(fr.xy_y(p.vertices[i]));
    out << "\"/>\n";
}

void markers(std::ostringstream& out, const Frame& fr, const Edgepath& p) {
    for (const auto& w : p.vertices) {
        double cx = fr.xy_x(w), cy = fr.xy_y(w);
        if (w.kind == DVertex::Kind::Circle)
            out << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
                << "\" r=\"4.0\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.0\"/>\n";
        else
            out << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
                << "\" r=\"2.2\" fill=\"#444444\"/>\n";
        out << "  <text x=\"" << num(cx + 4.0) << "\" y=\"" << num(cy - 4.0)
            << "\" font-size=\"9\" font-family=\"monospace\" fill=\"#333333\">" << w.str()
            << "</text>\n";
    }
}

}  // namespace

std::string render_svg(const AnalysisReport& r) {
    double vmin = 0.0, vmax = 0.0;
    auto widen = [&](const EdgepathSystem& s) {
        for (const auto& p : s.paths)
            for (const auto& w : p.vertices) {
                if (w.kind == DVertex::Kind::Infinity) continue;
                double v = static_cast<double>(w.v().num()) / static_cast<double>(w.v().den());
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
            }
    };
    widen(r.gamma_inc);
    widen(r.gamma_dec);
    widen(r.gamma_s);
    Frame fr{vmin - 1.0, vmax + 1.0};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
        << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(kHeight) << "\">\n";
    out << "  <rect width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
        << "\" fill=\"#ffffff\"/>\n";
    out << "  <title>M(" << r.expression.str() << ")</title>\n";

    i64 lo = static_cast<i64>(std::floor(vmin));
    i64 hi = static_cast<i64>(std::ceil(vmax));
    farey_edges(out, fr, lo, hi, 8);

    for (const auto& p : r.gamma_inc.paths) polyline(out, fr, p, "#1f77b4", "", 1.8);
    for (const auto& p : r.gamma_dec.paths) polyline(out, fr, p, "#d62728", "6,3", 1.8);
    for (const auto& p : r.gamma_s.paths) polyline(out, fr, p, "#2ca02c", "", 2.6);
    for (const auto& p : r.gamma_inc.paths) markers(out, fr, p);
    for (const auto& p : r.gamma_dec.paths) markers(out, fr, p);
    for (const auto& p : r.gamma_s.paths) markers(out, fr, p);

    out << "  <text x=\"" << num(kMargin) << "\" y=\"" << num(kMargin * 0.6)
        << "\" font-size=\"13\" font-family=\"monospace\" fill=\"#000000\">M("
        << r.expression.str() << ")  C+=" << r.bounds.c_plus << " C-=" << r.bounds.c_minus
        << "  R in [" << r.bounds.slope_lower << ", " << r.bounds.slope_upper << "]</text>\n";
    out << "  <text x=\"" << num(kMargin) << "\" y=\"" << num(kHeight - kMargin * 0.35)
        << "\" font-size=\"11\" font-family=\"monospace\" fill=\"#555555\">"
        << "blue Gamma_inc, red dashed Gamma_dec, green Gamma_s</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace mslope
