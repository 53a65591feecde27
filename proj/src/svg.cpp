#include "tropcount/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tropcount {

namespace {

constexpr double kPanel = 400.0;
constexpr double kGap = 40.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

struct Frame {
    double x0, y0, scale, ox;
    // y grows upward in the plane, downward in SVG
    std::pair<double, double> map(double x, double y) const {
        return {ox + (x - x0) * scale, kPanel - (y - y0) * scale};
    }
};

Frame frame_for(double xmin, double xmax, double ymin, double ymax, double margin_frac, double ox) {
    double w = std::max(xmax - xmin, 1e-9), h = std::max(ymax - ymin, 1e-9);
    double side = std::max(w, h) * (1 + 2 * margin_frac);
    double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
    return {cx - side / 2, cy - side / 2, kPanel / side, ox};
}

}  // namespace

std::string render_svg(const PlaneTropicalCurve& curve, const MarkedConfiguration& marks) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : curve.vertices()) pts.emplace_back(v.position.x.get_d(), v.position.y.get_d());
    for (const auto& m : marks.points) pts.emplace_back(m.x.get_d(), m.y.get_d());
    double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
    for (auto [x, y] : pts) {
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    if (xmax - xmin < 1e-9 && ymax - ymin < 1e-9) xmin -= 1, xmax += 1, ymin -= 1, ymax += 1;
    Frame cf = frame_for(xmin, xmax, ymin, ymax, 0.1, 0);
    double ray_len = 2 * kPanel / cf.scale;

    std::ostringstream os;
    const double width = 2 * kPanel + kGap;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(kPanel)
       << "\" viewBox=\"0 0 " << num(width) << " " << num(kPanel) << "\">\n";
    os << "<defs><clipPath id=\"curve\"><rect x=\"0\" y=\"0\" width=\"" << num(kPanel) << "\" height=\""
       << num(kPanel) << "\"/></clipPath></defs>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(kPanel)
       << "\" fill=\"white\"/>\n";
    os << "<g clip-path=\"url(#curve)\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (std::size_t e = 0; e < curve.edges().size(); ++e) {
        const auto& ce = curve.edges()[e];
        const auto& p = curve.vertices()[ce.tail].position;
        double x1 = p.x.get_d(), y1 = p.y.get_d(), x2, y2;
        if (ce.head) {
            const auto& q = curve.vertices()[*ce.head].position;
            x2 = q.x.get_d(), y2 = q.y.get_d();
        } else {
            double len = std::hypot(double(ce.direction.x), double(ce.direction.y));
            x2 = x1 + ce.direction.x / len * ray_len;
            y2 = y1 + ce.direction.y / len * ray_len;
        }
        auto [a, b] = cf.map(x1, y1);
        auto [c, d] = cf.map(x2, y2);
        os << "<line x1=\"" << num(a) << "\" y1=\"" << num(b) << "\" x2=\"" << num(c) << "\" y2=\"" << num(d)
           << "\"/>\n";
        if (ce.weight > 1) {
            double mx = ce.head ? (a + c) / 2 : a + (c - a) * 0.1 / 2;
            double my = ce.head ? (b + d) / 2 : b + (d - b) * 0.1 / 2;
            os << "<text x=\"" << num(mx + 4) << "\" y=\"" << num(my - 4)
               << "\" font-size=\"12\" stroke=\"none\" fill=\"blue\">" << ce.weight << "</text>\n";
        }
    }
    os << "</g>\n<g fill=\"red\">\n";
    for (const auto& m : marks.points) {
        auto [a, b] = cf.map(m.x.get_d(), m.y.get_d());
        os << "<circle cx=\"" << num(a) << "\" cy=\"" << num(b) << "\" r=\"4\"/>\n";
    }
    os << "</g>\n";

    // dual subdivision panel
    const Subdivision& s = curve.dual();
    double sxmin = s.vertices()[0].x, sxmax = sxmin, symin = s.vertices()[0].y, symax = symin;
    for (const auto& v : s.vertices()) {
        sxmin = std::min<double>(sxmin, v.x), sxmax = std::max<double>(sxmax, v.x);
        symin = std::min<double>(symin, v.y), symax = std::max<double>(symax, v.y);
    }
    Frame sf = frame_for(sxmin, sxmax, symin, symax, 0.1, kPanel + kGap);
    os << "<g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (const auto& cell : s.cells()) {
        os << "<polygon points=\"";
        for (std::size_t i = 0; i < cell.size(); ++i) {
            auto [a, b] = sf.map(double(cell.vertex(i).x), double(cell.vertex(i).y));
            os << (i ? " " : "") << num(a) << "," << num(b);
        }
        os << "\"/>\n";
    }
    os << "</g>\n<g fill=\"black\">\n";
    for (const auto& v : s.vertices()) {
        auto [a, b] = sf.map(double(v.x), double(v.y));
        os << "<circle cx=\"" << num(a) << "\" cy=\"" << num(b) << "\" r=\"3\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace tropcount
