#include "cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace bqf::plot {

namespace {

constexpr double kScale = 200.0;  // pixels per unit
constexpr std::size_t kMaxPoints = 10'000;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

struct View {
    double x0, x1, y1;
    double sx(double x) const { return (x - x0) * kScale; }
    double sy(double y) const { return (y1 - y) * kScale; }
};

}  // namespace

std::string render_svg(std::span<const AlgebraicPoint> points, Region region) {
    if (points.size() > kMaxPoints) throw domain_error("plot accepts at most 10^4 points");

    struct Xy {
        double x, y;
    };
    std::vector<Xy> coords;
    coords.reserve(points.size());
    for (const auto& z : points) {
        double q = z.q().get_d();
        coords.push_back({z.p().get_d() / q, std::sqrt(-z.d().get_d()) / q});
    }

    View view{-1.0, 1.0, 1.5};
    for (const auto& c : coords) {
        view.x0 = std::min(view.x0, c.x - 0.25);
        view.x1 = std::max(view.x1, c.x + 0.25);
        view.y1 = std::max(view.y1, c.y + 0.25);
    }
    const double width = (view.x1 - view.x0) * kScale;
    const double height = view.y1 * kScale;
    const double corner = std::sqrt(3.0) / 2.0;
    const double left = region == Region::pi ? -0.5 : 0.0;
    const double arc_start = region == Region::pi ? corner : 1.0;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed6(width) << "\" height=\""
       << fixed6(height) << "\" viewBox=\"0 0 " << fixed6(width) << " " << fixed6(height) << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << fixed6(width) << "\" height=\"" << fixed6(height)
       << "\" fill=\"white\"/>\n";

    // real and imaginary axes
    os << "<line class=\"axis\" x1=\"" << fixed6(view.sx(view.x0)) << "\" y1=\"" << fixed6(view.sy(0)) << "\" x2=\""
       << fixed6(view.sx(view.x1)) << "\" y2=\"" << fixed6(view.sy(0)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line class=\"axis\" x1=\"" << fixed6(view.sx(0)) << "\" y1=\"" << fixed6(view.sy(0)) << "\" x2=\""
       << fixed6(view.sx(0)) << "\" y2=\"" << fixed6(view.sy(view.y1))
       << "\" stroke=\"gray\" stroke-width=\"0.5\" stroke-dasharray=\"4 4\"/>\n";

    // region: up the left side, along the arc (clockwise on screen), up the right side
    os << "<path class=\"region\" data-region=\"" << (region == Region::pi ? "pi" : "pibar") << "\" d=\"M "
       << fixed6(view.sx(left)) << " " << fixed6(view.sy(view.y1)) << " L " << fixed6(view.sx(left)) << " "
       << fixed6(view.sy(arc_start)) << " A " << fixed6(kScale) << " " << fixed6(kScale) << " 0 0 1 "
       << fixed6(view.sx(0.5)) << " " << fixed6(view.sy(corner)) << " L " << fixed6(view.sx(0.5)) << " "
       << fixed6(view.sy(view.y1)) << " Z\" fill=\"#dbe9f6\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";

    for (std::size_t i = 0; i < points.size(); ++i) {
        os << "<circle class=\"base-point\" data-point=\"" << to_string(points[i]) << "\" cx=\""
           << fixed6(view.sx(coords[i].x)) << "\" cy=\"" << fixed6(view.sy(coords[i].y))
           << "\" r=\"4\" fill=\"#c0392b\"><title>(" << to_string(points[i].p()) << " + sqrt("
           << to_string(points[i].d()) << "))/" << to_string(points[i].q()) << "</title></circle>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bqf::plot
