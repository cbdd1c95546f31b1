#include "stripcolor/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stripcolor/instance_io.hpp"

namespace stripcolor {

namespace {

struct Canvas {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    double width = 720;
    std::ostringstream body;

    void grow(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }

    double sx(double x) const { return (x - xmin) / std::max(1e-12, xmax - xmin) * width; }
    double sy(double y) const {
        double h = height();
        return h - (y - ymin) / std::max(1e-12, ymax - ymin) * h;
    }
    double height() const { return width * 0.6; }

    std::string finish() {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
            << "\" height=\"" << height() << "\" viewBox=\"0 0 " << width << " " << height()
            << "\">\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

std::string palette(int id) {
    static const char* colors[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400",
                                   "#16a085", "#7f8c8d", "#2c3e50", "#f39c12", "#2980b9"};
    return colors[id % 10];
}

void draw_line(Canvas& c, double x1, double y1, double x2, double y2, const std::string& stroke,
               double width, bool dashed) {
    c.body << "<line x1=\"" << c.sx(x1) << "\" y1=\"" << c.sy(y1) << "\" x2=\"" << c.sx(x2)
           << "\" y2=\"" << c.sy(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
           << "\"";
    if (dashed) c.body << " stroke-dasharray=\"6,4\"";
    c.body << " />\n";
}

void draw_strip_lines(Canvas& c) {
    draw_line(c, c.xmin, 0.0, c.xmax, 0.0, "#444444", 1.5, false);
    draw_line(c, c.xmin, 1.0, c.xmax, 1.0, "#444444", 1.5, false);
}

}  // namespace

std::string svg_strip_family(std::span<const StripObject> objects, std::span<const Color> colors) {
    Canvas c;
    for (const StripObject& o : objects)
        for (const Point& p : o.polygon) c.grow(p.x.to_double(), p.y.to_double());
    std::vector<int> flat;
    if (!colors.empty()) flat = flatten_colors(colors);
    draw_strip_lines(c);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const StripObject& o = objects[i];
        std::string tint = colors.empty() ? std::string("#1b6ca8") : palette(flat[i]);
        if (o.polygon.size() == 2) {
            draw_line(c, o.polygon[0].x.to_double(), o.polygon[0].y.to_double(),
                      o.polygon[1].x.to_double(), o.polygon[1].y.to_double(), tint, 2.0, false);
            continue;
        }
        c.body << "<polygon points=\"";
        for (const Point& p : o.polygon)
            c.body << c.sx(p.x.to_double()) << "," << c.sy(p.y.to_double()) << " ";
        c.body << "\" fill=\"" << tint << "\" fill-opacity=\"0.25\" stroke=\"" << tint
               << "\" stroke-width=\"1.5\" />\n";
        draw_line(c, o.base.x_bottom.to_double(), 0.0, o.base.x_top.to_double(), 1.0, tint, 1.0,
                  true);
    }
    return c.finish();
}

std::string svg_adversary(const AdversaryOutcome& outcome) {
    Canvas c;
    for (const AttachedSegment& s : outcome.family) {
        c.grow(s.foot.x.to_double(), 0.0);
        c.grow(s.apex.x.to_double(), s.apex.y.to_double());
    }
    std::vector<int> flat = flatten_colors(outcome.transcript.colors);
    draw_line(c, c.xmin, 0.0, c.xmax, 0.0, "#444444", 1.5, false);
    for (std::size_t i = 0; i < outcome.family.size(); ++i) {
        const AttachedSegment& s = outcome.family[i];
        draw_line(c, s.foot.x.to_double(), 0.0, s.apex.x.to_double(), s.apex.y.to_double(),
                  palette(flat[i]), 2.0, false);
    }
    draw_line(c, outcome.witness.x.to_double(), c.ymin, outcome.witness.x.to_double(), c.ymax,
              "#000000", 1.0, true);
    return c.finish();
}

std::string svg_curve_system(const CurveSystem& sys, bool show_lines) {
    Canvas c;
    for (const PolylineCurve& curve : sys.curves)
        for (const Point& p : curve.pts) c.grow(p.x.to_double(), p.y.to_double());
    draw_strip_lines(c);
    if (show_lines)
        for (const Rational& y : sys.lines)
            draw_line(c, c.xmin, y.to_double(), c.xmax, y.to_double(), "#999999", 0.75, true);
    for (std::size_t i = 0; i < sys.curves.size(); ++i) {
        c.body << "<polyline points=\"";
        for (const Point& p : sys.curves[i].pts)
            c.body << c.sx(p.x.to_double()) << "," << c.sy(p.y.to_double()) << " ";
        c.body << "\" fill=\"none\" stroke=\"" << palette(static_cast<int>(i))
               << "\" stroke-width=\"1.75\" />\n";
    }
    return c.finish();
}

}  // namespace stripcolor
