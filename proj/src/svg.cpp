#include "wftq/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace wftq {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

struct Box {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    void add(Vec2 p) {
        if (first) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            first = false;
            return;
        }
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
};

}  // namespace

std::string symmetrization_svg(const AngularConfig& cfg,
                               const ParallelogramReport& report) {
    std::array<Vec2, 4> arcs;
    for (int i = 0; i < 4; ++i) arcs[i] = polar(cfg.length[i], cfg.theta[i]);
    TangentImage img = tangent_image(cfg);

    Box box;
    box.add({0, 0});
    for (auto& p : arcs) box.add(p);
    for (auto& p : img.point) box.add(p);
    for (auto& p : report.corners) box.add(p);
    double w = box.xmax - box.xmin, h = box.ymax - box.ymin;
    double margin = 0.05 * std::max(w, h);
    if (margin == 0.0) margin = 1.0;

    // SVG's y axis points down; flip so the figure reads like the math.
    auto X = [&](Vec2 p) { return num(p.x); };
    auto Y = [&](Vec2 p) { return num(-p.y); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"" << num(box.xmin - margin) << " "
      << num(-box.ymax - margin) << " " << num(w + 2 * margin) << " "
      << num(h + 2 * margin) << "\">\n";
    double sw = 0.004 * std::max(w + 2 * margin, h + 2 * margin);

    s << "  <g stroke=\"#1f6fb4\" stroke-width=\"" << num(sw)
      << "\" fill=\"none\">\n";
    for (int i = 0; i < 4; ++i)
        s << "    <line x1=\"0\" y1=\"0\" x2=\"" << X(arcs[i]) << "\" y2=\""
          << Y(arcs[i]) << "\"/>\n";
    s << "    <polygon points=\"";
    for (int i = 0; i < 4; ++i)
        s << X(arcs[i]) << "," << Y(arcs[i]) << (i < 3 ? " " : "");
    s << "\"/>\n  </g>\n";

    s << "  <g stroke=\"#e08214\" stroke-width=\"" << num(sw)
      << "\" stroke-dasharray=\"" << num(3 * sw) << " " << num(2 * sw)
      << "\" fill=\"none\">\n";
    for (int i = 0; i < 4; ++i)
        s << "    <line x1=\"0\" y1=\"0\" x2=\"" << X(img.point[i])
          << "\" y2=\"" << Y(img.point[i]) << "\"/>\n";
    s << "  </g>\n";

    s << "  <polygon stroke=\"#2a9134\" stroke-width=\"" << num(2.5 * sw)
      << "\" fill=\"none\" points=\"";
    for (int i = 0; i < 4; ++i)
        s << X(report.corners[i]) << "," << Y(report.corners[i])
          << (i < 3 ? " " : "");
    s << "\"/>\n";

    s << "  <circle cx=\"0\" cy=\"0\" r=\"" << num(1.5 * sw)
      << "\" fill=\"#000000\"/>\n";
    for (int i = 0; i < 4; ++i) {
        s << "  <circle cx=\"" << X(report.corners[i]) << "\" cy=\""
          << Y(report.corners[i]) << "\" r=\"" << num(1.5 * sw)
          << "\" fill=\"#2a9134\"/>\n";
    }

    double tx = box.xmin - margin + 2 * sw;
    double ty = -box.ymax - margin;
    double fs = 5 * sw;
    const std::string roles[3] = {
        "arcs to vertices (solid)", "tangent images (dashed)",
        std::string("parallelogram, class ") + par_class_name(report.cls) +
            " (bold)"};
    const char* cols[3] = {"#1f6fb4", "#e08214", "#2a9134"};
    s << "  <g font-family=\"sans-serif\" font-size=\"" << num(fs) << "\">\n";
    for (int i = 0; i < 3; ++i)
        s << "    <text x=\"" << num(tx) << "\" y=\""
          << num(ty + fs * (i + 1.2)) << "\" fill=\"" << cols[i] << "\">"
          << roles[i] << "</text>\n";
    s << "  </g>\n</svg>\n";
    return s.str();
}

}  // namespace wftq
