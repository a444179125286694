#include "angres/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "angres/errors.hpp"

namespace angres {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string export_svg(const LabeledGraph& graph, const Drawing& drawing, const SvgOptions& options,
                       const Embedding* embedding) {
  if (!(options.width > 0.0) || !(options.stroke >= 0.0) || !(options.radius >= 0.0))
    throw ParameterError("svg: width must be positive, stroke and radius non-negative");
  const ValidationReport report =
      embedding ? validate_drawing(graph, *embedding, drawing) : check_planarity(graph, drawing);
  if (!report.ok()) throw DegenerateInput("refusing to export invalid drawing: " + report.violations.front().message);

  const Eigen::Index n = drawing.cols();
  Eigen::Vector2d lo(0, 0), hi(0, 0);
  if (n > 0) {
    lo = drawing.rowwise().minCoeff();
    hi = drawing.rowwise().maxCoeff();
  }
  const Eigen::Vector2d extent = hi - lo;
  double span = std::max(extent.x(), extent.y());
  if (!(span > 0.0)) span = 1.0;
  const double margin = 0.05 * span;
  const double scale = options.width / (std::max(extent.x(), 0.0) + 2 * margin);
  const double height = (extent.y() + 2 * margin) * scale;
  auto px = [&](Vertex v) { return (drawing(0, v) - lo.x() + margin) * scale; };
  auto py = [&](Vertex v) { return (hi.y() - drawing(1, v) + margin) * scale; };

  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.3f\" height=\"%.3f\" "
                "viewBox=\"0 0 %.3f %.3f\">\n",
                options.width, height, options.width, height);
  out += buf;
  out += "<g stroke=\"black\" stroke-linecap=\"round\">\n";
  for (const Edge& e : graph.edges()) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\" stroke-width=\"%.3f\"/>\n",
                  px(e.first), py(e.first), px(e.second), py(e.second), options.stroke);
    out += buf;
  }
  out += "</g>\n<g fill=\"white\" stroke=\"black\" font-family=\"sans-serif\" font-size=\"10\">\n";
  auto vertex = [&](Vertex v, const std::string& name) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.3f\"/>\n", px(v), py(v),
                  options.radius);
    out += buf;
    if (options.text) {
      std::snprintf(buf, sizeof buf, "<text x=\"%.6f\" y=\"%.6f\" fill=\"black\" stroke=\"none\">",
                    px(v) + options.radius + 1.0, py(v) - options.radius - 1.0);
      out += buf;
      out += escape(name) + "</text>\n";
    }
  };
  if (graph.labels().empty()) {
    for (Vertex v = 0; v < graph.vertex_count(); ++v) vertex(v, std::to_string(v));
  } else {
    for (const auto& [v, name] : graph.labels()) vertex(v, name);
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace angres
