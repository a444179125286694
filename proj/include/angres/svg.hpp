#pragma once

#include <string>

#include "angres/graph.hpp"
#include "angres/metrics.hpp"

namespace angres {

struct SvgOptions {
  double width = 800.0;  // pixels; height follows the aspect ratio
  double stroke = 1.0;
  double radius = 3.0;
  bool text = true;      // print labels next to their circles
};

/// One <line> per edge (sorted edge order) and one labelled <circle> per
/// labelled vertex; a graph without labels gets a circle per vertex, labelled
/// by index. The viewport is the bounding box plus a 5% margin, y pointing up.
/// Refuses (DegenerateInput) drawings that fail validate_drawing, or
/// check_planarity when no embedding is supplied.
std::string export_svg(const LabeledGraph& graph, const Drawing& drawing, const SvgOptions& options = {},
                       const Embedding* embedding = nullptr);

}  // namespace angres
