#pragma once

#include <filesystem>
#include <string>

#include "angres/graph.hpp"
#include "angres/metrics.hpp"

namespace angres {

// Text formats. Readers throw ParseError with the offending line number.

/// `graph V`, then `e i j` (i < j, sorted), then `l i name`.
std::string format_graph(const LabeledGraph& graph);
LabeledGraph parse_graph(const std::string& text);

/// `rot i n1 n2 ...` (clockwise neighbors) per vertex, then `outer i j k`.
std::string format_embedding(const Embedding& embedding);
Embedding parse_embedding(const std::string& text);

/// `p i x y` per vertex, coordinates at 17 significant digits.
std::string format_drawing(const Drawing& drawing);
Drawing parse_drawing(const std::string& text);

std::string read_text(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace angres
