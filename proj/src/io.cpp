#include "angres/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "angres/errors.hpp"
#include "angres/geometry.hpp"

namespace angres {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

// Splits a line into whitespace-separated tokens, dropping `#` comments.
std::vector<std::string> tokens(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long long to_int(const std::string& s, int lineno) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::logic_error&) {
    fail(lineno, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) fail(lineno, "expected an integer, got '" + s + "'");
  return v;
}

double to_real(const std::string& s, int lineno) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    fail(lineno, "expected a number, got '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) fail(lineno, "expected a finite number, got '" + s + "'");
  return v;
}

Vertex to_vertex(const std::string& s, long long n, int lineno) {
  const long long v = to_int(s, lineno);
  if (v < 0 || (n >= 0 && v >= n)) fail(lineno, "vertex index " + s + " out of range");
  return static_cast<Vertex>(v);
}

}  // namespace

std::string format_graph(const LabeledGraph& graph) {
  std::string out = "graph " + std::to_string(graph.vertex_count()) + "\n";
  for (const Edge& e : graph.edges())
    out += "e " + std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  for (const auto& [v, name] : graph.labels()) out += "l " + std::to_string(v) + " " + name + "\n";
  return out;
}

LabeledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1;
  LabeledGraph graph(0);
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (n < 0) {
      if (t[0] != "graph" || t.size() != 2) fail(lineno, "expected header 'graph <V>'");
      n = to_int(t[1], lineno);
      if (n < 0 || n > 100'000'000) fail(lineno, "bad vertex count");
      graph = LabeledGraph(static_cast<int>(n));
    } else if (t[0] == "e") {
      if (t.size() != 3) fail(lineno, "expected 'e <i> <j>'");
      const Vertex a = to_vertex(t[1], n, lineno), b = to_vertex(t[2], n, lineno);
      if (a == b) fail(lineno, "self-loop");
      if (!graph.add_edge(a, b)) fail(lineno, "duplicate edge");
    } else if (t[0] == "l") {
      if (t.size() != 3) fail(lineno, "expected 'l <i> <name>'");
      try {
        graph.set_label(to_vertex(t[1], n, lineno), t[2]);
      } catch (const std::exception& e) {
        fail(lineno, e.what());
      }
    } else {
      fail(lineno, "unknown record '" + t[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'graph <V>' header");
  return graph;
}

std::string format_embedding(const Embedding& embedding) {
  std::string out;
  for (std::size_t v = 0; v < embedding.rotation.size(); ++v) {
    out += "rot " + std::to_string(v);
    for (Vertex u : embedding.rotation[v]) out += " " + std::to_string(u);
    out += "\n";
  }
  out += "outer";
  for (Vertex v : embedding.outer) out += " " + std::to_string(v);
  out += "\n";
  return out;
}

Embedding parse_embedding(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Embedding emb;
  std::vector<char> seen;
  bool have_outer = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] == "rot") {
      if (t.size() < 2) fail(lineno, "expected 'rot <i> ...'");
      const Vertex v = to_vertex(t[1], -1, lineno);
      if (v >= 100'000'000) fail(lineno, "vertex index too large");
      if (static_cast<std::size_t>(v) >= emb.rotation.size()) {
        emb.rotation.resize(v + 1);
        seen.resize(v + 1, 0);
      }
      if (seen[v]) fail(lineno, "second rotation for vertex " + t[1]);
      seen[v] = 1;
      for (std::size_t i = 2; i < t.size(); ++i) emb.rotation[v].push_back(to_vertex(t[i], -1, lineno));
    } else if (t[0] == "outer") {
      if (have_outer) fail(lineno, "second outer face");
      if (t.size() < 4) fail(lineno, "outer face needs at least three vertices");
      have_outer = true;
      for (std::size_t i = 1; i < t.size(); ++i) emb.outer.push_back(to_vertex(t[i], -1, lineno));
    } else {
      fail(lineno, "unknown record '" + t[0] + "'");
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw ParseError("no rotation for vertex " + std::to_string(v));
  if (!have_outer) throw ParseError("missing 'outer' line");
  return emb;
}

std::string format_drawing(const Drawing& drawing) {
  std::string out;
  char buf[96];
  for (Eigen::Index v = 0; v < drawing.cols(); ++v) {
    std::snprintf(buf, sizeof buf, "p %lld %.17g %.17g\n", static_cast<long long>(v),
                  drawing(0, v), drawing(1, v));
    out += buf;
  }
  return out;
}

Drawing parse_drawing(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<Vertex, Point>> points;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] != "p" || t.size() != 4) fail(lineno, "expected 'p <i> <x> <y>'");
    points.emplace_back(to_vertex(t[1], 100'000'000, lineno),
                        Point(to_real(t[2], lineno), to_real(t[3], lineno)));
  }
  Drawing d(2, static_cast<Eigen::Index>(points.size()));
  std::vector<char> seen(points.size(), 0);
  for (const auto& [v, p] : points) {
    if (static_cast<std::size_t>(v) >= points.size())
      throw ParseError("drawing index " + std::to_string(v) + " out of range");
    if (seen[v]) throw ParseError("drawing lists vertex " + std::to_string(v) + " twice");
    seen[v] = 1;
    d.col(v) = p;
  }
  return d;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace angres
