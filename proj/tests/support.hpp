#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "angres/families.hpp"
#include "angres/graph.hpp"
#include "angres/metrics.hpp"

namespace support {

using namespace angres;

inline EmbeddedGraph triangle() { return build_frame(1); }

// K4: frame(1) with one vertex in its inner face.
inline EmbeddedGraph k4() {
  EmbeddedGraph g = build_frame(1);
  const auto f = find_inner_face(g.embedding, 0, 1, 2);
  const Vertex v = g.graph.add_vertex();
  insert_into_face(g, v, *f);
  return g;
}

inline std::set<std::pair<int, int>> edge_set(const LabeledGraph& g) {
  std::set<std::pair<int, int>> s;
  for (const Edge& e : g.edges()) s.insert(e);
  return s;
}

// Frame edges written out from the definition: spokes from w, rungs u_k v_k,
// both chains and the diagonals u_{k+1} v_k.
inline std::set<std::pair<int, int>> frame_edges_oracle(int d) {
  std::set<std::pair<int, int>> s;
  auto add = [&](int a, int b) { s.insert({std::min(a, b), std::max(a, b)}); };
  for (int k = 1; k <= d; ++k) {
    add(0, k);
    add(0, d + k);
    add(k, d + k);
    if (k < d) {
      add(k, k + 1);
      add(d + k, d + k + 1);
      add(k + 1, d + k);
    }
  }
  return s;
}

// Quadratic simplicial elimination, independent of the library's verifier:
// number of degree-3 vertices with a triangular neighborhood that can be peeled
// before three vertices remain; -1 when it gets stuck.
inline int naive_elimination_length(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.first].insert(e.second);
    adj[e.second].insert(e.first);
  }
  std::vector<char> alive(n, 1);
  int remaining = n, steps = 0;
  while (remaining > 3) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[v] || adj[v].size() != 3) continue;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      if (adj[nb[0]].count(nb[1]) && adj[nb[0]].count(nb[2]) && adj[nb[1]].count(nb[2])) pick = v;
    }
    if (pick < 0) return -1;
    for (int u : adj[pick]) adj[u].erase(pick);
    adj[pick].clear();
    alive[pick] = 0;
    --remaining;
    ++steps;
  }
  return steps;
}

// Consecutive angles around each vertex by sorting polar angles; minimum over all.
inline double naive_resolution(const LabeledGraph& g, const Drawing& d) {
  double best = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<double> phi;
    for (Vertex u : g.neighbors(v)) phi.push_back(std::atan2(d(1, u) - d(1, v), d(0, u) - d(0, v)));
    if (phi.size() < 2) continue;
    std::sort(phi.begin(), phi.end());
    for (std::size_t i = 0; i + 1 < phi.size(); ++i) best = std::min(best, phi[i + 1] - phi[i]);
    best = std::min(best, phi.front() + 2 * std::numbers::pi - phi.back());
  }
  return best;
}

// Brute-force proper crossing test over all pairs of non-adjacent edges.
inline bool naive_has_crossing(const LabeledGraph& g, const Drawing& d) {
  const auto edges = g.edges();
  auto side = [&](int a, int b, int c) {
    const double v = (d(0, b) - d(0, a)) * (d(1, c) - d(1, a)) - (d(1, b) - d(1, a)) * (d(0, c) - d(0, a));
    return (v > 0) - (v < 0);
  };
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, e] = edges[j];
      if (a == c || a == e || b == c || b == e) continue;
      if (side(a, b, c) * side(a, b, e) <= 0 && side(c, e, a) * side(c, e, b) <= 0) return true;
    }
  return false;
}

inline Drawing jittered(const Drawing& d, const LabeledGraph& g, double scale, std::uint64_t seed,
                        const std::vector<Vertex>& fixed = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Drawing out = d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::find(fixed.begin(), fixed.end(), v) != fixed.end()) continue;
    double r = std::numeric_limits<double>::infinity();
    for (Vertex w : g.neighbors(v)) r = std::min(r, (d.col(w) - d.col(v)).norm());
    out(0, v) += scale * r * u(rng);
    out(1, v) += scale * r * u(rng);
  }
  return out;
}

}  // namespace support
