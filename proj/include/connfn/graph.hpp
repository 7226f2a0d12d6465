#pragma once

#include <bitset>
#include <string>
#include <vector>

#include "connfn/set_function.hpp"

namespace connfn {

struct Edge {
  int u = -1;
  int v = -1;
  bool operator==(const Edge&) const = default;
};

// A 63-element ground set allows up to 126 endpoints.
using VertexSet = std::bitset<128>;

// Labeled loopless multigraph; edge i carries ground-set element i.
// No isolated vertices and no loops; parallel edges are allowed.
struct Multigraph {
  GroundSet ground;
  int vertex_count = 0;
  std::vector<std::string> vertex_names;  // empty, or one per vertex
  std::vector<Edge> edges;
  std::vector<mask_t> stars;  // incident edge mask per vertex

  // Validates the invariants; ground defaults to unlabeled of edges.size().
  static Multigraph make(int vertex_count, std::vector<Edge> edges,
                         GroundSet ground = {},
                         std::vector<std::string> vertex_names = {});

  int edge_count() const { return static_cast<int>(edges.size()); }

  // V(X): vertices incident with some edge in X.
  VertexSet vertex_support(mask_t x) const;
  // delta(X) = V(X) & V(E-X).
  VertexSet boundary(mask_t x) const;
  // |V(X)| + |V(E-X)| - |V(E)| == |delta(X)|.
  int gamma(mask_t x) const;
  // All edges incident with v.
  mask_t star(int v) const;
  int degree(int v) const;
  std::string vertex_name(int v) const;

  SetFunctionTable gamma_table() const;

  bool operator==(const Multigraph&) const = default;
};

}  // namespace connfn
