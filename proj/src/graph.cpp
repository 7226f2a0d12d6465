#include "connfn/graph.hpp"

namespace connfn {

Multigraph Multigraph::make(int vertex_count, std::vector<Edge> edges,
                            GroundSet ground, std::vector<std::string> vertex_names) {
  Multigraph g;
  if (ground.size == 0) {
    ground = GroundSet(static_cast<int>(edges.size()));
  }
  if (ground.size != static_cast<int>(edges.size())) {
    throw std::invalid_argument("edge list does not match the ground set size");
  }
  if (vertex_count < 1 || vertex_count > 126) {
    throw std::invalid_argument("vertex count out of range");
  }
  if (!vertex_names.empty() &&
      vertex_names.size() != static_cast<std::size_t>(vertex_count)) {
    throw std::invalid_argument("vertex name list does not match vertex count");
  }
  g.ground = std::move(ground);
  g.vertex_count = vertex_count;
  g.vertex_names = std::move(vertex_names);
  g.edges = std::move(edges);
  g.stars.assign(vertex_count, 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges[i];
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loops are not allowed");
    }
    g.stars[e.u] |= bit(i);
    g.stars[e.v] |= bit(i);
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (g.stars[v] == 0) {
      throw std::invalid_argument("isolated vertex " + std::to_string(v));
    }
  }
  return g;
}

VertexSet Multigraph::vertex_support(mask_t x) const {
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the edge set");
  }
  VertexSet s;
  mask_t rest = x;
  while (rest != 0) {
    int i = std::countr_zero(rest);
    s.set(edges[i].u);
    s.set(edges[i].v);
    rest &= rest - 1;
  }
  return s;
}

VertexSet Multigraph::boundary(mask_t x) const {
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the edge set");
  }
  VertexSet s;
  const mask_t rest = x ^ ground.full_mask();
  for (int v = 0; v < vertex_count; ++v) {
    if ((stars[v] & x) != 0 && (stars[v] & rest) != 0) s.set(v);
  }
  return s;
}

int Multigraph::gamma(mask_t x) const {
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the edge set");
  }
  const mask_t rest = x ^ ground.full_mask();
  int count = 0;
  for (int v = 0; v < vertex_count; ++v) {
    if ((stars[v] & x) != 0 && (stars[v] & rest) != 0) ++count;
  }
  return count;
}

mask_t Multigraph::star(int v) const {
  if (v < 0 || v >= vertex_count) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
  return stars[v];
}

int Multigraph::degree(int v) const { return popcount(star(v)); }

std::string Multigraph::vertex_name(int v) const {
  if (v < 0 || v >= vertex_count) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
  if (!vertex_names.empty()) return vertex_names[v];
  return "v" + std::to_string(v + 1);
}

SetFunctionTable Multigraph::gamma_table() const {
  if (ground.size > 20) {
    throw capacity_error("gamma table refused for more than 20 edges");
  }
  SetFunctionTable t;
  t.ground = ground;
  t.values.resize(std::size_t{1} << ground.size);
  for (mask_t x = 0; x <= ground.full_mask(); ++x) {
    t.values[x] = gamma(x);
  }
  return t;
}

}  // namespace connfn
