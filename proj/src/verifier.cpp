#include "connfn/verifier.hpp"

#include <algorithm>

namespace connfn {

std::vector<mask_t> controlled_subsets(mask_t s) {
  std::vector<mask_t> out{0, s};
  for (int e : elements_of(s)) out.push_back(bit(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EControlledFamily e_controlled_sets(const Multigraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) {
    throw std::invalid_argument("unknown edge index " + std::to_string(edge));
  }
  const Edge& e = g.edges[edge];
  const mask_t su = g.star(e.u) & ~bit(edge);
  const mask_t sv = g.star(e.v) & ~bit(edge);

  EControlledFamily fam;
  fam.edge = edge;
  for (mask_t a : controlled_subsets(su)) {
    for (mask_t b : controlled_subsets(sv)) {
      fam.sets.push_back(a | b);
      fam.sets.push_back(a | b | bit(edge));
    }
  }
  std::sort(fam.sets.begin(), fam.sets.end());
  fam.sets.erase(std::unique(fam.sets.begin(), fam.sets.end()), fam.sets.end());
  return fam;
}

bool agrees_on_e_controlled_mapped(CountedOracle& o, const Multigraph& g,
                                   const std::vector<int>& global_index) {
  if (global_index.size() != static_cast<std::size_t>(g.edge_count())) {
    throw std::invalid_argument("element mapping does not match the graph");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    EControlledFamily fam = e_controlled_sets(g, e);
    for (mask_t y : fam.sets) {
      mask_t global = 0;
      for (int i : elements_of(y)) global |= bit(global_index[i]);
      if (o.eval(global) != g.gamma(y)) return false;
    }
  }
  return true;
}

bool agrees_on_e_controlled(CountedOracle& o, const Multigraph& g) {
  if (g.ground.size != o.ground().size) {
    throw std::invalid_argument("graph and oracle live on different ground sets");
  }
  std::vector<int> identity(g.ground.size);
  for (int i = 0; i < g.ground.size; ++i) identity[i] = i;
  return agrees_on_e_controlled_mapped(o, g, identity);
}

GraphicVerdict recognize_graphic(CountedOracle& o) {
  const GroundSet& ground = o.ground();
  const int n = ground.size;

  GraphicVerdict verdict;
  auto fail = [&](std::string why) {
    verdict.graphic = false;
    verdict.reason = std::move(why);
    verdict.queries_used = o.distinct_count();
    return verdict;
  };

  for (int e = 0; e < n; ++e) {
    long long v = o.eval(bit(e));
    if (v < 0 || v > 2) {
      return fail("value of " + format_subset(bit(e), ground) +
                  " is outside {0,1,2}; no graph matches");
    }
  }

  AdjacencyStructure adj = build_adjacency_structure(o);
  std::vector<Multigraph> chosen;
  std::vector<std::vector<int>> maps;
  for (mask_t comp : split_components(adj)) {
    ComponentCandidates cands = component_candidates(o, adj, comp);
    if (cands.graphs.empty()) {
      return fail("no graph realizes component " + format_subset(comp, ground));
    }
    const Multigraph* pick = nullptr;
    for (const Multigraph& g : cands.graphs) {
      if (agrees_on_e_controlled_mapped(o, g, cands.global_index)) {
        pick = &g;
        break;
      }
    }
    if (!pick) {
      return fail("no candidate for component " + format_subset(comp, ground) +
                  " agrees on its e-controlled sets");
    }
    chosen.push_back(*pick);
    maps.push_back(cands.global_index);
  }

  int total_vertices = 0;
  for (const Multigraph& g : chosen) total_vertices += g.vertex_count;
  std::vector<Edge> edges(n);
  int offset = 0;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    for (int e = 0; e < chosen[c].edge_count(); ++e) {
      const Edge& le = chosen[c].edges[e];
      edges[maps[c][e]] = {offset + le.u, offset + le.v};
    }
    offset += chosen[c].vertex_count;
  }
  verdict.graphic = true;
  verdict.witness = Multigraph::make(total_vertices, std::move(edges), ground);
  verdict.queries_used = o.distinct_count();
  return verdict;
}

long long recognizer_budget(int n, const Multigraph* witness) {
  const long long nn = n;
  long long base = nn + nn * (nn - 1) / 2 + 2 * (nn * (nn - 1) * (nn - 2) / 6);
  if (witness != nullptr) {
    for (const Edge& e : witness->edges) {
      long long du = witness->degree(e.u) - 1;
      long long dv = witness->degree(e.v) - 1;
      base += 2 * (du + 1) * (dv + 1);
    }
  }
  const long long cap = 300LL * (nn + 4) * (nn + 4) * (nn + 4);
  return std::min(base, cap);
}

}  // namespace connfn
