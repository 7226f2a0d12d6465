#include "connfn/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace connfn {

namespace {

struct DfsState {
  int m = 0;
  int max_vertices = 0;
  bool sorted = false;  // require non-decreasing endpoint pairs (shape mode)
  std::vector<Edge> edges;
  const std::function<void(const std::vector<Edge>&, int)>* leaf = nullptr;
};

// First-use vertex numbering: a new vertex always takes the lowest unused
// index, so each vertex-renaming class is generated a bounded number of
// times (exact dedupe happens on the canonical key afterwards).
void dfs_assign(DfsState& st, int i, int used) {
  if (i == st.m) {
    (*st.leaf)(st.edges, used);
    return;
  }
  auto try_pair = [&](int u, int v, int new_used) {
    if (st.sorted && i > 0) {
      const Edge& prev = st.edges[i - 1];
      if (u < prev.u || (u == prev.u && v < prev.v)) return;
    }
    st.edges[i] = {u, v};
    dfs_assign(st, i + 1, new_used);
  };
  for (int u = 0; u < used; ++u) {
    for (int v = u + 1; v < used; ++v) try_pair(u, v, used);
  }
  if (used + 1 <= st.max_vertices) {
    for (int u = 0; u < used; ++u) try_pair(u, used, used + 1);
  }
  if (used + 2 <= st.max_vertices) try_pair(used, used + 1, used + 2);
}

void enumerate(int edge_count, bool sorted, bool dedupe,
               const std::function<void(const Multigraph&)>& emit) {
  if (edge_count < 1 || edge_count > 12) {
    throw capacity_error("multigraph enumeration supports 1..12 edges");
  }
  DfsState st;
  st.m = edge_count;
  st.max_vertices = 2 * edge_count;
  st.sorted = sorted;
  st.edges.resize(edge_count);
  std::unordered_set<std::string> seen;
  std::function<void(const std::vector<Edge>&, int)> leaf =
      [&](const std::vector<Edge>& edges, int used) {
        Multigraph g = Multigraph::make(used, edges);
        if (dedupe) {
          std::string key = canonical_graph_key(g, sorted);
          if (!seen.insert(std::move(key)).second) return;
        }
        emit(g);
      };
  st.leaf = &leaf;
  dfs_assign(st, 0, 0);
}

struct Component {
  std::vector<int> vertices;      // global ids, ascending
  std::vector<int> edge_indices;  // global edge ids, ascending
};

std::vector<Component> connected_components(const Multigraph& g) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Edge& e : g.edges) parent[find(e.u)] = find(e.v);

  std::vector<Component> comps;
  std::vector<int> comp_of(g.vertex_count, -1);
  for (int v = 0; v < g.vertex_count; ++v) {
    int root = find(v);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comp_of[v] = comp_of[root];
    comps[comp_of[root]].vertices.push_back(v);
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    comps[comp_of[g.edges[i].u]].edge_indices.push_back(i);
  }
  return comps;
}

// Lexicographically minimal endpoint encoding over all renamings of the
// component's vertices.  Edge order is the label order, or sorted pairs when
// labels are ignored.
std::string component_key(const Multigraph& g, const Component& c,
                          bool ignore_edge_labels) {
  const int k = static_cast<int>(c.vertices.size());
  std::vector<int> local(g.vertex_count, -1);
  for (int i = 0; i < k; ++i) local[c.vertices[i]] = i;

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur;
  std::vector<std::pair<int, int>> pairs(c.edge_indices.size());
  do {
    for (std::size_t j = 0; j < c.edge_indices.size(); ++j) {
      const Edge& e = g.edges[c.edge_indices[j]];
      int a = perm[local[e.u]];
      int b = perm[local[e.v]];
      pairs[j] = {std::min(a, b), std::max(a, b)};
    }
    if (ignore_edge_labels) std::sort(pairs.begin(), pairs.end());
    cur.clear();
    for (const auto& [a, b] : pairs) {
      cur.push_back(static_cast<char>('a' + a));
      cur.push_back(static_cast<char>('a' + b));
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::string canonical_graph_key(const Multigraph& g, bool ignore_edge_labels) {
  std::vector<Component> comps = connected_components(g);
  std::vector<std::string> keys;
  keys.reserve(comps.size());
  for (const Component& c : comps) {
    std::string k = component_key(g, c, ignore_edge_labels);
    if (!ignore_edge_labels) {
      // Which edges live in the component matters when labels are fixed.
      k += '#';
      for (int e : c.edge_indices) k += static_cast<char>('0' + e);
    }
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const std::string& k : keys) {
    out += k;
    out += '|';
  }
  return out;
}

void for_each_labeled_multigraph(
    int edge_count, const std::function<void(const Multigraph&)>& emit) {
  enumerate(edge_count, /*sorted=*/false, /*dedupe=*/true, emit);
}

void for_each_multigraph_shape(
    int edge_count, bool exact_dedupe,
    const std::function<void(const Multigraph&)>& emit) {
  enumerate(edge_count, /*sorted=*/true, exact_dedupe, emit);
}

}  // namespace connfn
