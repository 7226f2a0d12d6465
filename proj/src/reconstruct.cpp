#include "connfn/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "connfn/enumerate.hpp"

namespace connfn {

bool oracle_adjacent(CountedOracle& o, int e, int f) {
  if (e == f) throw std::invalid_argument("adjacency needs two distinct elements");
  long long pair = o.eval(bit(e) | bit(f));
  return pair < o.eval(bit(e)) + o.eval(bit(f));
}

AdjacencyStructure build_adjacency_structure(CountedOracle& o) {
  const int n = o.ground().size;
  AdjacencyStructure a;
  a.ground = o.ground();
  a.singleton_value.resize(n);
  a.adjacent_row.assign(n, 0);
  for (int e = 0; e < n; ++e) a.singleton_value[e] = o.eval(bit(e));
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (oracle_adjacent(o, e, f)) {
        a.adjacent_row[e] |= bit(f);
        a.adjacent_row[f] |= bit(e);
      }
    }
  }
  return a;
}

std::vector<mask_t> split_components(const AdjacencyStructure& a) {
  const int n = a.ground.size;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (a.adjacent(e, f)) parent[find(e)] = find(f);
    }
  }
  std::vector<mask_t> comp(n, 0);
  for (int e = 0; e < n; ++e) comp[find(e)] |= bit(e);
  std::vector<mask_t> out;
  for (int e = 0; e < n; ++e) {
    if (find(e) == e) out.push_back(comp[e]);
  }
  std::sort(out.begin(), out.end(),
            [](mask_t x, mask_t y) { return std::countr_zero(x) < std::countr_zero(y); });
  return out;
}

namespace {

// Everything a candidate generator needs about one component, in local
// element indices 0..m-1.
struct ComponentContext {
  int m = 0;
  GroundSet local_ground;
  std::vector<int> global_index;
  std::vector<long long> singleton;
  std::vector<mask_t> adj_row;
  // lambda on every local subset of size 1..3, keyed by local mask.
  std::unordered_map<mask_t, long long> small_value;
};

ComponentContext make_context(CountedOracle& o, const AdjacencyStructure& a,
                              mask_t component) {
  ComponentContext ctx;
  ctx.global_index = elements_of(component);
  ctx.m = static_cast<int>(ctx.global_index.size());

  std::vector<std::string> labels;
  labels.reserve(ctx.m);
  for (int g : ctx.global_index) labels.push_back(a.ground.label(g));
  ctx.local_ground = GroundSet(ctx.m, std::move(labels));

  ctx.singleton.resize(ctx.m);
  ctx.adj_row.assign(ctx.m, 0);
  for (int i = 0; i < ctx.m; ++i) {
    ctx.singleton[i] = a.singleton_value[ctx.global_index[i]];
    for (int j = 0; j < ctx.m; ++j) {
      if (i != j && a.adjacent(ctx.global_index[i], ctx.global_index[j])) {
        ctx.adj_row[i] |= bit(j);
      }
    }
  }

  auto global_mask = [&](mask_t local) {
    mask_t g = 0;
    for (int i : elements_of(local)) g |= bit(ctx.global_index[i]);
    return g;
  };
  for (int i = 0; i < ctx.m; ++i) {
    ctx.small_value[bit(i)] = o.eval(global_mask(bit(i)));
    for (int j = i + 1; j < ctx.m; ++j) {
      mask_t ij = bit(i) | bit(j);
      ctx.small_value[ij] = o.eval(global_mask(ij));
      for (int k = j + 1; k < ctx.m; ++k) {
        mask_t ijk = ij | bit(k);
        ctx.small_value[ijk] = o.eval(global_mask(ijk));
      }
    }
  }
  return ctx;
}

bool matches_small_values(const Multigraph& g, const ComponentContext& ctx) {
  for (const auto& [mask, lambda] : ctx.small_value) {
    if (g.gamma(mask) != lambda) return false;
  }
  return true;
}

// ---- small components: exhaustive enumeration --------------------------

struct SmallSearch {
  const ComponentContext* ctx = nullptr;
  std::vector<Edge> edges;
  std::vector<Multigraph> found;
  std::set<std::string> seen;
  long long leaf_visits = 0;
  bool overflow = false;

  static constexpr long long kLeafBudget = 2'000'000;

  void dfs(int i, int used) {
    if (overflow) return;
    const int m = ctx->m;
    if (i == m) {
      if (++leaf_visits > kLeafBudget) {
        overflow = true;
        return;
      }
      Multigraph g = Multigraph::make(used, edges, ctx->local_ground);
      if (!matches_small_values(g, *ctx)) return;
      if (!seen.insert(canonical_graph_key(g, false)).second) return;
      found.push_back(std::move(g));
      if (static_cast<int>(found.size()) > kCandidateCap) overflow = true;
      return;
    }
    auto consistent = [&](int u, int v) {
      for (int j = 0; j < i; ++j) {
        bool share = edges[j].u == u || edges[j].u == v || edges[j].v == u ||
                     edges[j].v == v;
        if (share != ((ctx->adj_row[i] >> j) & 1)) return false;
      }
      return true;
    };
    auto try_pair = [&](int u, int v, int new_used) {
      if (!consistent(u, v)) return;
      edges[i] = {u, v};
      dfs(i + 1, new_used);
    };
    const int max_vertices = std::min(ctx->m + 1, 7);
    for (int u = 0; u < used; ++u) {
      for (int v = u + 1; v < used; ++v) try_pair(u, v, used);
    }
    if (used + 1 <= max_vertices) {
      for (int u = 0; u < used; ++u) try_pair(u, used, used + 1);
    }
    if (used + 2 <= max_vertices) try_pair(used, used + 1, used + 2);
  }
};

std::vector<Multigraph> small_candidates(const ComponentContext& ctx) {
  SmallSearch s;
  s.ctx = &ctx;
  s.edges.resize(ctx.m);
  s.dfs(0, 0);
  if (s.overflow) return {};
  return s.found;
}

// ---- large components: bundle contraction + clique partition -----------

// Necessary condition for e, f to lie in one parallel bundle: adjacent,
// both singletons 2, lambda({e,f}) <= 2, identical neighbourhoods away from
// the pair.  The only other configuration passing it is a bundle plus a
// two-edge path over a degree-2 vertex; that shape is re-examined below.
bool maybe_parallel(const ComponentContext& ctx, int e, int f) {
  if (!((ctx.adj_row[e] >> f) & 1)) return false;
  if (ctx.singleton[e] != 2 || ctx.singleton[f] != 2) return false;
  auto it = ctx.small_value.find(bit(e) | bit(f));
  if (it == ctx.small_value.end() || it->second > 2) return false;
  mask_t strip = ~(bit(e) | bit(f));
  return (ctx.adj_row[e] & strip) == (ctx.adj_row[f] & strip);
}

struct Quotient {
  std::vector<std::vector<int>> classes;  // local element ids per class
  std::vector<mask_t> adj_row;            // over classes
};

// Groups hinted pairs and checks the grouping is self-consistent; empty
// result means the structure cannot come from a graph.
std::optional<Quotient> build_quotient(const ComponentContext& ctx) {
  const int m = ctx.m;
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      if (maybe_parallel(ctx, e, f)) parent[find(e)] = find(f);
    }
  }
  std::unordered_map<int, int> class_id;
  Quotient q;
  std::vector<int> class_of(m);
  for (int e = 0; e < m; ++e) {
    int root = find(e);
    auto [it, fresh] = class_id.emplace(root, static_cast<int>(q.classes.size()));
    if (fresh) q.classes.emplace_back();
    class_of[e] = it->second;
    q.classes[it->second].push_back(e);
  }
  for (const auto& cls : q.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!maybe_parallel(ctx, cls[i], cls[j])) return std::nullopt;
      }
    }
  }
  const int qn = static_cast<int>(q.classes.size());
  q.adj_row.assign(qn, 0);
  for (int a = 0; a < qn; ++a) {
    for (int b = a + 1; b < qn; ++b) {
      bool first = ((ctx.adj_row[q.classes[a][0]] >> q.classes[b][0]) & 1);
      for (int e : q.classes[a]) {
        for (int f : q.classes[b]) {
          if (((ctx.adj_row[e] >> f) & 1) != first) return std::nullopt;
        }
      }
      if (first) {
        q.adj_row[a] |= bit(b);
        q.adj_row[b] |= bit(a);
      }
    }
  }
  return q;
}

// A clique partition of the quotient adjacency: every class in exactly two
// cliques (singleton cliques model pendant endpoints), every adjacent pair
// sharing one.  The split of the pivot's neighbourhood determines the rest
// by propagation.
struct KrauszPartition {
  std::vector<mask_t> cliques;                 // over classes
  std::vector<std::array<int, 2>> class_cliques;  // two clique ids per class
};

bool is_clique(const std::vector<mask_t>& adj, mask_t s) {
  for (int e : elements_of(s)) {
    if (((s & ~bit(e)) & ~adj[e]) != 0) return false;
  }
  return true;
}

std::optional<KrauszPartition> propagate_partition(const std::vector<mask_t>& adj,
                                                   int pivot, mask_t part_a,
                                                   mask_t part_b) {
  const int q = static_cast<int>(adj.size());
  KrauszPartition p;
  std::vector<std::vector<int>> assigned(q);
  std::unordered_map<mask_t, int> by_mask;

  auto add_clique = [&](mask_t c) -> bool {
    int id = static_cast<int>(p.cliques.size());
    p.cliques.push_back(c);
    by_mask.emplace(c, id);
    for (int z : elements_of(c)) {
      assigned[z].push_back(id);
      if (assigned[z].size() > 2) return false;
    }
    return true;
  };

  if (!add_clique(part_a | bit(pivot))) return std::nullopt;
  if (!add_clique(part_b | bit(pivot))) return std::nullopt;

  for (bool progress = true; progress;) {
    progress = false;
    for (int x = 0; x < q; ++x) {
      if (assigned[x].size() != 1) continue;
      mask_t covered = p.cliques[assigned[x][0]];
      mask_t rest = adj[x] & ~covered;
      mask_t d = rest | bit(x);
      if (!is_clique(adj, d)) return std::nullopt;
      auto it = by_mask.find(d);
      if (it != by_mask.end()) {
        // Members of an existing clique were assigned at creation; seeing it
        // again without x holding it means the split is inconsistent.
        return std::nullopt;
      }
      if (!add_clique(d)) return std::nullopt;
      progress = true;
    }
  }

  for (int x = 0; x < q; ++x) {
    if (assigned[x].size() != 2) return std::nullopt;
    p.class_cliques.push_back({assigned[x][0], assigned[x][1]});
  }
  for (int a = 0; a < q; ++a) {
    for (int b : elements_of(adj[a])) {
      if (b < a) continue;
      bool shared = false;
      for (int ca : assigned[a]) {
        for (int cb : assigned[b]) shared |= (ca == cb);
      }
      if (!shared) return std::nullopt;
    }
  }
  return p;
}

std::vector<KrauszPartition> krausz_partitions(const std::vector<mask_t>& adj) {
  const int q = static_cast<int>(adj.size());
  std::vector<KrauszPartition> out;

  if (q == 1) {
    KrauszPartition p;
    p.cliques = {bit(0), bit(0)};
    p.class_cliques.push_back({0, 1});
    out.push_back(std::move(p));
    return out;
  }

  int pivot = 0;
  for (int e = 1; e < q; ++e) {
    if (popcount(adj[e]) < popcount(adj[pivot])) pivot = e;
  }
  const mask_t nbhd = adj[pivot];
  std::set<std::string> seen;
  // All unordered splits of the pivot neighbourhood into two cliques.
  for (mask_t a = nbhd;; a = (a - 1) & nbhd) {
    mask_t b = nbhd & ~a;
    if (a <= b) {
      if (is_clique(adj, a) && is_clique(adj, b)) {
        if (auto p = propagate_partition(adj, pivot, a, b)) {
          std::vector<mask_t> key = p->cliques;
          std::sort(key.begin(), key.end());
          std::string enc;
          for (mask_t c : key) enc += std::to_string(c) + ",";
          if (seen.insert(enc).second) {
            out.push_back(std::move(*p));
            if (static_cast<int>(out.size()) > kCandidateCap) return out;
          }
        }
      }
    }
    if (a == 0) break;
  }
  return out;
}

Multigraph expand_partition(const ComponentContext& ctx, const Quotient& q,
                            const KrauszPartition& p) {
  const int clique_count = static_cast<int>(p.cliques.size());
  std::vector<Edge> edges(ctx.m);
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    int u = p.class_cliques[c][0];
    int v = p.class_cliques[c][1];
    for (int e : q.classes[c]) edges[e] = {u, v};
  }
  return Multigraph::make(clique_count, std::move(edges), ctx.local_ground);
}

// Bundle-plus-path reading of a two-class component: the size-2 class
// becomes a path through a fresh degree-2 vertex, the other class the
// parallel bundle between the path's ends.
std::optional<Multigraph> theta_variant(const ComponentContext& ctx,
                                        const std::vector<int>& path_class,
                                        const std::vector<int>& bundle_class) {
  if (path_class.size() != 2 || bundle_class.empty()) return std::nullopt;
  std::vector<Edge> edges(ctx.m);
  for (int e : bundle_class) edges[e] = {0, 1};
  edges[path_class[0]] = {0, 2};
  edges[path_class[1]] = {2, 1};
  return Multigraph::make(3, std::move(edges), ctx.local_ground);
}

std::vector<Multigraph> large_candidates(const ComponentContext& ctx) {
  auto quotient = build_quotient(ctx);
  if (!quotient) return {};
  std::vector<Multigraph> found;
  for (const KrauszPartition& p : krausz_partitions(quotient->adj_row)) {
    Multigraph g = expand_partition(ctx, *quotient, p);
    if (matches_small_values(g, ctx)) found.push_back(std::move(g));
    if (static_cast<int>(found.size()) > kCandidateCap) return {};
  }
  if (quotient->classes.size() == 2) {
    for (int which : {0, 1}) {
      auto variant = theta_variant(ctx, quotient->classes[which],
                                   quotient->classes[1 - which]);
      if (variant && matches_small_values(*variant, ctx)) {
        found.push_back(std::move(*variant));
        if (static_cast<int>(found.size()) > kCandidateCap) return {};
      }
    }
  }
  return found;
}

}  // namespace

ComponentCandidates component_candidates(CountedOracle& o,
                                         const AdjacencyStructure& a,
                                         mask_t component) {
  if (component == 0 || !a.ground.valid_mask(component)) {
    throw std::invalid_argument("component must be a nonempty subset of the ground set");
  }
  ComponentContext ctx = make_context(o, a, component);

  ComponentCandidates out;
  out.component = component;
  out.global_index = ctx.global_index;

  if (ctx.m == 1) {
    // The only loop-free option for an isolated element.
    Multigraph k2 = Multigraph::make(2, {{0, 1}}, ctx.local_ground);
    out.graphs.push_back(std::move(k2));
    return out;
  }
  out.graphs = ctx.m <= 6 ? small_candidates(ctx) : large_candidates(ctx);
  return out;
}

}  // namespace connfn
