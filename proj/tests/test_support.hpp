#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "connfn/graph.hpp"
#include "connfn/matroid.hpp"
#include "connfn/oracle.hpp"
#include "connfn/spike.hpp"

namespace connfn::testing {

inline GroundSet letters(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return GroundSet(n, std::move(labels));
}

// u - a - v - b - w
inline Multigraph path3() {
  return Multigraph::make(3, {{0, 1}, {1, 2}}, letters(2), {"u", "v", "w"});
}

inline Multigraph triangle() {
  return Multigraph::make(3, {{0, 1}, {1, 2}, {0, 2}}, letters(3), {"u", "v", "w"});
}

inline Multigraph two_k2() {
  return Multigraph::make(4, {{0, 1}, {2, 3}}, letters(2));
}

inline Multigraph star(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({0, i + 1});
  return Multigraph::make(k + 1, std::move(edges), letters(k));
}

inline Multigraph bundle(int k) {
  std::vector<Edge> edges(k, Edge{0, 1});
  return Multigraph::make(2, std::move(edges), letters(k));
}

inline Multigraph cycle(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return Multigraph::make(k, std::move(edges));
}

inline Multigraph complete_graph(int v) {
  std::vector<Edge> edges;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) edges.push_back({i, j});
  }
  return Multigraph::make(v, std::move(edges));
}

inline CountedOracle oracle_of(const Multigraph& g) {
  return CountedOracle(g.gamma_table());
}

inline RankTable uniform_matroid(int rank, int n) {
  RankTable r;
  r.ground = letters(n);
  r.rank.resize(std::size_t{1} << n);
  for (mask_t x = 0; x <= r.ground.full_mask(); ++x) {
    r.rank[x] = std::min(rank, popcount(x));
  }
  return r;
}

// Every matroid on {0..n-1}, enumerated through base families and the
// exchange axiom; rank(X) = max |B & X| over bases.
inline std::vector<RankTable> all_matroids(int n) {
  std::vector<RankTable> out;
  const mask_t full = (mask_t{1} << n) - 1;
  for (int rank = 0; rank <= n; ++rank) {
    std::vector<mask_t> k_sets;
    for (mask_t x = 0; x <= full; ++x) {
      if (popcount(x) == rank) k_sets.push_back(x);
    }
    const std::size_t fam_count = std::size_t{1} << k_sets.size();
    for (std::size_t pick = 1; pick < fam_count; ++pick) {
      std::vector<mask_t> bases;
      for (std::size_t i = 0; i < k_sets.size(); ++i) {
        if ((pick >> i) & 1) bases.push_back(k_sets[i]);
      }
      bool exchange = true;
      for (mask_t b1 : bases) {
        for (mask_t b2 : bases) {
          if (!exchange) break;
          mask_t only1 = b1 & ~b2;
          for (int x : elements_of(only1)) {
            bool found = false;
            for (int y : elements_of(b2 & ~b1)) {
              mask_t candidate = (b1 ^ bit(x)) | bit(y);
              if (std::find(bases.begin(), bases.end(), candidate) != bases.end()) {
                found = true;
                break;
              }
            }
            if (!found) {
              exchange = false;
              break;
            }
          }
        }
      }
      if (!exchange) continue;
      RankTable r;
      r.ground = GroundSet(n);
      r.rank.resize(std::size_t{1} << n);
      for (mask_t x = 0; x <= full; ++x) {
        int best = 0;
        for (mask_t b : bases) best = std::max(best, popcount(b & x));
        r.rank[x] = best;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline std::vector<IndependentSet> all_independent_sets_h3() {
  std::vector<IndependentSet> out;
  for (unsigned pick = 0; pick < 256; ++pick) {
    std::vector<tword_t> words;
    for (int w = 0; w < 8; ++w) {
      if ((pick >> w) & 1) words.push_back(static_cast<tword_t>(w));
    }
    bool ok = true;
    for (std::size_t i = 0; i < words.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (hn_adjacent(words[i], words[j])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(make_independent_set(3, std::move(words)));
  }
  return out;
}

inline IndependentSet random_independent_set(int n, std::mt19937_64& rng) {
  std::vector<tword_t> order(std::size_t{1} << n);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<tword_t>(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t target = rng() % (order.size() / 2 + 1);
  std::vector<tword_t> words;
  for (tword_t w : order) {
    if (words.size() >= target) break;
    bool ok = true;
    for (tword_t x : words) {
      if (hn_adjacent(w, x)) {
        ok = false;
        break;
      }
    }
    if (ok) words.push_back(w);
  }
  return make_independent_set(n, std::move(words));
}

inline SpikyTable random_spiky(int n, std::mt19937_64& rng) {
  const tword_t full = (tword_t{1} << n) - 1;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    SpikyTable t;
    t.n = n;
    t.transversal_values.assign(std::size_t{1} << n, n);
    for (tword_t w = 0; w <= full; ++w) {
      if (w > (w ^ full)) continue;
      int roll = static_cast<int>(rng() % 20);
      int v = n;
      if (roll == 0) {
        v = n - 2;
      } else if (roll <= 6) {
        v = n - 1;
      }
      t.transversal_values[w] = v;
      t.transversal_values[w ^ full] = v;
    }
    if (is_spiky(t)) return t;
  }
  throw std::runtime_error("random spiky sampling failed");
}

}  // namespace connfn::testing
