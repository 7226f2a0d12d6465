#include "connfn/hypercube.hpp"

#include <stdexcept>
#include <unordered_map>

#include "connfn/subset.hpp"

namespace connfn {

std::vector<std::vector<tword_t>> induced_components(
    int n, const std::vector<tword_t>& verts) {
  std::unordered_map<tword_t, int> index;
  for (tword_t w : verts) index.emplace(w, -1);

  std::vector<std::vector<tword_t>> comps;
  for (tword_t start : verts) {
    if (index[start] >= 0) continue;
    int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::vector<tword_t> stack{start};
    index[start] = id;
    while (!stack.empty()) {
      tword_t w = stack.back();
      stack.pop_back();
      comps[id].push_back(w);
      for (int i = 0; i < n; ++i) {
        tword_t nb = w ^ (tword_t{1} << i);
        auto it = index.find(nb);
        if (it != index.end() && it->second < 0) {
          it->second = id;
          stack.push_back(nb);
        }
      }
    }
  }
  return comps;
}

long long buffered_path_length(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  long long p = 1LL << (m + 1);
  return (m % 2 == 1) ? (p + 2) / 3 : (p + 4) / 3;
}

BufferedPath build_buffered_path(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m > 14) throw capacity_error("buffered path construction supports m <= 14");

  // m = 1: any length-2 path from all-x to all-y works.
  std::vector<tword_t> path{0b00, 0b01, 0b11};
  for (int mm = 1; mm < m; ++mm) {
    // Extend from H_{2mm} to H_{2mm+2}: walk the base path at half speed
    // with a fixed excursion pattern in the two new coordinates, repeating
    // with period 8 in the new index.
    const int lo = 2 * mm;      // new x/y coordinate index (leg 2mm+1)
    const int hi = 2 * mm + 1;  // leg 2mm+2
    const tword_t lo_bit = tword_t{1} << lo;
    const tword_t hi_bit = tword_t{1} << hi;
    const long long len = buffered_path_length(mm + 1);
    std::vector<tword_t> next(len + 1);
    for (long long i = 0; i <= len; ++i) {
      long long base;
      tword_t add;
      switch (i % 8) {
        case 0: base = i / 2; add = 0; break;
        case 1: base = (i - 1) / 2 + 1; add = 0; break;
        case 2: base = (i - 2) / 2 + 2; add = 0; break;
        case 3: base = (i - 3) / 2 + 2; add = hi_bit; break;
        case 4: base = (i - 4) / 2 + 2; add = lo_bit | hi_bit; break;
        case 5: base = (i - 5) / 2 + 3; add = lo_bit | hi_bit; break;
        case 6: base = (i - 6) / 2 + 4; add = lo_bit | hi_bit; break;
        default: base = (i - 7) / 2 + 4; add = hi_bit; break;
      }
      next[i] = path[base] | add;
    }
    path = std::move(next);
  }

  BufferedPath p;
  p.m = m;
  p.steps = std::move(path);
  return p;
}

namespace {

inline bool words_adjacent(tword_t a, tword_t b) {
  return word_popcount(a ^ b) == 1;
}

}  // namespace

bool is_buffered(const BufferedPath& p) {
  const int n = p.dimension();
  const std::vector<tword_t>& xs = p.steps;
  if (xs.size() < 2) return false;
  const std::size_t k = xs.size() - 1;
  const tword_t full = (tword_t{1} << n) - 1;

  if (xs[k] != (xs[0] ^ full)) return false;
  for (std::size_t i = 0; i + 1 <= k; ++i) {
    if (!words_adjacent(xs[i], xs[i + 1])) return false;
  }
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      if (xs[i] == xs[j]) return false;
      bool neighbour = words_adjacent(xs[i], xs[j]) ||
                       words_adjacent(xs[i], xs[j] ^ full);
      if (!neighbour) continue;
      bool allowed = (j == i + 1) || (i == 1 && j == k) || (i == 0 && j == k - 1);
      if (!allowed) return false;
    }
  }
  return true;
}

}  // namespace connfn
