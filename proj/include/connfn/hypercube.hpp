#pragma once

#include <cstdint>
#include <vector>

namespace connfn {

// Vertex of the hypercube H_n: one choice per leg, bit i-1 set iff y_i.
using tword_t = std::uint32_t;

inline int word_popcount(tword_t w) { return __builtin_popcount(w); }

inline tword_t word_complement(tword_t w, int n) {
  return ~w & ((tword_t{1} << n) - 1);
}

// Adjacent in H_n: the transversals differ in exactly one element.
inline bool hn_adjacent(tword_t a, tword_t b) {
  return word_popcount(a ^ b) == 1;
}

// Even parity: the number of legs choosing x is even.
inline bool even_parity(tword_t w, int n) {
  return ((n - word_popcount(w)) & 1) == 0;
}

// Connected components of the induced subgraph H_n[verts].
std::vector<std::vector<tword_t>> induced_components(
    int n, const std::vector<tword_t>& verts);

// (2^{m+1}+2)/3 for odd m, (2^{m+1}+4)/3 for even m; satisfies
// f(1) = 2, f(m+1) = 2f(m) for odd m, f(m+1) = 2f(m)-2 for even m.
long long buffered_path_length(int m);

// A path X_0..X_k in H_{2m} with X_k the complement of X_0 and no stray
// adjacencies among path entries and their complements.
struct BufferedPath {
  int m = 0;
  std::vector<tword_t> steps;  // k+1 transversal words

  int dimension() const { return 2 * m; }
  long long length() const { return static_cast<long long>(steps.size()) - 1; }

  bool operator==(const BufferedPath&) const = default;
};

// The inductive construction; result has length buffered_path_length(m),
// runs from the all-x to the all-y transversal, and passes is_buffered.
BufferedPath build_buffered_path(int m);

// Exhaustive check of the definition over all index pairs: consecutive
// steps at Hamming distance 1, distinct entries, X_k = complement(X_0),
// and any i<j with X_i a neighbour of X_j or of its complement must be
// consecutive or one of the forced pairs {1,k}, {0,k-1}.
bool is_buffered(const BufferedPath& p);

}  // namespace connfn
