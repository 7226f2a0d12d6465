#pragma once

#include <optional>
#include <vector>

#include "connfn/hypercube.hpp"
#include "connfn/matroid.hpp"
#include "connfn/set_function.hpp"

namespace connfn {

// Ground set E_n of a rank-n spike: legs L_i = {x_i, y_i}, n >= 3, with
// x_i at index 2(i-1) and y_i at index 2(i-1)+1.
struct SpikeGround {
  int n = 0;
  GroundSet ground;  // size 2n, labels x1,y1,...,xn,yn

  int x_index(int i) const { return 2 * (i - 1); }
  int y_index(int i) const { return 2 * (i - 1) + 1; }
  mask_t leg(int i) const { return mask_t{3} << (2 * (i - 1)); }
};

SpikeGround make_spike_ground(int n);

bool is_transversal_mask(mask_t x, int n);
mask_t mask_from_word(tword_t w, int n);
// Empty when X is not a transversal of E_n.
std::optional<tword_t> word_from_mask(mask_t x, int n);

// Independent set of H_n: no two members at Hamming distance 1.
struct IndependentSet {
  int n = 0;
  std::vector<tword_t> words;  // sorted, unique

  bool contains(tword_t w) const;
  bool operator==(const IndependentSet&) const = default;
};

// Validates independence; throws std::invalid_argument otherwise.
IndependentSet make_independent_set(int n, std::vector<tword_t> words);

// Rank of X in the spike S(I), by the four-case formula.
int spike_rank(const IndependentSet& I, mask_t x);
RankTable spike_rank_table(const IndependentSet& I);

// Connectivity of X in S(I); on transversals equals n - |I cap {X, E-X}|.
long long spike_mu(const IndependentSet& I, mask_t x);

// Circuits of S(I): leg pairs, I itself, and the (n+1)-subsets containing
// neither.  Throws if I is not independent.
CircuitFamily spike_circuits(const IndependentSet& I);

// Common restriction of every rank-n spike's connectivity function to
// non-transversal subsets.  Throws std::domain_error on a transversal.
long long lambda_n(int n, mask_t x);

// Symmetric assignment of transversal values in {n-2, n-1, n} extending
// lambda_n; non-transversal values are implied.
struct SpikyTable {
  int n = 0;
  std::vector<int> transversal_values;  // indexed by word, size 1 << n

  long long value(mask_t x) const;  // lambda_n off the transversals
  SetFunctionTable to_table() const;

  bool operator==(const SpikyTable&) const = default;
};

SpikyTable spike_mu_table(const IndependentSet& I);

// Symmetry, value range, and the adjacent-transversal bound
// value(X) + value(Y) >= 2n-2; extension of lambda_n holds by construction.
bool is_spiky(const SpikyTable& t);

// Reads a full table as a spiky function; throws std::invalid_argument when
// any of the four clauses fails (including agreement with lambda_n off the
// transversals).
SpikyTable spiky_from_table(const SetFunctionTable& t);

// n-1 on W, n elsewhere; W must be closed under complementation.
SpikyTable lambda_w(int n, const std::vector<tword_t>& w);

struct MatroidalVerdict {
  bool matroidal = false;
  std::optional<IndependentSet> witness_independent;  // when matroidal
  std::optional<tword_t> witness_transversal;         // X with X, E-X joined

  bool operator==(const MatroidalVerdict&) const = default;
};

// Decides whether a spiky function is the connectivity function of a
// matroid.  Odd n: always, with I read off the table.  Even n: component
// analysis of the induced subgraph of H_n on the transversals of value n-1.
// A MATROIDAL witness always reproduces the table through spike_mu; the
// construction throws std::logic_error rather than return a bad witness.
MatroidalVerdict decide_matroidal(const SpikyTable& t);

// Backtracking search over independent sets for one matching the table;
// n <= 4 (capacity_error above).
MatroidalVerdict brute_force_matroidal(const SpikyTable& t);

}  // namespace connfn
