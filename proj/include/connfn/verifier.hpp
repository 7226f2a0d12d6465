#pragma once

#include <optional>
#include <string>
#include <vector>

#include "connfn/reconstruct.hpp"

namespace connfn {

// S itself, the empty set, and every singleton of S, deduplicated.
std::vector<mask_t> controlled_subsets(mask_t s);

// For e = uv: all unions of one controlled subset each of S_u - {e},
// S_v - {e} and {e}, deduplicated.
struct EControlledFamily {
  int edge = -1;
  std::vector<mask_t> sets;
};

EControlledFamily e_controlled_sets(const Multigraph& g, int edge);

// True iff the oracle matches gamma_G on every e-controlled set of every
// edge.  Under the connectivity-function promise this certifies equality of
// the full tables.
bool agrees_on_e_controlled(CountedOracle& o, const Multigraph& g);

// Same check for a component candidate; local element i maps to the global
// element global_index[i] when querying the oracle.
bool agrees_on_e_controlled_mapped(CountedOracle& o, const Multigraph& g,
                                   const std::vector<int>& global_index);

struct GraphicVerdict {
  bool graphic = false;
  std::optional<Multigraph> witness;
  std::string reason;  // set when not graphic
  long long queries_used = 0;
};

// End-to-end recognizer.  The oracle is promised to present a genuine
// connectivity function; under that promise GRAPHIC witnesses satisfy
// gamma = lambda on every subset, and NOT_GRAPHIC means no graph realizes
// the oracle.
GraphicVerdict recognize_graphic(CountedOracle& o);

// Declared query budget B(n): n + C(n,2) + 2 C(n,3) plus, when a witness
// was produced, sum over its edges of 2(d_u+1)(d_v+1); capped at
// 300 (n+4)^3.
long long recognizer_budget(int n, const Multigraph* witness);

}  // namespace connfn
