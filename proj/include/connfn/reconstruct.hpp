#pragma once

#include <vector>

#include "connfn/graph.hpp"
#include "connfn/oracle.hpp"

namespace connfn {

// Edge adjacencies a graph realizing the oracle would have to have.
struct AdjacencyStructure {
  GroundSet ground;
  std::vector<long long> singleton_value;  // lambda({e}) per element
  std::vector<mask_t> adjacent_row;        // symmetric, irreflexive

  bool adjacent(int e, int f) const { return (adjacent_row[e] >> f) & 1; }
};

// lambda({e,f}) < lambda({e}) + lambda({f}); at most 3 evaluations.
bool oracle_adjacent(CountedOracle& o, int e, int f);

// All n singleton and n(n-1)/2 pair evaluations.
AdjacencyStructure build_adjacency_structure(CountedOracle& o);

// Connected classes of the adjacency relation, ordered by lowest element.
std::vector<mask_t> split_components(const AdjacencyStructure& a);

// Candidate multigraphs for one component, on a local ground set listing the
// component's elements in ascending global order.  If the restriction of the
// oracle to the component is graphic, some candidate realizes it exactly.
// An empty list means no graph can (caller reports NOT GRAPHIC).
struct ComponentCandidates {
  mask_t component = 0;
  std::vector<int> global_index;  // local element -> global element
  std::vector<Multigraph> graphs;
};

inline constexpr int kCandidateCap = 64;

// May evaluate the oracle only on subsets of size <= 3 within the component.
// Components of at most 6 elements are enumerated exhaustively; larger ones
// go through a clique partition of the adjacency relation with parallel
// bundles contracted first.
ComponentCandidates component_candidates(CountedOracle& o,
                                         const AdjacencyStructure& a,
                                         mask_t component);

}  // namespace connfn
