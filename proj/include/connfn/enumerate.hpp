#pragma once

#include <functional>
#include <string>

#include "connfn/graph.hpp"

namespace connfn {

// Every loopless multigraph with edge_count labeled edges and no isolated
// vertices, one representative per vertex-renaming class.
void for_each_labeled_multigraph(
    int edge_count, const std::function<void(const Multigraph&)>& emit);

// As above, additionally deduplicated up to edge relabeling ("shapes").
// With exact_dedupe=false the canonical filter is skipped and isomorphic
// duplicates may be emitted; use that above 6 edges where canonicalization
// gets slow.
void for_each_multigraph_shape(
    int edge_count, bool exact_dedupe,
    const std::function<void(const Multigraph&)>& emit);

// Canonical key up to vertex renaming, and up to edge relabeling when
// ignore_edge_labels is set.  Computed component by component, so it stays
// cheap for disconnected graphs.
std::string canonical_graph_key(const Multigraph& g, bool ignore_edge_labels);

}  // namespace connfn
