#pragma once

#include <string>

#include <json.hpp>

#include "connfn/adversary.hpp"
#include "connfn/graph.hpp"
#include "connfn/hypercube.hpp"
#include "connfn/matroid.hpp"
#include "connfn/set_function.hpp"
#include "connfn/spike.hpp"
#include "connfn/verifier.hpp"

namespace connfn {

// Deterministic key order keeps emitted fixtures diff-able.
using json = nlohmann::ordered_json;

// Subsets serialize as label arrays when the ground set is labeled, and
// parse from label arrays or "0x.."/"0b.." mask strings.
json subset_to_json(mask_t x, const GroundSet& ground);
mask_t subset_from_json(const json& j, const GroundSet& ground);

std::string word_to_string(tword_t w, int n);  // "0b0101", leg i at bit i-1
tword_t word_from_string(const std::string& s, int n);

// {"n":., "labels":[..], "values":[{"set":.., "value":..}, ..]}; subsets
// missing from "values" take "default" when present and are an error
// otherwise.  Values must be integers.
json table_to_json(const SetFunctionTable& t);
SetFunctionTable table_from_json(const json& j);

// Same layout with per-entry key "rank".
json rank_table_to_json(const RankTable& r);
RankTable rank_table_from_json(const json& j);

// {"vertices":[..], "edges":[{"label":.., "ends":[u,v]}, ..]}
json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const json& j);

// {"n":., "transversals":[{"word":"0b..", "value":..}, ..]}; unlisted
// transversals default to n.
json spiky_to_json(const SpikyTable& t);
SpikyTable spiky_from_json(const json& j);

json buffered_path_to_json(const BufferedPath& p);
BufferedPath buffered_path_from_json(const json& j);

json transcript_to_json(const AdversaryTranscript& t);
AdversaryTranscript transcript_from_json(const json& j);

json verdict_to_json(const GraphicVerdict& v);

}  // namespace connfn
