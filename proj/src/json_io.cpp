#include "connfn/json_io.hpp"

#include <algorithm>

namespace connfn {

namespace {

long long require_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return j.get<long long>();
}

mask_t parse_mask_string(const std::string& s, const GroundSet& ground) {
  mask_t x = 0;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
    x = std::stoull(s.substr(2), nullptr, 16);
  } else if (s.rfind("0b", 0) == 0 || s.rfind("0B", 0) == 0) {
    for (char c : s.substr(2)) {
      if (c != '0' && c != '1') throw std::invalid_argument("bad binary mask: " + s);
      x = (x << 1) | static_cast<mask_t>(c - '0');
    }
  } else {
    throw std::invalid_argument("subset string must start with 0x or 0b: " + s);
  }
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset mask has bits outside the ground set: " + s);
  }
  return x;
}

GroundSet ground_from_json(const json& j, const char* size_key = "n") {
  if (!j.contains(size_key)) {
    throw std::invalid_argument(std::string("missing \"") + size_key + "\"");
  }
  int n = static_cast<int>(require_integer(j.at(size_key), size_key));
  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    return GroundSet(n, std::move(labels));
  }
  return GroundSet(n);
}

// E_n labels for any dimension, including the degenerate n = 2 used by the
// hypercube experiments.
GroundSet spike_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
  }
  return GroundSet(2 * n, std::move(labels));
}

}  // namespace

json subset_to_json(mask_t x, const GroundSet& ground) {
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the ground set");
  }
  if (ground.labels.empty()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(x));
    return json(buf);
  }
  json arr = json::array();
  for (int i : elements_of(x)) arr.push_back(ground.label(i));
  return arr;
}

mask_t subset_from_json(const json& j, const GroundSet& ground) {
  if (j.is_string()) return parse_mask_string(j.get<std::string>(), ground);
  if (!j.is_array()) {
    throw std::invalid_argument("subset must be a label array or a mask string");
  }
  mask_t x = 0;
  for (const auto& item : j) {
    std::string name = item.get<std::string>();
    int idx = ground.index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown element label: " + name);
    x |= bit(idx);
  }
  return x;
}

std::string word_to_string(tword_t w, int n) {
  std::string s = "0b";
  for (int i = n - 1; i >= 0; --i) s += ((w >> i) & 1) ? '1' : '0';
  return s;
}

tword_t word_from_string(const std::string& s, int n) {
  if (s.rfind("0b", 0) != 0 && s.rfind("0B", 0) != 0) {
    throw std::invalid_argument("transversal word must start with 0b: " + s);
  }
  std::string bits = s.substr(2);
  if (bits.empty() || bits.size() > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("transversal word does not fit " + std::to_string(n) +
                                " legs: " + s);
  }
  tword_t w = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad transversal word: " + s);
    w = (w << 1) | static_cast<tword_t>(c - '0');
  }
  return w;
}

json table_to_json(const SetFunctionTable& t) {
  json j;
  j["n"] = t.ground.size;
  if (!t.ground.labels.empty()) j["labels"] = t.ground.labels;
  json values = json::array();
  for (mask_t x = 0; x <= t.ground.full_mask(); ++x) {
    json entry;
    entry["set"] = subset_to_json(x, t.ground);
    entry["value"] = t.values[x];
    values.push_back(std::move(entry));
  }
  j["values"] = std::move(values);
  return j;
}

namespace {

// Shared by the value and rank table readers.
template <typename Out>
void read_table(const json& j, const char* entry_key, GroundSet& ground,
                std::vector<Out>& out) {
  ground = ground_from_json(j);
  if (ground.size > 20) {
    throw capacity_error("explicit tables support at most 20 elements");
  }
  const std::size_t count = std::size_t{1} << ground.size;
  std::vector<char> present(count, 0);
  out.assign(count, 0);
  if (!j.contains("values") || !j.at("values").is_array()) {
    throw std::invalid_argument("missing \"values\" array");
  }
  for (const auto& entry : j.at("values")) {
    mask_t x = subset_from_json(entry.at("set"), ground);
    if (present[x]) {
      throw std::invalid_argument("duplicate table entry for " +
                                  format_subset(x, ground));
    }
    present[x] = 1;
    out[x] = static_cast<Out>(require_integer(entry.at(entry_key), entry_key));
  }
  bool has_default = j.contains("default");
  Out fallback = 0;
  if (has_default) {
    fallback = static_cast<Out>(require_integer(j.at("default"), "default"));
  }
  for (mask_t x = 0; x < count; ++x) {
    if (present[x]) continue;
    if (!has_default) {
      throw std::invalid_argument("missing table entry for " +
                                  format_subset(x, ground) +
                                  " and no \"default\" value");
    }
    out[x] = fallback;
  }
}

}  // namespace

SetFunctionTable table_from_json(const json& j) {
  SetFunctionTable t;
  read_table(j, "value", t.ground, t.values);
  return t;
}

json rank_table_to_json(const RankTable& r) {
  json j;
  j["n"] = r.ground.size;
  if (!r.ground.labels.empty()) j["labels"] = r.ground.labels;
  json values = json::array();
  for (mask_t x = 0; x <= r.ground.full_mask(); ++x) {
    json entry;
    entry["set"] = subset_to_json(x, r.ground);
    entry["rank"] = r.rank[x];
    values.push_back(std::move(entry));
  }
  j["values"] = std::move(values);
  return j;
}

RankTable rank_table_from_json(const json& j) {
  RankTable r;
  read_table(j, "rank", r.ground, r.rank);
  return r;
}

json graph_to_json(const Multigraph& g) {
  json j;
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count; ++v) vertices.push_back(g.vertex_name(v));
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    json entry;
    entry["label"] = g.ground.label(e);
    entry["ends"] = json::array({g.vertex_name(g.edges[e].u), g.vertex_name(g.edges[e].v)});
    edges.push_back(std::move(entry));
  }
  j["edges"] = std::move(edges);
  return j;
}

Multigraph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph needs \"vertices\" and \"edges\"");
  }
  std::vector<std::string> names;
  for (const auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto vertex_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    throw std::invalid_argument("unknown vertex name: " + name);
  };
  for (const auto& entry : j.at("edges")) {
    labels.push_back(entry.at("label").get<std::string>());
    const auto& ends = entry.at("ends");
    if (!ends.is_array() || ends.size() != 2) {
      throw std::invalid_argument("edge \"ends\" must list two vertices");
    }
    edges.push_back({vertex_index(ends[0].get<std::string>()),
                     vertex_index(ends[1].get<std::string>())});
  }
  if (edges.empty()) throw std::invalid_argument("graph has no edges");
  GroundSet ground(static_cast<int>(labels.size()), std::move(labels));
  return Multigraph::make(static_cast<int>(names.size()), std::move(edges),
                          std::move(ground), std::move(names));
}

json spiky_to_json(const SpikyTable& t) {
  json j;
  j["n"] = t.n;
  json entries = json::array();
  for (tword_t w = 0; w < t.transversal_values.size(); ++w) {
    if (t.transversal_values[w] == t.n) continue;  // the documented default
    json entry;
    entry["word"] = word_to_string(w, t.n);
    entry["value"] = t.transversal_values[w];
    entries.push_back(std::move(entry));
  }
  j["transversals"] = std::move(entries);
  return j;
}

SpikyTable spiky_from_json(const json& j) {
  if (!j.contains("n")) throw std::invalid_argument("missing \"n\"");
  int n = static_cast<int>(require_integer(j.at("n"), "n"));
  if (n < 2 || n > 20) {
    throw capacity_error("spiky tables support 2 <= n <= 20");
  }
  SpikyTable t;
  t.n = n;
  t.transversal_values.assign(std::size_t{1} << n, n);
  if (j.contains("transversals")) {
    for (const auto& entry : j.at("transversals")) {
      tword_t w = word_from_string(entry.at("word").get<std::string>(), n);
      t.transversal_values[w] =
          static_cast<int>(require_integer(entry.at("value"), "value"));
    }
  }
  return t;
}

json buffered_path_to_json(const BufferedPath& p) {
  json j;
  j["m"] = p.m;
  j["length"] = p.length();
  json steps = json::array();
  for (tword_t w : p.steps) steps.push_back(word_to_string(w, p.dimension()));
  j["path"] = std::move(steps);
  j["buffered"] = is_buffered(p);
  return j;
}

BufferedPath buffered_path_from_json(const json& j) {
  BufferedPath p;
  p.m = static_cast<int>(require_integer(j.at("m"), "m"));
  if (p.m < 1 || p.m > 14) throw std::invalid_argument("m out of range");
  for (const auto& s : j.at("path")) {
    p.steps.push_back(word_from_string(s.get<std::string>(), p.dimension()));
  }
  return p;
}

json transcript_to_json(const AdversaryTranscript& t) {
  const int n = 2 * t.m;
  GroundSet ground = spike_labels(n);
  json j;
  j["m"] = t.m;
  j["n"] = n;
  j["fooled"] = t.fooled;
  j["agreement_certified"] = t.agreement_certified;
  j["base_matroidal"] = t.base_matroidal;
  if (t.alternative_matroidal) {
    j["alternative_matroidal"] = *t.alternative_matroidal;
  } else {
    j["alternative_matroidal"] = nullptr;
  }
  json queries = json::array();
  for (const AdversaryQuery& q : t.queries) {
    json entry;
    entry["set"] = subset_to_json(q.subset, ground);
    entry["base_value"] = q.base_value;
    if (q.alt_value) {
      entry["alt_value"] = *q.alt_value;
    } else {
      entry["alt_value"] = nullptr;
    }
    entry["inert"] = q.inert;
    queries.push_back(std::move(entry));
  }
  j["queries"] = std::move(queries);
  j["base"] = spiky_to_json(t.base);
  j["alternative"] = t.alternative ? spiky_to_json(*t.alternative) : json(nullptr);
  return j;
}

AdversaryTranscript transcript_from_json(const json& j) {
  AdversaryTranscript t;
  t.m = static_cast<int>(require_integer(j.at("m"), "m"));
  GroundSet ground = spike_labels(2 * t.m);
  t.fooled = j.at("fooled").get<bool>();
  t.agreement_certified = j.at("agreement_certified").get<bool>();
  t.base_matroidal = j.at("base_matroidal").get<bool>();
  if (!j.at("alternative_matroidal").is_null()) {
    t.alternative_matroidal = j.at("alternative_matroidal").get<bool>();
  }
  for (const auto& entry : j.at("queries")) {
    AdversaryQuery q;
    q.subset = subset_from_json(entry.at("set"), ground);
    q.base_value = require_integer(entry.at("base_value"), "base_value");
    if (!entry.at("alt_value").is_null()) {
      q.alt_value = require_integer(entry.at("alt_value"), "alt_value");
    }
    q.inert = entry.at("inert").get<bool>();
    t.queries.push_back(q);
  }
  t.base = spiky_from_json(j.at("base"));
  if (!j.at("alternative").is_null()) {
    t.alternative = spiky_from_json(j.at("alternative"));
  }
  return t;
}

json verdict_to_json(const GraphicVerdict& v) {
  json j;
  j["graphic"] = v.graphic;
  j["witness"] = v.witness ? graph_to_json(*v.witness) : json(nullptr);
  if (!v.graphic) j["reason"] = v.reason;
  j["queries"] = v.queries_used;
  return j;
}

}  // namespace connfn
