#pragma once

#include <optional>
#include <vector>

#include "connfn/spike.hpp"

namespace connfn {

// Transversals of E_{2m} split by how many legs choose x: fewer than m,
// exactly m, more than m.
struct VPartition {
  std::vector<tword_t> below;
  std::vector<tword_t> middle;
  std::vector<tword_t> above;
};

VPartition v_partition(int m);

struct AdversaryQuery {
  mask_t subset = 0;
  long long base_value = 0;
  std::optional<long long> alt_value;
  bool inert = false;  // non-transversal: answered by lambda_n in any table

  bool operator==(const AdversaryQuery&) const = default;
};

struct AdversaryTranscript {
  int m = 0;
  std::vector<AdversaryQuery> queries;
  SpikyTable base;
  std::optional<SpikyTable> alternative;
  bool base_matroidal = false;
  std::optional<bool> alternative_matroidal;
  bool agreement_certified = false;
  bool fooled = false;

  bool operator==(const AdversaryTranscript&) const = default;
};

// Base table lambda_W with W = V_{<m} u V_{>m} (matroidal).  If some middle
// transversal pair {X, E-X} avoids the queries, the alternative adds it and
// is not matroidal; any query set smaller than C(2m,m)/2 leaves such a pair
// free.  fooled means an alternative was produced, agreed with the base on
// every query, and the verdicts came out opposite.
AdversaryTranscript adversary_matroidal(int m,
                                        const std::vector<mask_t>& queries);

// Base table lambda_W for W the pair closure of a buffered path (not
// matroidal).  The alternative removes an unqueried complement pair and is
// matroidal; any query set smaller than f(m)/2 leaves a pair free.
AdversaryTranscript adversary_nonmatroidal(int m,
                                           const std::vector<mask_t>& queries);

}  // namespace connfn
