#pragma once

#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "connfn/set_function.hpp"

namespace connfn {

// Connectivity-function value oracle with query accounting.  A subset and
// its complement count as one distinct evaluation, since the promise on the
// source includes symmetry and any caller could dedupe on its own.  Cached
// values never change once recorded; eval is safe under concurrent callers
// and distinct_count is linearizable.
class CountedOracle {
 public:
  explicit CountedOracle(SetFunctionTable table);
  CountedOracle(GroundSet ground, std::function<long long(mask_t)> fn);

  long long eval(mask_t x);
  long long distinct_count() const;
  const GroundSet& ground() const { return ground_; }
  std::vector<mask_t> query_log() const;  // every eval call, in order

 private:
  GroundSet ground_;
  std::function<long long(mask_t)> fn_;
  mutable std::mutex mutex_;
  std::unordered_map<mask_t, long long> cache_;  // keyed by canonical_pair
  std::vector<mask_t> log_;
};

}  // namespace connfn
