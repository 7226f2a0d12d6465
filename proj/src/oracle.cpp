#include "connfn/oracle.hpp"

#include <memory>

namespace connfn {

CountedOracle::CountedOracle(SetFunctionTable table) : ground_(table.ground) {
  if (table.values.size() != (std::size_t{1} << ground_.size)) {
    throw std::invalid_argument("incomplete set-function table");
  }
  auto shared = std::make_shared<SetFunctionTable>(std::move(table));
  fn_ = [shared](mask_t x) { return shared->values[x]; };
}

CountedOracle::CountedOracle(GroundSet ground, std::function<long long(mask_t)> fn)
    : ground_(std::move(ground)), fn_(std::move(fn)) {}

long long CountedOracle::eval(mask_t x) {
  if (!ground_.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the ground set");
  }
  mask_t key = canonical_pair(x, ground_);
  std::lock_guard<std::mutex> lock(mutex_);
  log_.push_back(x);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  long long v = fn_(x);
  cache_.emplace(key, v);
  return v;
}

long long CountedOracle::distinct_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return static_cast<long long>(cache_.size());
}

std::vector<mask_t> CountedOracle::query_log() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return log_;
}

}  // namespace connfn
