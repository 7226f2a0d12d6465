#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace connfn {

// A subset of an indexed ground set, one bit per element.
using mask_t = std::uint64_t;

inline int popcount(mask_t x) { return std::popcount(x); }

inline mask_t bit(int i) { return mask_t{1} << i; }

// Raised when an instance exceeds what the tool is willing to materialize.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ground set of up to 63 elements with optional, pairwise distinct labels.
struct GroundSet {
  int size = 0;
  std::vector<std::string> labels;  // empty, or exactly one name per element

  GroundSet() = default;
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> names);

  mask_t full_mask() const { return (mask_t{1} << size) - 1; }
  bool valid_mask(mask_t x) const { return (x & ~full_mask()) == 0; }
  std::string label(int i) const;
  int index_of(const std::string& name) const;  // -1 if unknown

  bool operator==(const GroundSet&) const = default;
};

// E - X.  Throws std::invalid_argument if X has bits outside the ground set.
mask_t complement(mask_t x, const GroundSet& ground);

// Canonical representative of {X, E-X}; used for query accounting.
inline mask_t canonical_pair(mask_t x, const GroundSet& ground) {
  mask_t c = x ^ ground.full_mask();
  return x < c ? x : c;
}

std::vector<int> elements_of(mask_t x);

std::string format_subset(mask_t x, const GroundSet& ground);

}  // namespace connfn
