#include "connfn/subset.hpp"

#include <unordered_set>

namespace connfn {

namespace {

void check_size(int n) {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("ground set size must be between 1 and 63, got " +
                                std::to_string(n));
  }
}

}  // namespace

GroundSet::GroundSet(int n) : size(n) { check_size(n); }

GroundSet::GroundSet(int n, std::vector<std::string> names)
    : size(n), labels(std::move(names)) {
  check_size(n);
  if (labels.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " +
                                std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate element label: " + l);
    }
  }
}

std::string GroundSet::label(int i) const {
  if (i < 0 || i >= size) {
    throw std::invalid_argument("element index out of range: " + std::to_string(i));
  }
  if (!labels.empty()) return labels[i];
  return "e" + std::to_string(i + 1);
}

int GroundSet::index_of(const std::string& name) const {
  for (int i = 0; i < size; ++i) {
    if (label(i) == name) return i;
  }
  return -1;
}

mask_t complement(mask_t x, const GroundSet& ground) {
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the ground set");
  }
  return x ^ ground.full_mask();
}

std::vector<int> elements_of(mask_t x) {
  std::vector<int> out;
  while (x != 0) {
    int i = std::countr_zero(x);
    out.push_back(i);
    x &= x - 1;
  }
  return out;
}

std::string format_subset(mask_t x, const GroundSet& ground) {
  std::string out = "{";
  bool first = true;
  for (int i : elements_of(x)) {
    if (!first) out += ",";
    out += ground.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace connfn
