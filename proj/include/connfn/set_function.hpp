#pragma once

#include <vector>

#include "connfn/subset.hpp"

namespace connfn {

// Explicit integer set-function table over all 2^n subsets.
struct SetFunctionTable {
  GroundSet ground;
  std::vector<long long> values;  // indexed by subset mask, size 1 << n

  long long value(mask_t x) const;

  bool operator==(const SetFunctionTable&) const = default;
};

enum class Axiom { normalised, symmetric, submodular, unit_increase };

const char* axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom{};
  mask_t x = 0;
  mask_t y = 0;  // second subset, for axioms that involve one
  long long lhs = 0;
  long long rhs = 0;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks that the table is normalised, symmetric and submodular.
// Submodularity is checked by the full pairwise definition; one witness is
// recorded per violated axiom.
ValidationReport validate_connectivity(const SetFunctionTable& t);

// Same verdict with submodularity in its diminishing-returns form,
// f(X+e) + f(X+f) >= f(X+e+f) + f(X) for e != f outside X.  O(n^2 2^n),
// usable where the full sweep is too slow.  The test suite checks the two
// validators agree before anything relies on this one.
ValidationReport validate_connectivity_local(const SetFunctionTable& t);

}  // namespace connfn
