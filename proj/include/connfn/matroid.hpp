#pragma once

#include <vector>

#include "connfn/set_function.hpp"

namespace connfn {

// Matroid rank function as an explicit table.
struct RankTable {
  GroundSet ground;
  std::vector<int> rank;  // indexed by subset mask, size 1 << n

  int value(mask_t x) const;
  int total_rank() const;

  bool operator==(const RankTable&) const = default;
};

// r*(X) = r(E-X) + |X| - r(E).
int dual_rank(const RankTable& r, mask_t x);
RankTable dual_rank_table(const RankTable& r);

// mu(X) = r(X) + r(E-X) - r(E); the matroid connectivity function.
long long matroid_mu(const RankTable& r, mask_t x);
SetFunctionTable mu_table(const RankTable& r);

// Normalisation, unit increase and submodularity, one witness per axiom.
ValidationReport validate_rank_axioms(const RankTable& r);

struct CircuitFamily {
  GroundSet ground;
  std::vector<mask_t> circuits;

  bool operator==(const CircuitFamily&) const = default;
};

// Brute-force oracle: r(X) = max{|J| : J subset of X containing no circuit}.
// The family must be an antichain of nonempty sets.
RankTable rank_from_circuits(const CircuitFamily& c);

}  // namespace connfn
