#include "connfn/matroid.hpp"

namespace connfn {

namespace {

void check_shape(const RankTable& r) {
  if (r.rank.size() != (std::size_t{1} << r.ground.size)) {
    throw std::invalid_argument("incomplete rank table");
  }
}

}  // namespace

int RankTable::value(mask_t x) const {
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the ground set");
  }
  if (rank.size() != (std::size_t{1} << ground.size)) {
    throw std::invalid_argument("incomplete rank table");
  }
  return rank[x];
}

int RankTable::total_rank() const { return value(ground.full_mask()); }

int dual_rank(const RankTable& r, mask_t x) {
  check_shape(r);
  mask_t c = complement(x, r.ground);
  return r.rank[c] + popcount(x) - r.total_rank();
}

RankTable dual_rank_table(const RankTable& r) {
  check_shape(r);
  RankTable d;
  d.ground = r.ground;
  d.rank.resize(r.rank.size());
  for (mask_t x = 0; x <= r.ground.full_mask(); ++x) {
    d.rank[x] = dual_rank(r, x);
  }
  return d;
}

long long matroid_mu(const RankTable& r, mask_t x) {
  check_shape(r);
  mask_t c = complement(x, r.ground);
  return static_cast<long long>(r.rank[x]) + r.rank[c] - r.total_rank();
}

SetFunctionTable mu_table(const RankTable& r) {
  check_shape(r);
  SetFunctionTable t;
  t.ground = r.ground;
  t.values.resize(r.rank.size());
  for (mask_t x = 0; x <= r.ground.full_mask(); ++x) {
    t.values[x] = matroid_mu(r, x);
  }
  return t;
}

ValidationReport validate_rank_axioms(const RankTable& r) {
  check_shape(r);
  ValidationReport rep;
  const mask_t full = r.ground.full_mask();
  if (r.rank[0] != 0) {
    rep.violations.push_back({Axiom::normalised, 0, 0, r.rank[0], 0});
  }
  for (mask_t x = 0; x <= full; ++x) {
    bool done = false;
    for (int e = 0; e < r.ground.size; ++e) {
      if (x & bit(e)) continue;
      int d = r.rank[x | bit(e)] - r.rank[x];
      if (d < 0 || d > 1) {
        rep.violations.push_back(
            {Axiom::unit_increase, x, x | bit(e), r.rank[x | bit(e)], r.rank[x]});
        done = true;
        break;
      }
    }
    if (done) break;
  }
  for (mask_t x = 0; x <= full; ++x) {
    bool done = false;
    for (mask_t y = x; y <= full; ++y) {
      long long lhs = static_cast<long long>(r.rank[x]) + r.rank[y];
      long long rhs = static_cast<long long>(r.rank[x | y]) + r.rank[x & y];
      if (lhs < rhs) {
        rep.violations.push_back({Axiom::submodular, x, y, lhs, rhs});
        done = true;
        break;
      }
    }
    if (done) break;
  }
  return rep;
}

RankTable rank_from_circuits(const CircuitFamily& c) {
  const GroundSet& ground = c.ground;
  if (ground.size > 16) {
    throw capacity_error("circuit rank oracle supports up to 16 elements");
  }
  for (const mask_t circ : c.circuits) {
    if (circ == 0 || !ground.valid_mask(circ)) {
      throw std::invalid_argument("circuits must be nonempty subsets of the ground set");
    }
    for (const mask_t other : c.circuits) {
      if (other != circ && (other & circ) == other) {
        throw std::invalid_argument("circuit family is not an antichain");
      }
    }
  }

  const std::size_t count = std::size_t{1} << ground.size;
  std::vector<char> dependent(count, 0);
  for (const mask_t circ : c.circuits) dependent[circ] = 1;
  // A set is dependent iff it contains a circuit.
  for (mask_t x = 0; x < count; ++x) {
    if (dependent[x]) continue;
    for (int e = 0; e < ground.size; ++e) {
      if ((x & bit(e)) && dependent[x ^ bit(e)]) {
        dependent[x] = 1;
        break;
      }
    }
  }

  RankTable r;
  r.ground = ground;
  r.rank.resize(count);
  for (mask_t x = 0; x < count; ++x) {
    if (!dependent[x]) {
      r.rank[x] = popcount(x);
      continue;
    }
    int best = 0;
    for (int e = 0; e < ground.size; ++e) {
      if (x & bit(e)) best = std::max(best, r.rank[x ^ bit(e)]);
    }
    r.rank[x] = best;
  }
  return r;
}

}  // namespace connfn
