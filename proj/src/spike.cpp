#include "connfn/spike.hpp"

#include <algorithm>
#include <unordered_map>

namespace connfn {

namespace {

// Word-level machinery tolerates n = 2 (used by the hypercube experiments);
// the matroid ground itself requires n >= 3.
void check_dimension(int n) {
  if (n < 2 || 2 * n > 63) {
    throw std::invalid_argument("spike dimension out of range: " + std::to_string(n));
  }
}

mask_t spike_full_mask(int n) { return (mask_t{1} << (2 * n)) - 1; }

void check_spike_mask(mask_t x, int n) {
  if ((x & ~spike_full_mask(n)) != 0) {
    throw std::invalid_argument("subset has bits outside E_n");
  }
}

}  // namespace

SpikeGround make_spike_ground(int n) {
  if (n < 3) throw std::invalid_argument("a spike needs at least 3 legs");
  check_dimension(n);
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (int i = 1; i <= n; ++i) {
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
  }
  return SpikeGround{n, GroundSet(2 * n, std::move(labels))};
}

bool is_transversal_mask(mask_t x, int n) {
  check_dimension(n);
  if ((x & ~spike_full_mask(n)) != 0) return false;
  for (int i = 0; i < n; ++i) {
    mask_t leg = (x >> (2 * i)) & 3;
    if (leg != 1 && leg != 2) return false;
  }
  return true;
}

mask_t mask_from_word(tword_t w, int n) {
  check_dimension(n);
  if ((w & ~((tword_t{1} << n) - 1)) != 0) {
    throw std::invalid_argument("transversal word has bits beyond the legs");
  }
  mask_t x = 0;
  for (int i = 0; i < n; ++i) {
    x |= mask_t{1} << (2 * i + ((w >> i) & 1));
  }
  return x;
}

std::optional<tword_t> word_from_mask(mask_t x, int n) {
  if (!is_transversal_mask(x, n)) return std::nullopt;
  tword_t w = 0;
  for (int i = 0; i < n; ++i) {
    if ((x >> (2 * i + 1)) & 1) w |= tword_t{1} << i;
  }
  return w;
}

bool IndependentSet::contains(tword_t w) const {
  return std::binary_search(words.begin(), words.end(), w);
}

IndependentSet make_independent_set(int n, std::vector<tword_t> words) {
  check_dimension(n);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  const tword_t limit = (tword_t{1} << n) - 1;
  for (tword_t w : words) {
    if ((w & ~limit) != 0) {
      throw std::invalid_argument("transversal word has bits beyond the legs");
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (hn_adjacent(words[i], words[j])) {
        throw std::invalid_argument(
            "not an independent set: two members differ in exactly one element");
      }
    }
  }
  return IndependentSet{n, std::move(words)};
}

int spike_rank(const IndependentSet& I, mask_t x) {
  const int n = I.n;
  check_dimension(n);
  check_spike_mask(x, n);
  int met = 0;
  int included = 0;
  for (int i = 0; i < n; ++i) {
    mask_t leg = (x >> (2 * i)) & 3;
    if (leg != 0) ++met;
    if (leg == 3) ++included;
  }
  if (included == 0 && met < n) return popcount(x);  // = l(X)
  if (included > 0 && met < n) return met + 1;
  if (included > 0) return n;
  // Transversal: rank n-1 exactly when X is in I.
  tword_t w = *word_from_mask(x, n);
  return I.contains(w) ? n - 1 : n;
}

RankTable spike_rank_table(const IndependentSet& I) {
  if (2 * I.n > 20) throw capacity_error("rank table refused for more than 20 elements");
  RankTable r;
  r.ground = make_spike_ground(I.n).ground;
  r.rank.resize(std::size_t{1} << (2 * I.n));
  for (mask_t x = 0; x < r.rank.size(); ++x) {
    r.rank[x] = spike_rank(I, x);
  }
  return r;
}

long long spike_mu(const IndependentSet& I, mask_t x) {
  const mask_t full = spike_full_mask(I.n);
  check_spike_mask(x, I.n);
  return static_cast<long long>(spike_rank(I, x)) + spike_rank(I, x ^ full) - I.n;
}

CircuitFamily spike_circuits(const IndependentSet& I) {
  // Re-validate: callers may have built the struct by hand.
  IndependentSet checked = make_independent_set(I.n, I.words);
  const int n = checked.n;
  if (2 * n > 24) throw capacity_error("circuit enumeration supports n <= 12");

  CircuitFamily fam;
  fam.ground = n >= 3 ? make_spike_ground(n).ground : GroundSet(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      fam.circuits.push_back((mask_t{3} << (2 * i)) | (mask_t{3} << (2 * j)));
    }
  }
  std::vector<mask_t> members;
  for (tword_t w : checked.words) {
    mask_t m = mask_from_word(w, n);
    members.push_back(m);
    fam.circuits.push_back(m);
  }
  const mask_t full = spike_full_mask(n);
  for (mask_t c = 0; c <= full; ++c) {
    if (popcount(c) != n + 1) continue;
    int included = 0;
    for (int i = 0; i < n; ++i) {
      if (((c >> (2 * i)) & 3) == 3) ++included;
    }
    if (included >= 2) continue;  // contains a leg pair
    bool has_member = false;
    for (mask_t m : members) {
      if ((c & m) == m) {
        has_member = true;
        break;
      }
    }
    if (!has_member) fam.circuits.push_back(c);
  }
  return fam;
}

long long lambda_n(int n, mask_t x) {
  check_dimension(n);
  check_spike_mask(x, n);
  if (is_transversal_mask(x, n)) {
    throw std::domain_error("lambda_n is undefined on transversals");
  }
  return spike_mu(IndependentSet{n, {}}, x);
}

long long SpikyTable::value(mask_t x) const {
  check_spike_mask(x, n);
  if (auto w = word_from_mask(x, n)) return transversal_values[*w];
  return lambda_n(n, x);
}

SetFunctionTable SpikyTable::to_table() const {
  if (2 * n > 20) throw capacity_error("full table refused for more than 20 elements");
  SetFunctionTable t;
  t.ground = n >= 3 ? make_spike_ground(n).ground : GroundSet(2 * n);
  t.values.resize(std::size_t{1} << (2 * n));
  for (mask_t x = 0; x < t.values.size(); ++x) {
    t.values[x] = value(x);
  }
  return t;
}

SpikyTable spike_mu_table(const IndependentSet& I) {
  SpikyTable t;
  t.n = I.n;
  t.transversal_values.resize(std::size_t{1} << I.n);
  const tword_t full = (tword_t{1} << I.n) - 1;
  for (tword_t w = 0; w < t.transversal_values.size(); ++w) {
    int members = (I.contains(w) ? 1 : 0) + (I.contains(w ^ full) ? 1 : 0);
    t.transversal_values[w] = I.n - members;
  }
  return t;
}

bool is_spiky(const SpikyTable& t) {
  const int n = t.n;
  if (n < 2 || t.transversal_values.size() != (std::size_t{1} << n)) return false;
  const tword_t full = (tword_t{1} << n) - 1;
  for (tword_t w = 0; w <= full; ++w) {
    int v = t.transversal_values[w];
    if (v < n - 2 || v > n) return false;
    if (v != t.transversal_values[w ^ full]) return false;
    for (int i = 0; i < n; ++i) {
      tword_t nb = w ^ (tword_t{1} << i);
      if (nb < w) continue;
      if (v + t.transversal_values[nb] < 2 * n - 2) return false;
    }
  }
  return true;
}

SpikyTable spiky_from_table(const SetFunctionTable& t) {
  const int size = t.ground.size;
  if (size % 2 != 0) {
    throw std::invalid_argument("a spiky function lives on an even ground set E_n");
  }
  const int n = size / 2;
  check_dimension(n);
  if (t.values.size() != (std::size_t{1} << size)) {
    throw std::invalid_argument("incomplete set-function table");
  }
  SpikyTable s;
  s.n = n;
  s.transversal_values.resize(std::size_t{1} << n);
  for (mask_t x = 0; x < t.values.size(); ++x) {
    if (auto w = word_from_mask(x, n)) {
      s.transversal_values[*w] = static_cast<int>(t.values[x]);
    } else if (t.values[x] != lambda_n(n, x)) {
      throw std::invalid_argument("table does not extend lambda_n off the transversals");
    }
  }
  if (!is_spiky(s)) {
    throw std::invalid_argument(
        "transversal values are not spiky (symmetry, range or adjacency clause)");
  }
  return s;
}

SpikyTable lambda_w(int n, const std::vector<tword_t>& w) {
  check_dimension(n);
  const tword_t full = (tword_t{1} << n) - 1;
  SpikyTable t;
  t.n = n;
  t.transversal_values.assign(std::size_t{1} << n, n);
  for (tword_t x : w) {
    if ((x & ~full) != 0) {
      throw std::invalid_argument("transversal word has bits beyond the legs");
    }
    t.transversal_values[x] = n - 1;
  }
  for (tword_t x : w) {
    if (t.transversal_values[x ^ full] != n - 1) {
      throw std::domain_error("W is not closed under complementation");
    }
  }
  return t;
}

namespace {

MatroidalVerdict certified_matroidal(const SpikyTable& t, std::vector<tword_t> words) {
  IndependentSet I;
  try {
    I = make_independent_set(t.n, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("witness construction failed: ") + e.what());
  }
  if (!(spike_mu_table(I) == t)) {
    throw std::logic_error("witness does not reproduce the spiky table");
  }
  MatroidalVerdict v;
  v.matroidal = true;
  v.witness_independent = std::move(I);
  return v;
}

}  // namespace

MatroidalVerdict decide_matroidal(const SpikyTable& t) {
  if (!is_spiky(t)) throw std::invalid_argument("not a spiky table");
  const int n = t.n;
  const tword_t full = (tword_t{1} << n) - 1;

  if (n % 2 == 1) {
    std::vector<tword_t> words;
    for (tword_t w = 0; w <= full; ++w) {
      int v = t.transversal_values[w];
      if (v == n - 2 || (v == n - 1 && even_parity(w, n))) words.push_back(w);
    }
    return certified_matroidal(t, std::move(words));
  }

  // Even n: component analysis of the induced subgraph on value n-1.
  std::vector<tword_t> level;
  for (tword_t w = 0; w <= full; ++w) {
    if (t.transversal_values[w] == n - 1) level.push_back(w);
  }
  auto comps = induced_components(n, level);
  std::unordered_map<tword_t, int> comp_of;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (tword_t w : comps[i]) comp_of[w] = static_cast<int>(i);
  }
  for (tword_t w : level) {
    if (comp_of.at(w) == comp_of.at(w ^ full)) {
      MatroidalVerdict v;
      v.matroidal = false;
      v.witness_transversal = w;
      return v;
    }
  }
  // One component per complement pair; chosen members keep even parity,
  // their complements enter through the odd-parity rule.
  std::vector<char> chosen(comps.size(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    tword_t mate = comps[i].front() ^ full;
    std::size_t partner = static_cast<std::size_t>(comp_of.at(mate));
    if (partner == i) {
      throw std::logic_error("component equals its own complement past the witness check");
    }
    if (!chosen[i] && !chosen[partner]) chosen[i] = 1;
  }
  std::vector<char> in_k(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!chosen[i]) continue;
    for (tword_t w : comps[i]) in_k[w] = 1;
  }
  std::vector<tword_t> words;
  for (tword_t w = 0; w <= full; ++w) {
    int v = t.transversal_values[w];
    if (v == n - 2) {
      words.push_back(w);
    } else if (v == n - 1) {
      if (even_parity(w, n) ? in_k[w] : in_k[w ^ full]) words.push_back(w);
    }
  }
  return certified_matroidal(t, std::move(words));
}

namespace {

bool extend_independent(const SpikyTable& t, const std::vector<tword_t>& pairs,
                        std::size_t idx, std::vector<char>& in_set,
                        std::vector<tword_t>& chosen, int n) {
  if (idx == pairs.size()) return true;
  const tword_t full = (tword_t{1} << n) - 1;
  tword_t w = pairs[idx];
  int v = t.transversal_values[w];
  if (v == n) return extend_independent(t, pairs, idx + 1, in_set, chosen, n);

  auto can_add = [&](tword_t x) {
    for (int i = 0; i < n; ++i) {
      if (in_set[x ^ (tword_t{1} << i)]) return false;
    }
    return true;
  };
  auto add = [&](tword_t x) {
    in_set[x] = 1;
    chosen.push_back(x);
  };
  auto remove = [&](tword_t x) {
    in_set[x] = 0;
    chosen.pop_back();
  };

  if (v == n - 2) {
    if (!can_add(w)) return false;
    add(w);
    bool ok = can_add(w ^ full);
    if (ok) {
      add(w ^ full);
      ok = extend_independent(t, pairs, idx + 1, in_set, chosen, n);
      if (!ok) remove(w ^ full);
    }
    if (!ok) remove(w);
    return ok;
  }
  // v == n-1: exactly one of the pair joins.
  for (tword_t x : {w, static_cast<tword_t>(w ^ full)}) {
    if (!can_add(x)) continue;
    add(x);
    if (extend_independent(t, pairs, idx + 1, in_set, chosen, n)) return true;
    remove(x);
  }
  return false;
}

}  // namespace

MatroidalVerdict brute_force_matroidal(const SpikyTable& t) {
  if (!is_spiky(t)) throw std::invalid_argument("not a spiky table");
  if (t.n > 4) throw capacity_error("brute-force matroidality search supports n <= 4");
  const int n = t.n;
  const tword_t full = (tword_t{1} << n) - 1;

  std::vector<tword_t> pairs;
  for (tword_t w = 0; w <= full; ++w) {
    if (w < (w ^ full)) pairs.push_back(w);
  }
  std::vector<char> in_set(std::size_t{1} << n, 0);
  std::vector<tword_t> chosen;
  if (extend_independent(t, pairs, 0, in_set, chosen, n)) {
    return certified_matroidal(t, std::move(chosen));
  }
  MatroidalVerdict v;
  v.matroidal = false;
  return v;
}

}  // namespace connfn
