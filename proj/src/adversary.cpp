#include "connfn/adversary.hpp"

#include <algorithm>
#include <unordered_set>

namespace connfn {

VPartition v_partition(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const int n = 2 * m;
  if (n > 24) throw capacity_error("v_partition supports m <= 12");
  VPartition vp;
  const tword_t full = (tword_t{1} << n) - 1;
  for (tword_t w = 0; w <= full; ++w) {
    int x_count = n - word_popcount(w);
    if (x_count < m) {
      vp.below.push_back(w);
    } else if (x_count == m) {
      vp.middle.push_back(w);
    } else {
      vp.above.push_back(w);
    }
  }
  return vp;
}

namespace {

// Build the transcript shared by both adversaries: base table, an optional
// alternative differing only on one complement pair, per-query agreement.
AdversaryTranscript run_adversary(int m, const std::vector<mask_t>& queries,
                                  SpikyTable base,
                                  const std::vector<tword_t>& candidate_pairs,
                                  bool alternative_adds_pair) {
  const int n = 2 * m;
  const tword_t wfull = (tword_t{1} << n) - 1;
  const mask_t efull = (mask_t{1} << (2 * n)) - 1;

  AdversaryTranscript tr;
  tr.m = m;
  tr.base = base;
  tr.base_matroidal = decide_matroidal(base).matroidal;

  std::unordered_set<tword_t> hit;
  for (mask_t q : queries) {
    if ((q & ~efull) != 0) {
      throw std::invalid_argument("query has bits outside E_n");
    }
    if (auto w = word_from_mask(q, n)) hit.insert(*w);
  }

  std::optional<tword_t> free_word;
  for (tword_t w : candidate_pairs) {
    if (!hit.count(w) && !hit.count(w ^ wfull)) {
      free_word = w;
      break;
    }
  }

  if (free_word) {
    SpikyTable alt = base;
    const int value = alternative_adds_pair ? n - 1 : n;
    alt.transversal_values[*free_word] = value;
    alt.transversal_values[*free_word ^ wfull] = value;
    tr.alternative = alt;
    tr.alternative_matroidal = decide_matroidal(alt).matroidal;
  }

  bool all_agree = tr.alternative.has_value();
  for (mask_t q : queries) {
    AdversaryQuery rec;
    rec.subset = q;
    rec.base_value = base.value(q);
    rec.inert = !is_transversal_mask(q, n);
    if (tr.alternative) {
      rec.alt_value = tr.alternative->value(q);
      if (*rec.alt_value != rec.base_value) all_agree = false;
    }
    tr.queries.push_back(rec);
  }
  tr.agreement_certified = tr.alternative.has_value() && all_agree;
  tr.fooled = tr.agreement_certified && tr.alternative_matroidal.has_value() &&
              *tr.alternative_matroidal != tr.base_matroidal;
  return tr;
}

}  // namespace

AdversaryTranscript adversary_matroidal(int m, const std::vector<mask_t>& queries) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m > 8) throw capacity_error("adversary supports m <= 8");
  VPartition vp = v_partition(m);
  std::vector<tword_t> w = vp.below;
  w.insert(w.end(), vp.above.begin(), vp.above.end());
  // Adding any middle pair joins the two components of H_n[W].
  return run_adversary(m, queries, lambda_w(2 * m, w), vp.middle,
                       /*alternative_adds_pair=*/true);
}

AdversaryTranscript adversary_nonmatroidal(int m, const std::vector<mask_t>& queries) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m > 8) throw capacity_error("adversary supports m <= 8");
  BufferedPath path = build_buffered_path(m);
  const tword_t wfull = (tword_t{1} << (2 * m)) - 1;
  std::vector<tword_t> w = path.steps;
  for (tword_t s : path.steps) w.push_back(s ^ wfull);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::vector<tword_t> pairs;
  for (tword_t s : w) {
    if (s < (s ^ wfull)) pairs.push_back(s);
  }
  // Removing any complement pair splits the cycle H_n[W].
  return run_adversary(m, queries, lambda_w(2 * m, w), pairs,
                       /*alternative_adds_pair=*/false);
}

}  // namespace connfn
