#include "connfn/set_function.hpp"

namespace connfn {

long long SetFunctionTable::value(mask_t x) const {
  if (!ground.valid_mask(x)) {
    throw std::invalid_argument("subset has bits outside the ground set");
  }
  if (values.size() != (std::size_t{1} << ground.size)) {
    throw std::invalid_argument("incomplete set-function table");
  }
  return values[x];
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::normalised: return "normalised";
    case Axiom::symmetric: return "symmetric";
    case Axiom::submodular: return "submodular";
    case Axiom::unit_increase: return "unit_increase";
  }
  return "?";
}

namespace {

void check_shape(const SetFunctionTable& t) {
  if (t.values.size() != (std::size_t{1} << t.ground.size)) {
    throw std::invalid_argument("incomplete set-function table");
  }
}

// Normalisation and symmetry are shared by both validators.
void check_normalised_symmetric(const SetFunctionTable& t, ValidationReport& rep) {
  const mask_t full = t.ground.full_mask();
  if (t.values[0] != 0) {
    rep.violations.push_back({Axiom::normalised, 0, 0, t.values[0], 0});
  }
  for (mask_t x = 0; x <= full; ++x) {
    mask_t c = x ^ full;
    if (t.values[x] != t.values[c]) {
      rep.violations.push_back({Axiom::symmetric, x, c, t.values[x], t.values[c]});
      break;
    }
  }
}

}  // namespace

ValidationReport validate_connectivity(const SetFunctionTable& t) {
  check_shape(t);
  ValidationReport rep;
  check_normalised_symmetric(t, rep);
  const mask_t full = t.ground.full_mask();
  for (mask_t x = 0; x <= full; ++x) {
    for (mask_t y = x; y <= full; ++y) {
      long long lhs = t.values[x] + t.values[y];
      long long rhs = t.values[x | y] + t.values[x & y];
      if (lhs < rhs) {
        rep.violations.push_back({Axiom::submodular, x, y, lhs, rhs});
        return rep;
      }
    }
  }
  return rep;
}

ValidationReport validate_connectivity_local(const SetFunctionTable& t) {
  check_shape(t);
  ValidationReport rep;
  check_normalised_symmetric(t, rep);
  const int n = t.ground.size;
  const mask_t full = t.ground.full_mask();
  for (mask_t x = 0; x <= full; ++x) {
    for (int e = 0; e < n; ++e) {
      if (x & bit(e)) continue;
      for (int f = e + 1; f < n; ++f) {
        if (x & bit(f)) continue;
        long long lhs = t.values[x | bit(e)] + t.values[x | bit(f)];
        long long rhs = t.values[x | bit(e) | bit(f)] + t.values[x];
        if (lhs < rhs) {
          rep.violations.push_back(
              {Axiom::submodular, x | bit(e), x | bit(f), lhs, rhs});
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace connfn
