#include "cst/ideal.hpp"

#include <algorithm>

namespace cst {

ElementSet idempotents(const FiniteSemigroup& s) {
  ElementSet out(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (s.mul(x, x) == x) out.insert(x);
  return out;
}

ElementSet principal_left_ideal(const FiniteSemigroup& s, int x) {
  ElementSet out(s.order());
  out.insert(x);
  for (int t = 0; t < s.order(); ++t) out.insert(s.mul(t, x));
  return out;
}

ElementSet principal_right_ideal(const FiniteSemigroup& s, int x) {
  ElementSet out(s.order());
  out.insert(x);
  for (int t = 0; t < s.order(); ++t) out.insert(s.mul(x, t));
  return out;
}

bool is_two_sided_ideal(const FiniteSemigroup& s, const ElementSet& i) {
  if (i.empty()) return false;
  for (int x : i.members())
    for (int t = 0; t < s.order(); ++t)
      if (!i.contains(s.mul(t, x)) || !i.contains(s.mul(x, t))) return false;
  return true;
}

std::vector<ElementSet> minimal_ideals(const FiniteSemigroup& s, Side side) {
  std::vector<ElementSet> principal;
  for (int x = 0; x < s.order(); ++x)
    principal.push_back(side == Side::Left ? principal_left_ideal(s, x)
                                           : principal_right_ideal(s, x));
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()),
                  principal.end());
  std::vector<ElementSet> minimal;
  for (const auto& c : principal) {
    bool is_min = true;
    for (const auto& other : principal)
      if (other != c && other.is_subset_of(c)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(c);
  }
  return minimal;
}

ElementSet kernel(const FiniteSemigroup& s) {
  ElementSet from_left(s.order());
  for (const auto& l : minimal_ideals(s, Side::Left))
    from_left = from_left.unite(l);
  ElementSet from_right(s.order());
  for (const auto& r : minimal_ideals(s, Side::Right))
    from_right = from_right.unite(r);
  if (from_left != from_right)
    throw InvariantViolation(
        "union of minimal left ideals differs from union of minimal right "
        "ideals");
  return from_left;
}

IdealDecomposition ideal_decomposition(const FiniteSemigroup& s) {
  IdealDecomposition d;
  d.minimal_left = minimal_ideals(s, Side::Left);
  d.minimal_right = minimal_ideals(s, Side::Right);
  d.kernel = kernel(s);
  d.idempotents = idempotents(s);
  d.minimal_idempotents = d.idempotents.intersect(d.kernel);
  return d;
}

GroupComponent group_component(const FiniteSemigroup& s, const ElementSet& r,
                               const ElementSet& l) {
  auto rights = minimal_ideals(s, Side::Right);
  auto lefts = minimal_ideals(s, Side::Left);
  if (std::find(rights.begin(), rights.end(), r) == rights.end())
    throw PreconditionError("R is not a minimal right ideal of S");
  if (std::find(lefts.begin(), lefts.end(), l) == lefts.end())
    throw PreconditionError("L is not a minimal left ideal of S");
  ElementSet g = r.intersect(l);
  auto cert = is_subgroup(s, g, false);
  if (!cert.ok)
    throw InvariantViolation("R cap L failed the group axioms: " + cert.reason);
  return GroupComponent{g, *cert.identity};
}

}  // namespace cst
