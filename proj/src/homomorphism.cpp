#include "cst/homomorphism.hpp"

#include <algorithm>

namespace cst {

Homomorphism::Homomorphism(FiniteSemigroup source, FiniteSemigroup target,
                           std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  int n = source_.order();
  if (static_cast<int>(map_.size()) != n)
    throw ValidationError("map length must equal the source order");
  for (int v : map_)
    if (v < 0 || v >= target_.order())
      throw ValidationError("map value out of target range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map_[source_.mul(x, y)] != target_.mul(map_[x], map_[y]))
        throw ValidationError("not a homomorphism at the pair (" +
                              std::to_string(x) + "," + std::to_string(y) + ")");
}

ElementSet Homomorphism::image() const { return image_of(source_.full_set()); }

ElementSet Homomorphism::image_of(const ElementSet& a) const {
  ElementSet out(target_.order());
  for (int x : a.members()) out.insert(map_[x]);
  return out;
}

ElementSet Homomorphism::preimage(const ElementSet& b) const {
  ElementSet out(source_.order());
  for (int x = 0; x < source_.order(); ++x)
    if (b.contains(map_[x])) out.insert(x);
  return out;
}

std::vector<std::vector<int>> enumerate_homomorphism_maps(
    const FiniteSemigroup& source, const FiniteSemigroup& target) {
  int n = source.order();
  int m = target.order();
  std::vector<std::vector<int>> out;
  std::vector<int> map(n, 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = map[source.mul(x, y)] == target.mul(map[x], map[y]);
    if (ok) out.push_back(map);
    int i = n - 1;
    while (i >= 0 && map[i] == m - 1) map[i--] = 0;
    if (i < 0) break;
    ++map[i];
  }
  return out;
}

namespace {

// Deterministic enumeration of all supersets of b, smallest extension first.
void for_each_superset_of(const FiniteSemigroup& s, const ElementSet& b,
                          const std::function<bool(const ElementSet&)>& fn) {
  std::vector<int> outside;
  for (int x = 0; x < s.order(); ++x)
    if (!b.contains(x)) outside.push_back(x);
  if (outside.size() > 24) throw ResourceError("too many filter supersets to enumerate");
  for (unsigned long mask = 0; mask < (1ul << outside.size()); ++mask) {
    ElementSet v = b;
    for (size_t i = 0; i < outside.size(); ++i)
      if (mask & (1ul << i)) v.insert(outside[i]);
    if (fn(v)) return;
  }
}

}  // namespace

GoodnessResult is_good_homomorphism(const Homomorphism& phi, const FilterBase& f,
                                    const FilterBase& g, GoodnessScope scope) {
  ElementSet bf = closure_set(phi.source(), f);
  ElementSet bg = closure_set(phi.target(), g);
  GoodnessResult res;
  res.good = true;
  auto check_one = [&](const ElementSet& fprime) {
    bool paired = false;
    for_each_superset_of(phi.target(), bg, [&](const ElementSet& gprime) {
      if (phi.preimage(gprime) == fprime) {
        res.pairing.emplace_back(fprime, gprime);
        paired = true;
        return true;
      }
      return false;
    });
    if (!paired) {
      res.good = false;
      res.counterexample = fprime;
      res.pairing.clear();
      return true;  // stop
    }
    return false;
  };
  if (scope == GoodnessScope::GeneratedFilter) {
    for_each_superset_of(phi.source(), bf, check_one);
  } else {
    std::vector<ElementSet> sets;
    for (const auto& v : f.base)
      if (std::find(sets.begin(), sets.end(), v) == sets.end()) sets.push_back(v);
    if (std::find(sets.begin(), sets.end(), bf) == sets.end()) sets.push_back(bf);
    for (const auto& v : sets)
      if (check_one(v)) break;
  }
  return res;
}

bool preimage_lemma_check(const Homomorphism& phi, const FilterBase& f,
                          const FilterBase& g) {
  // On a finite semigroup the generated filter is determined by the base data,
  // so goodness is certified on the base sets and the closure.
  if (!is_good_homomorphism(phi, f, g, GoodnessScope::BaseOnly).good)
    throw PreconditionError("homomorphism is not good for the filter pair");
  return phi.preimage(closure_set(phi.target(), g))
      .is_subset_of(closure_set(phi.source(), f));
}

PreservationReport verify_preservation(const Homomorphism& phi, const FilterBase& f,
                                       const FilterBase& g, const ElementSet& a,
                                       PreservationMode mode,
                                       const PreservationBounds& bounds) {
  PreservationReport rep;
  if (mode == PreservationMode::Pws) {
    rep.image_hypothesis =
        is_pws_f_syndetic(phi.target(), g, phi.image()).combinatorial;
    rep.set_hypothesis = is_pws_f_syndetic(phi.source(), f, a).combinatorial;
    if (!rep.image_hypothesis || !rep.set_hypothesis)
      throw PreconditionError("pws hypothesis certificate failed");
    rep.conclusion =
        is_pws_f_syndetic(phi.target(), g, phi.image_of(a)).combinatorial;
    rep.detail = "exact on the finite target";
  } else {
    rep.image_hypothesis =
        is_f_j_bounded(phi.target(), g, phi.image(), bounds.target_family,
                       bounds.max_m, bounds.k_max)
            .established();
    rep.set_hypothesis = is_f_j_bounded(phi.source(), f, a, bounds.source_family,
                                        bounds.max_m, bounds.k_max)
                             .established();
    if (!rep.image_hypothesis || !rep.set_hypothesis)
      throw PreconditionError("bounded J hypothesis certificate failed");
    rep.conclusion = is_f_j_bounded(phi.target(), g, phi.image_of(a),
                                    bounds.target_family, bounds.max_m,
                                    bounds.k_max)
                         .established();
    rep.detail = "bounded by the supplied family and search limits";
  }
  rep.falsification = !rep.conclusion;
  return rep;
}

}  // namespace cst
