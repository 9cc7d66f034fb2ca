#ifndef CST_HOMOMORPHISM_HPP_
#define CST_HOMOMORPHISM_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cst/filter.hpp"
#include "cst/semigroup.hpp"

namespace cst {

// A semigroup homomorphism given by its value table. Construction checks all
// n^2 products; the semigroups are copied so the object owns its data.
class Homomorphism {
 public:
  Homomorphism(FiniteSemigroup source, FiniteSemigroup target,
               std::vector<int> map);

  const FiniteSemigroup& source() const { return source_; }
  const FiniteSemigroup& target() const { return target_; }
  int operator()(int x) const { return map_.at(x); }
  const std::vector<int>& map() const { return map_; }

  ElementSet image() const;  // the image of the whole source
  ElementSet image_of(const ElementSet& a) const;
  ElementSet preimage(const ElementSet& b) const;

 private:
  FiniteSemigroup source_;
  FiniteSemigroup target_;
  std::vector<int> map_;
};

// Every valid homomorphism table from source to target, in lexicographic
// order. Feasible only at toy orders (target^source tables).
std::vector<std::vector<int>> enumerate_homomorphism_maps(
    const FiniteSemigroup& source, const FiniteSemigroup& target);

struct GoodnessResult {
  bool good = false;
  // One (source filter set, target filter set) pair per source set, with the
  // source set equal to the full preimage of its partner.
  std::vector<std::pair<ElementSet, ElementSet>> pairing;
  std::optional<ElementSet> counterexample;  // a source set with no partner
};

// Which source sets must be full preimages. GeneratedFilter is the literal
// quantifier (every superset of the closure); it is satisfiable only when the
// map is injective on the complement structure, because upward closure
// introduces sets that are not unions of fibers. BaseOnly checks the declared
// base sets and the closure.
enum class GoodnessScope { GeneratedFilter, BaseOnly };

// The homomorphism is good for the filter pair when every required source set
// is a full preimage of a set of the generated target filter.
GoodnessResult is_good_homomorphism(const Homomorphism& phi, const FilterBase& f,
                                    const FilterBase& g,
                                    GoodnessScope scope = GoodnessScope::GeneratedFilter);

// The finite shadow of the preimage lemma: the preimage of the target closure
// lies inside the source closure. PreconditionError when the goodness check
// fails; true otherwise (false would indicate a bug).
bool preimage_lemma_check(const Homomorphism& phi, const FilterBase& f,
                          const FilterBase& g);

enum class PreservationMode { Pws, FJ };

struct PreservationBounds {
  // FJ mode only: the family certifying the source-side property and the one
  // used for the target-side checks.
  SequenceFamily source_family;
  SequenceFamily target_family;
  int max_m = 2;
  int k_max = 2;
};

struct PreservationReport {
  bool image_hypothesis = false;  // the image of the source passes on the target side
  bool set_hypothesis = false;    // A passes on the source side
  bool conclusion = false;        // the image of A passes on the target side
  bool falsification = false;     // hypotheses held, conclusion failed: must never occur
  std::string detail;
};

// The preservation theorems as a checkable harness: certify both hypotheses
// (PreconditionError when either fails), compute the exact image of A, and
// check the target-side property. Pws mode is exact on finite targets; FJ
// mode is bounded by the supplied family and search limits.
PreservationReport verify_preservation(const Homomorphism& phi, const FilterBase& f,
                                       const FilterBase& g, const ElementSet& a,
                                       PreservationMode mode,
                                       const PreservationBounds& bounds = {});

}  // namespace cst

#endif  // CST_HOMOMORPHISM_HPP_
