#ifndef CST_IDEAL_HPP_
#define CST_IDEAL_HPP_

#include <vector>

#include "cst/semigroup.hpp"

namespace cst {

enum class Side { Left, Right };

struct GroupComponent {
  ElementSet elements;
  int identity;
};

// The finite-scale image of the structure theory of beta-S: minimal one-sided
// ideals, the smallest two-sided ideal K(S), idempotents and minimal
// idempotents, and the group components R cap L.
struct IdealDecomposition {
  std::vector<ElementSet> minimal_left;
  std::vector<ElementSet> minimal_right;
  ElementSet kernel;
  ElementSet idempotents;
  ElementSet minimal_idempotents;
};

// { x : x*x = x }
ElementSet idempotents(const FiniteSemigroup& s);

// The complete list of minimal left (resp. right) ideals. Every minimal
// one-sided ideal of a finite semigroup is principal, so these are the
// inclusion-minimal sets among {x} u Sx (resp. {x} u xS), deduplicated and
// sorted for determinism.
std::vector<ElementSet> minimal_ideals(const FiniteSemigroup& s, Side side);

// K(S): the union of all minimal left ideals, verified equal to the union of
// all minimal right ideals (InvariantViolation if they disagree).
ElementSet kernel(const FiniteSemigroup& s);

IdealDecomposition ideal_decomposition(const FiniteSemigroup& s);

// R cap L for a minimal right ideal R and a minimal left ideal L, with the
// group axioms verified and the identity located. PreconditionError when the
// inputs are not minimal ideals of s.
GroupComponent group_component(const FiniteSemigroup& s, const ElementSet& r,
                               const ElementSet& l);

// Helpers used by the largeness and filter modules.
ElementSet principal_left_ideal(const FiniteSemigroup& s, int x);   // {x} u Sx
ElementSet principal_right_ideal(const FiniteSemigroup& s, int x);  // {x} u xS
bool is_two_sided_ideal(const FiniteSemigroup& s, const ElementSet& i);

}  // namespace cst

#endif  // CST_IDEAL_HPP_
