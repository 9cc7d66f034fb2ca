#ifndef CST_WITNESS_HPP_
#define CST_WITNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cst/filter.hpp"
#include "cst/hales_jewett.hpp"
#include "cst/largeness.hpp"

namespace cst {

// A bounded witness search was defeated (not a contract violation: the
// message names the subset and the set that defeated it).
struct SearchFailure : Error {
  using Error::Error;
};

// {x : x*e in A}: the principal-ultrafilter reading of x^-1 A in p for the
// idempotent e. PreconditionError when e is not idempotent.
ElementSet star_set(const FiniteSemigroup& s, int e, const ElementSet& a);

// Every intermediate object of the coloring-extraction pipeline, kept for
// inspection and for the paired verify paths.
struct JPipelineTrace {
  ElementSet v;        // the filter set the argument chase runs in
  ElementSet f_v;      // finite F_V inside V, |F_V| = r colors
  ElementSet w_v;      // W_V (the filter closure B)
  int y = 0;           // y in V with W_V * y inside F_V^-1 A
  int k = 0;           // goodness index of the family
  int r = 0;           // number of colors
  int hj_n = 0;        // Hales-Jewett dimension used
  hj::VariableWord line;  // the monochromatic template over family indices
  int color = 0;       // the shared color, an element of F_V
};

struct JPipelineResult {
  JWitness witness;
  JPipelineTrace trace;
};

// The constructive content of the coloring lemma, with the index-shift trick
// layered on top: products are formed at indices k + floor_m + 1 .. k +
// floor_m + N, so the returned tuple satisfies t(1) > floor_m. Preconditions:
// A passes the pws-filter-syndetic check, the family is filter-good within
// k_max, and v contains the filter closure. ResourceError when the needed
// Hales-Jewett dimension is not determined within hj_cap.
JPipelineResult j_witness_via_hj(const FiniteSemigroup& s, const FilterBase& f,
                                 const ElementSet& a, const SequenceFamily& family,
                                 const ElementSet& v, int floor_m,
                                 int k_max = 4, int hj_cap = 4);

// One entry of the bounded-depth central-sets witness map: the data
// (m, alpha, tau) attached to one nonempty subset of the input family list.
// alpha uses the same word-slot shape as JWitness.
struct CstEntry {
  std::vector<int> subset;  // indices into the family list, increasing
  int m = 0;
  std::vector<std::vector<int>> alpha;  // m+1 slots
  IndexTuple tau;
};

struct CstWitnessMap {
  ElementSet target;                   // A
  int idempotent = 0;                  // e in A with e*e = e, minimal in K(B)
  std::vector<SequenceFamily> families;
  std::vector<CstEntry> entries;       // subsets by size, then lexicographic
};

// The bounded-depth induction behind the central sets theorem: processes every
// nonempty subset G of the family list in size order, forms the chain-product
// set M over proper subsets, shrinks the target to
// A* cap intersection of z^-1 A* over z in M, and extracts each witness via
// the coloring pipeline with the index floor taken over proper subsets.
// A* is A cap {x : x*e in A}. Throws SearchFailure naming the subset when an
// inner search is defeated; PreconditionError when A is not filter-central or
// a family is not filter-good.
CstWitnessMap cst_build(const FiniteSemigroup& s, const FilterBase& f,
                        const ElementSet& a,
                        const std::vector<SequenceFamily>& families,
                        int size_cap, int k_max = 4, int hj_cap = 4);

struct CstVerification {
  bool ok = false;
  std::vector<std::string> failures;
};

// Independent re-evaluation: tuple monotonicity tau(G)(m(G)) < tau(F)(1) for
// every G proper subset of F, and every chain product (over every strictly
// increasing chain of subsets and every selection of one sequence per link)
// landing in the target.
CstVerification cst_verify(const FiniteSemigroup& s, const ElementSet& a,
                           const CstWitnessMap& map);

// --- pigeonhole extractors -----------------------------------------------------

struct IprExtraction {
  int m = 0;      // 1-based prefix indices with equal colors, m < n
  int n = 0;
  long t = 0;     // the pigeonholed translator from H
  long y = 0;     // the shift realizing the covering
  long block = 0; // x_{m+1} + ... + x_n (or the word product), in the subgroup
};

// Ambient (Z,+), subgroup kZ, translator set H. The covering precondition is
// that {-t + kZ : t in H} covers Z, i.e. H covers all residues mod k. xs must
// have length |H| + 1 (the pigeonhole length r).
IprExtraction ipr_star_extract_integers(long k, const std::vector<long>& h,
                                        const std::vector<long>& xs);

// Ambient finite semigroup, subgroup gsub, translator set h. Covering: the
// union of t^-1 gsub over t in h is all of S. For a noncommutative ambient,
// gsub must pass the normal-subgroup check. block is the Cayley product
// x_{m+1} * ... * x_n.
IprExtraction ipr_star_extract_cayley(const FiniteSemigroup& s,
                                      const ElementSet& gsub, const ElementSet& h,
                                      const std::vector<int>& xs);

// The subgroup-cancellation route from a J-witness: for the two-element family
// {f, constant-identity}, a J-witness gives a + sum_{t in H} f(t) in G and
// a in G, hence the bare sum lies in G. Witness: (H, sum). Inconclusive when
// the bounded J-search fails.
Verdict<std::pair<std::vector<int>, int>> j_to_ipstar_extract(
    const FiniteSemigroup& s, const ElementSet& gsub, const std::vector<int>& f,
    int max_m);

}  // namespace cst

#endif  // CST_WITNESS_HPP_
