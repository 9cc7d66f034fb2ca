#ifndef CST_LARGENESS_HPP_
#define CST_LARGENESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cst/ideal.hpp"
#include "cst/semigroup.hpp"

namespace cst {

// --- verdicts ----------------------------------------------------------------

enum class Status {
  Established,
  RefutedWithinBounds,  // bounded search failed; not a disproof
  RefutedExactly,       // exhaustive finite search found a counterexample
  Inconclusive,
};

std::string to_string(Status s);

template <class W>
struct Verdict {
  Status status = Status::Inconclusive;
  std::optional<W> witness;
  std::string bounds;  // human-readable record of the search limits used

  bool established() const { return status == Status::Established; }
};

// --- sequence machinery -------------------------------------------------------

// A finite set of equal-length sequences over S: the length-L truncation of an
// element of P_f(N->S). Indices into sequences are 1-based throughout.
struct SequenceFamily {
  std::vector<std::vector<int>> sequences;

  SequenceFamily() = default;
  explicit SequenceFamily(std::vector<std::vector<int>> seqs);

  int length() const {
    return sequences.empty() ? 0 : static_cast<int>(sequences[0].size());
  }
  int size() const { return static_cast<int>(sequences.size()); }

  // f(t) with 1-based t; hard truncation, no tail extrapolation.
  int at(int seq_index, int t) const;
};

// Strictly increasing tuple of positive indices.
struct IndexTuple {
  std::vector<int> t;

  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> v);
  int m() const { return static_cast<int>(t.size()); }
  int operator()(int j) const { return t.at(j - 1); }  // 1-based
};

// Witness for the J-set property: the word a1 f(h1) a2 f(h2) ... am f(hm) a(m+1).
// Each a-slot is a (possibly empty) word over S so that witnesses extracted
// from the Hales-Jewett pipeline stay representable in identity-free
// semigroups; plain J-searches always emit singleton slots.
struct JWitness {
  int m = 0;
  std::vector<std::vector<int>> a;  // m+1 slots
  IndexTuple t;
};

// --- largeness notions --------------------------------------------------------

struct ThickResult {
  bool thick = false;
  std::optional<int> witness_x;  // S*x subset A
};

struct SyndeticResult {
  bool syndetic = false;
  std::optional<ElementSet> witness_g;  // inclusion-minimal G with G^-1 A = S
};

struct PwsWitness {
  ElementSet g;
  int x = 0;  // S*x subset G^-1 A
};

struct PwsResult {
  bool combinatorial = false;
  std::optional<PwsWitness> witness;
  bool algebraic = false;  // A cap K(S) nonempty
  bool agree = false;
};

struct CentralResult {
  bool central = false;
  std::optional<int> witness_idempotent;
};

// A is thick iff S*x subset A for some x (the forall-finite-F quantifier
// collapses to F=S on finite S).
ThickResult is_thick(const FiniteSemigroup& s, const ElementSet& a);

SyndeticResult is_syndetic(const FiniteSemigroup& s, const ElementSet& a);

PwsResult is_piecewise_syndetic(const FiniteSemigroup& s, const ElementSet& a);

CentralResult is_central(const FiniteSemigroup& s, const ElementSet& a);

// --- product combinators -------------------------------------------------------

// All products x_{i1}...x_{ik} over nonempty increasing index sets within
// [from,to] (1-based, inclusive), factors in increasing index order.
ElementSet fp_set(const FiniteSemigroup& s, const std::vector<int>& x, int from,
                  int to);

// Zigzag finite products with min H >= k: per-index choice among the family's
// sequences. k=1 gives plain ZFP.
ElementSet zfp_k(const FiniteSemigroup& s, const SequenceFamily& family, int k);

// x(m,a,t,f) = (prod_{j=1..m} a(j)*f(t(j))) * a(m+1), with a given as m+1
// single elements.
int eval_x(const FiniteSemigroup& s, const std::vector<int>& a,
           const IndexTuple& t, const std::vector<int>& f);

// Generalized evaluation for witnesses whose a-slots are words.
int eval_witness(const FiniteSemigroup& s, const JWitness& w,
                 const std::vector<int>& f);

// --- bounded searches -----------------------------------------------------------

// Searches m = 1..max_m, then lexicographic t, then lexicographic a for a word
// landing in A for every family member. For commutative monoids an equivalent
// a + sum_{t in H} f(t) search path is used. A bounded refutation is never
// RefutedExactly: the definition quantifies over all finite families.
Verdict<JWitness> is_j_set_bounded(const FiniteSemigroup& s, const ElementSet& a,
                                   const SequenceFamily& family, int max_m);

// Exhaustive over injective length-r sequences drawn from the pool; exact when
// pool = S. RefutedExactly carries a counterexample sequence with FP cap A empty.
Verdict<std::vector<int>> is_ip_r_star_bounded(const FiniteSemigroup& s,
                                               const ElementSet& a, int r,
                                               const ElementSet& pool);

// Enumeration helper shared by the search code and the tests: calls fn on each
// strictly increasing m-tuple over [lo, hi] in lexicographic order; stops when
// fn returns true and reports whether it did.
bool for_each_increasing_tuple(int m, int lo, int hi,
                               const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace cst

#endif  // CST_LARGENESS_HPP_
