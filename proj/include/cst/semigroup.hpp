#ifndef CST_SEMIGROUP_HPP_
#define CST_SEMIGROUP_HPP_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cst/element_set.hpp"
#include "cst/errors.hpp"

namespace cst {

struct ValidationReport {
  bool associative = false;
  std::optional<std::array<int, 3>> counterexample;  // present iff !associative
  std::optional<int> identity;
  bool commutative = false;
};

// A finite semigroup given by its Cayley table. Immutable after construction;
// construction validates associativity exhaustively (all n^3 triples).
// Since every ultrafilter on a finite set is principal, this is also the
// computational stand-in for the Stone-Cech compactification of itself.
class FiniteSemigroup {
 public:
  // Throws ValidationError (with the failing triple in the message) when the
  // table is not associative; throws BoundsError on out-of-range entries.
  FiniteSemigroup(int order, std::vector<int> table,
                  std::vector<std::string> names = {});

  int order() const { return order_; }

  int mul(int x, int y) const { return table_[x * order_ + y]; }

  // Product of a nonempty word, left to right.
  int mul_word(const std::vector<int>& word) const;

  const std::optional<int>& identity() const { return identity_; }
  bool commutative() const { return commutative_; }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string label(int x) const;
  // Resolves a label or decimal index to an element index.
  int resolve(const std::string& token) const;

  ValidationReport report() const;

  ElementSet full_set() const { return ElementSet::full(order_); }

  // S restricted to a multiplicatively closed subset B, reindexed to
  // {0, ..., |B|-1}. sub_to_parent maps the new indices back.
  FiniteSemigroup restrict_to(const ElementSet& closed_subset,
                              std::vector<int>& sub_to_parent) const;

 private:
  int order_;
  std::vector<int> table_;
  std::vector<std::string> names_;
  std::optional<int> identity_;
  bool commutative_;
};

// --- .sgp parsing -----------------------------------------------------------
//
// Format: '#' comment lines anywhere; first non-comment line is n; then n rows
// of n whitespace-separated entries (row x lists x*0 ... x*(n-1)); then an
// optional "names: l0 l1 ... l(n-1)" line.
FiniteSemigroup parse_semigroup(const std::string& text);
FiniteSemigroup load_semigroup_file(const std::string& path);

// Subset literal: comma-separated indices or names, e.g. "0,2,4". The empty
// string denotes the empty set.
ElementSet parse_subset(const std::string& literal, const FiniteSemigroup& s);
std::string format_subset(const ElementSet& a,
                          const FiniteSemigroup* s = nullptr);

// --- translate preimages ----------------------------------------------------

// B^{-1}A = { y : exists t in B with t*y in A }. A singleton B computes t^{-1}A.
ElementSet translate_preimage(const FiniteSemigroup& s, const ElementSet& b,
                              const ElementSet& a);

// --- subgroup test ----------------------------------------------------------

struct SubgroupCertificate {
  bool ok = false;
  std::string reason;                 // set when !ok
  std::optional<int> identity;       // identity of G when ok
  std::vector<int> inverses;          // inverse in G per member, parallel to members()
};

// G is a subgroup: nonempty, closed, has an identity for G, every element has
// an inverse in G. require_normal additionally checks s*G*s^-1 subset G for all
// s in S, which is only meaningful when S itself is a group.
SubgroupCertificate is_subgroup(const FiniteSemigroup& s, const ElementSet& g,
                                bool require_normal = false);

// --- enumeration and corpus -------------------------------------------------

// Yields every associative Cayley table of the given order exactly once (raw
// table identity, not isomorphism). Refuses order > 3.
void enumerate_semigroups(int order,
                          const std::function<void(const FiniteSemigroup&)>& fn);
long count_semigroups(int order);

// Named corpus families used for orders beyond the enumeration cap.
FiniteSemigroup right_zero_semigroup(int n);   // x*y = y
FiniteSemigroup left_zero_semigroup(int n);    // x*y = x
FiniteSemigroup cyclic_group(int n);           // Z_n under addition
FiniteSemigroup zmod_multiplication(int n);    // Z_n under multiplication
FiniteSemigroup rectangular_band(int a, int b);
// Cyclic monoid <a : a^(k+m) = a^k>, elements e, a, a^2, ..., a^(k+m-1).
FiniteSemigroup cyclic_monoid(int k, int m);
// All maps {0,1} -> {0,1} under composition (order 4).
FiniteSemigroup full_transformation_monoid_2();

// The bundled corpus of orders <= 6 used by the acceptance sweeps.
std::vector<std::pair<std::string, FiniteSemigroup>> bundled_corpus();

}  // namespace cst

#endif  // CST_SEMIGROUP_HPP_
