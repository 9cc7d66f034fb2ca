#ifndef CST_FILTER_HPP_
#define CST_FILTER_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cst/largeness.hpp"
#include "cst/semigroup.hpp"

namespace cst {

// A filter on a finite semigroup, given by a base. Every filter on a finite
// set is principal: the generated filter is exactly the supersets of
// B = intersection of the base, so B carries all the information. The literal
// quantifier-over-filter-sets checks are still run in several places as a
// guard against oversimplified semantics.
struct FilterBase {
  std::vector<ElementSet> base;
};

// The trivial filter {S}.
FilterBase trivial_filter(const FiniteSemigroup& s);

// One subset literal per line; '#' comments allowed.
FilterBase parse_filter_base(const std::string& text, const FiniteSemigroup& s);

// B = intersection of the base. Validates: base nonempty, every base set
// nonempty, B nonempty (an empty B would make the generated filter contain
// the empty set).
ElementSet closure_set(const FiniteSemigroup& s, const FilterBase& f);

struct IdempotencyReport {
  bool idempotent = false;
  bool literal = false;   // forall V >= B: {y : y^-1 V in filter} in filter
  bool shortcut = false;  // B*B subset of B
};

// The two checks must agree; disagreement raises InvariantViolation.
IdempotencyReport is_idempotent_filter(const FiniteSemigroup& s,
                                       const FilterBase& f);

// B reindexed as a semigroup of its own. PreconditionError when B is not
// multiplicatively closed.
struct ClosureSemigroup {
  FiniteSemigroup sub;
  std::vector<int> to_parent;
  ElementSet closure;  // B in parent coordinates
};
ClosureSemigroup closure_semigroup(const FiniteSemigroup& s, const FilterBase& f);

// --- filter-relative largeness -----------------------------------------------

struct FPwsWitness {
  int v_size = 0;  // |V| for the binding case V = B
  int y = 0;       // y in V with B*y subset of V^-1 A
};

struct FPwsResult {
  bool combinatorial = false;  // forall V >= B exists y in V: B*y subset V^-1 A
  std::optional<FPwsWitness> witness;  // for V = B when combinatorial
  bool algebraic = false;              // A meets K(B)
  bool agree = false;
};

FPwsResult is_pws_f_syndetic(const FiniteSemigroup& s, const FilterBase& f,
                             const ElementSet& a);

struct FCentralResult {
  bool central = false;
  std::optional<int> witness_idempotent;  // idempotent of K(B) inside A
};

FCentralResult is_f_central(const FiniteSemigroup& s, const FilterBase& f,
                            const ElementSet& a);

struct FIpResult {
  bool holds = false;
  // star=false: an idempotent of B inside A; star=true and refuted: an
  // idempotent of B missing from A.
  std::optional<int> witness;
};

FIpResult is_f_ip(const FiniteSemigroup& s, const FilterBase& f,
                  const ElementSet& a, bool star);

// The family is filter-good when some k <= k_max has all zigzag products with
// min index >= k landing inside B (B suffices: B is contained in every filter
// set). Witness: the least such k.
Verdict<int> is_f_good_bounded(const FiniteSemigroup& s, const FilterBase& f,
                               const SequenceFamily& family, int k_max);

// The J-set search restricted to filter-good families: certifies goodness
// first (PreconditionError when the certificate fails), then delegates to the
// plain bounded J-search.
Verdict<JWitness> is_f_j_bounded(const FiniteSemigroup& s, const FilterBase& f,
                                 const ElementSet& a, const SequenceFamily& family,
                                 int max_m, int k_max);

// --- truncated integer filters ------------------------------------------------

// The window truncation of the idempotent filter generated by the tails
// FS(x_n)_{n=m}^{inf} of an injective sequence. tails[m-1] is the length-L
// truncation of the tail at m; the tails are nested decreasing. closure() is
// the m=1 tail: it determines every other base set, and truncation makes the
// literal intersection (the last tail) meaningless.
struct TruncatedFilter {
  std::vector<long> x;
  int truncation = 0;  // L
  std::vector<std::set<long>> tails;

  const std::set<long>& closure() const { return tails.front(); }
};

// Repeated entries raise ValidationError (IP sets use injective sequences).
TruncatedFilter filter_from_ip_sequence(const std::vector<long>& x, int l);

struct TruncatedIdempotencyReport {
  bool passed = false;
  int guard = 0;  // L', the largest index allowed in the shifting element y
  // When failed: the (m, y) pair with no tail inside y^-1 C.
  std::optional<std::pair<int, long>> failure;
};

// Truncated idempotency in the sense of the tail-shift argument: for every
// tail C = FS(x)_{m..L} and every y summed from indices in [m, guard], some
// suffix tail FS(x)_{N..L} lies in y^-1 C. guard < L keeps the claim inside
// the computed table.
TruncatedIdempotencyReport check_truncated_idempotency(const TruncatedFilter& f,
                                                       int guard);

// Splits x into n residue-class subsequences (class with indices = 0 mod n
// first, then 1, ...; indices 1-based), truncated to equal length.
std::vector<std::vector<long>> good_family_from_residues(const std::vector<long>& x,
                                                         int n);

// Zigzag finite sums with min index >= k: per-index choice among the family's
// sequences, summed over nonempty increasing index sets.
std::set<long> zfs_window(const std::vector<std::vector<long>>& family, int k);

// --- filter-contained IP notions (truncated) -----------------------------------

// The sequence's FS tails eventually enter every base set: for every tail V of
// the filter there is m with FS(x)_{m..len} inside V. Witness: the largest m
// needed.
Verdict<int> f_sub_ip_sequence(const TruncatedFilter& f, const std::vector<long>& x);

// Some certified sequence from the pool has FS(x)_{m..m+r} inside the object.
// Witness: (pool index, m). Pool sequences failing f_sub_ip_sequence are
// skipped. PreconditionError on an empty pool.
Verdict<std::pair<int, int>> f_sub_ip_set_r(const TruncatedFilter& f,
                                            const std::set<long>& object, int r,
                                            const std::vector<std::vector<long>>& pool);

// The object meets FS(x)_{m..m+r} for every certified pool sequence and every
// m; exhaustive over the pool, so Established is exact over the pool only.
// Refutation witness: the (pool index, m) whose block misses the object.
Verdict<std::pair<int, int>> f_sub_ip_star_r(const TruncatedFilter& f,
                                             const std::set<long>& object, int r,
                                             const std::vector<std::vector<long>>& pool);

// Semigroup flavor of the sequence mode, with FP in place of FS.
Verdict<int> f_sub_ip_sequence(const FiniteSemigroup& s, const FilterBase& f,
                               const std::vector<int>& x);

}  // namespace cst

#endif  // CST_FILTER_HPP_
