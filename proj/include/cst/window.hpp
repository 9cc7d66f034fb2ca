#ifndef CST_WINDOW_HPP_
#define CST_WINDOW_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cst/largeness.hpp"

namespace cst {

// A subset of the integer window [1, W]. All verdicts about window sets are
// statements within bounds, never theorems about N.
class WindowSet {
 public:
  WindowSet(long w, std::string generator = "")
      : w_(w), in_(static_cast<size_t>(w) + 1, false), generator_(std::move(generator)) {
    if (w < 1) throw PreconditionError("window bound must be >= 1");
  }

  long bound() const { return w_; }
  const std::string& generator() const { return generator_; }

  bool contains(long x) const { return x >= 1 && x <= w_ && in_[x]; }
  void insert(long x) {
    if (x < 1 || x > w_) throw BoundsError("window member out of [1,W]");
    in_[x] = true;
  }

  std::vector<long> members() const {
    std::vector<long> m;
    for (long x = 1; x <= w_; ++x)
      if (in_[x]) m.push_back(x);
    return m;
  }

  WindowSet intersect(const WindowSet& other) const;

  // Generator specs: "mod k,r" (the residue class), "intervals a-b,c-d,...",
  // "list v1,v2,...". Materialized into the window immediately.
  static WindowSet from_spec(long w, const std::string& spec);

  // The window truncation of U_n [2^n, 2^n+n], the canonical thick example.
  static WindowSet power_blocks(long w);

 private:
  long w_;
  std::vector<bool> in_;
  std::string generator_;
};

struct WindowVerdicts {
  Verdict<long> syndetic;                   // witness: position of the worst gap when refuted
  Verdict<long> thick;                      // witness: start of a contained block
  Verdict<std::pair<long, long>> pws;       // witness: (fattening g, block start)
};

// Bounded-quantifier classification: syndetic iff no gap of A in [1, W-gap]
// exceeds gap; thick iff A contains an interval of length block; piecewise
// syndetic iff some g <= gap has the g-fattening U_{t=0..g}(-t+A) containing
// an interval of length block.
WindowVerdicts classify_window(const WindowSet& a, long gap, long block);

// All finite sums over nonempty increasing index subsets of [from, to]
// (1-based) of the given sequence.
std::set<long> fs_window(const std::vector<long>& x, int from, int to);

// Witness chain for the bounded-depth commutative Central Sets Theorem search.
struct CstWitnessChain {
  std::vector<long> a;                // a_1..a_n
  std::vector<std::vector<int>> h;    // H_1..H_n, each strictly increasing; max H_i < min H_{i+1}
};

struct CstSearchBounds {
  int t_max = 20;      // largest sequence index usable in any H_n
  long a_max = 50;     // largest a_n tried
  int h_size_max = 2;  // largest |H_n| tried
};

// Bounded search for the conclusion of the original Central Sets Theorem:
// a chain (a_n, H_n) with max H_n < min H_{n+1} such that for every nonempty
// F subset of [1, depth] and every sequence y_i,
// sum_{n in F} (a_n + sum_{t in H_n} y_{i,t}) lies in A. Sums leaving the
// window reject the candidate. First witness in deterministic order.
Verdict<CstWitnessChain> cst_witness_commutative(
    const WindowSet& a, const std::vector<std::vector<long>>& ys, int depth,
    const CstSearchBounds& bounds);

// Independent re-verification pass (separate from the search path): checks the
// chain shape and re-evaluates every nonempty F and every sequence.
bool verify_cst_chain(const WindowSet& a, const std::vector<std::vector<long>>& ys,
                      int depth, const CstWitnessChain& chain);

}  // namespace cst

#endif  // CST_WINDOW_HPP_
