#include "cst/largeness.hpp"

#include <algorithm>

namespace cst {

std::string to_string(Status s) {
  switch (s) {
    case Status::Established: return "Established";
    case Status::RefutedWithinBounds: return "RefutedWithinBounds";
    case Status::RefutedExactly: return "RefutedExactly";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

SequenceFamily::SequenceFamily(std::vector<std::vector<int>> seqs)
    : sequences(std::move(seqs)) {
  if (sequences.empty())
    throw PreconditionError("sequence family must be nonempty");
  size_t len = sequences[0].size();
  if (len == 0) throw PreconditionError("sequences must have length >= 1");
  for (const auto& s : sequences)
    if (s.size() != len)
      throw PreconditionError("all sequences in a family must have equal length");
}

int SequenceFamily::at(int seq_index, int t) const {
  const auto& s = sequences.at(seq_index);
  if (t < 1 || t > static_cast<int>(s.size()))
    throw BoundsError("sequence index " + std::to_string(t) +
                      " outside the truncation length");
  return s[t - 1];
}

IndexTuple::IndexTuple(std::vector<int> v) : t(std::move(v)) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1) throw PreconditionError("index tuple entries must be positive");
    if (i > 0 && t[i] <= t[i - 1])
      throw PreconditionError("index tuple must be strictly increasing");
  }
}

// --- largeness notions --------------------------------------------------------

ThickResult is_thick(const FiniteSemigroup& s, const ElementSet& a) {
  for (int x = 0; x < s.order(); ++x) {
    bool ok = true;
    for (int t = 0; t < s.order() && ok; ++t) ok = a.contains(s.mul(t, x));
    if (ok) return {true, x};
  }
  return {false, std::nullopt};
}

namespace {

// Shrinks g to an inclusion-minimal set still satisfying keep(g), removing
// candidates in increasing index order.
ElementSet minimize_witness(ElementSet g,
                            const std::function<bool(const ElementSet&)>& keep) {
  for (int x = 0; x < g.universe(); ++x) {
    if (!g.contains(x)) continue;
    ElementSet candidate = g;
    candidate.erase(x);
    if (keep(candidate)) g = candidate;
  }
  return g;
}

}  // namespace

SyndeticResult is_syndetic(const FiniteSemigroup& s, const ElementSet& a) {
  ElementSet all = s.full_set();
  auto covers = [&](const ElementSet& g) {
    return translate_preimage(s, g, a) == all;
  };
  if (!covers(all)) return {false, std::nullopt};
  return {true, minimize_witness(all, covers)};
}

PwsResult is_piecewise_syndetic(const FiniteSemigroup& s, const ElementSet& a) {
  PwsResult r;
  // G^-1 A is monotone in G, so G = S is the binding case; x then ranges over S.
  ElementSet all = s.full_set();
  ElementSet covered = translate_preimage(s, all, a);
  for (int x = 0; x < s.order() && !r.combinatorial; ++x) {
    bool ok = true;
    for (int t = 0; t < s.order() && ok; ++t) ok = covered.contains(s.mul(t, x));
    if (ok) {
      int witness_x = x;
      ElementSet g = minimize_witness(all, [&](const ElementSet& cand) {
        ElementSet cov = translate_preimage(s, cand, a);
        for (int t = 0; t < s.order(); ++t)
          if (!cov.contains(s.mul(t, witness_x))) return false;
        return true;
      });
      r.combinatorial = true;
      r.witness = PwsWitness{g, witness_x};
    }
  }
  r.algebraic = a.intersects(kernel(s));
  r.agree = r.combinatorial == r.algebraic;
  return r;
}

CentralResult is_central(const FiniteSemigroup& s, const ElementSet& a) {
  ElementSet minimal = idempotents(s).intersect(kernel(s));
  for (int e : minimal.members())
    if (a.contains(e)) return {true, e};
  return {false, std::nullopt};
}

// --- product combinators -------------------------------------------------------

ElementSet fp_set(const FiniteSemigroup& s, const std::vector<int>& x, int from,
                  int to) {
  int n = static_cast<int>(x.size());
  if (from < 1 || from > to || to > n)
    throw BoundsError("fp_set range out of bounds");
  ElementSet out(s.order());
  int width = to - from + 1;
  for (unsigned long mask = 1; mask < (1ul << width); ++mask) {
    int acc = -1;
    for (int i = 0; i < width; ++i)
      if (mask & (1ul << i)) {
        int v = x[from - 1 + i];
        acc = acc < 0 ? v : s.mul(acc, v);
      }
    out.insert(acc);
  }
  return out;
}

ElementSet zfp_k(const FiniteSemigroup& s, const SequenceFamily& family, int k) {
  int length = family.length();
  if (k < 1 || k > length)
    throw BoundsError("zfp_k requires 1 <= k <= sequence length");
  ElementSet out(s.order());
  int width = length - k + 1;
  int l = family.size();
  for (unsigned long mask = 1; mask < (1ul << width); ++mask) {
    std::vector<int> positions;
    for (int i = 0; i < width; ++i)
      if (mask & (1ul << i)) positions.push_back(k + i);
    // Per-index choice among the family's sequences.
    std::vector<int> choice(positions.size(), 0);
    while (true) {
      int acc = -1;
      for (size_t j = 0; j < positions.size(); ++j) {
        int v = family.at(choice[j], positions[j]);
        acc = acc < 0 ? v : s.mul(acc, v);
      }
      out.insert(acc);
      size_t j = positions.size();
      while (j > 0 && choice[j - 1] == l - 1) choice[--j] = 0;
      if (j == 0) break;
      ++choice[j - 1];
    }
  }
  return out;
}

int eval_x(const FiniteSemigroup& s, const std::vector<int>& a,
           const IndexTuple& t, const std::vector<int>& f) {
  int m = t.m();
  if (static_cast<int>(a.size()) != m + 1)
    throw PreconditionError("a must have m+1 entries");
  if (m == 0) throw PreconditionError("m must be positive");
  if (t(m) > static_cast<int>(f.size()))
    throw BoundsError("index tuple exceeds the sequence truncation length");
  int acc = -1;
  for (int j = 1; j <= m; ++j) {
    int term = s.mul(a[j - 1], f[t(j) - 1]);
    acc = acc < 0 ? term : s.mul(acc, term);
  }
  return s.mul(acc, a[m]);
}

int eval_witness(const FiniteSemigroup& s, const JWitness& w,
                 const std::vector<int>& f) {
  if (static_cast<int>(w.a.size()) != w.m + 1)
    throw PreconditionError("witness must carry m+1 a-slots");
  if (w.t.m() != w.m) throw PreconditionError("witness index tuple length mismatch");
  std::vector<int> word;
  for (int j = 1; j <= w.m; ++j) {
    for (int v : w.a[j - 1]) word.push_back(v);
    int idx = w.t(j);
    if (idx > static_cast<int>(f.size()))
      throw BoundsError("witness index exceeds the sequence truncation length");
    word.push_back(f[idx - 1]);
  }
  for (int v : w.a[w.m]) word.push_back(v);
  return s.mul_word(word);
}

// --- bounded searches -----------------------------------------------------------

bool for_each_increasing_tuple(
    int m, int lo, int hi,
    const std::function<bool(const std::vector<int>&)>& fn) {
  if (m <= 0 || lo > hi || hi - lo + 1 < m) return false;
  std::vector<int> t(m);
  for (int i = 0; i < m; ++i) t[i] = lo + i;
  while (true) {
    if (fn(t)) return true;
    int i = m - 1;
    while (i >= 0 && t[i] == hi - (m - 1 - i)) --i;
    if (i < 0) return false;
    ++t[i];
    for (int j = i + 1; j < m; ++j) t[j] = t[j - 1] + 1;
  }
}

namespace {

// Odometer over S^width in lexicographic order.
bool for_each_vector(int width, int order,
                     const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> a(width, 0);
  while (true) {
    if (fn(a)) return true;
    int i = width - 1;
    while (i >= 0 && a[i] == order - 1) a[i--] = 0;
    if (i < 0) return false;
    ++a[i];
  }
}

std::optional<JWitness> j_search_general(const FiniteSemigroup& s,
                                         const ElementSet& set,
                                         const SequenceFamily& family,
                                         int max_m) {
  int length = family.length();
  std::optional<JWitness> found;
  for (int m = 1; m <= max_m && !found; ++m) {
    for_each_increasing_tuple(m, 1, length, [&](const std::vector<int>& t) {
      IndexTuple tup(t);
      return for_each_vector(m + 1, s.order(), [&](const std::vector<int>& a) {
        for (int fi = 0; fi < family.size(); ++fi)
          if (!set.contains(eval_x(s, a, tup, family.sequences[fi])))
            return false;
        JWitness w;
        w.m = m;
        for (int v : a) w.a.push_back({v});
        w.t = tup;
        found = w;
        return true;
      });
    });
  }
  return found;
}

// Commutative-monoid shortcut: search a in S and H subset [1,L] with
// a + sum_{t in H} f(t) in the set for all f; padded with the identity into
// the general witness shape.
std::optional<JWitness> j_search_commutative(const FiniteSemigroup& s,
                                             const ElementSet& set,
                                             const SequenceFamily& family,
                                             int max_m) {
  int length = family.length();
  int e = *s.identity();
  std::optional<JWitness> found;
  for (int m = 1; m <= max_m && !found; ++m) {
    for_each_increasing_tuple(m, 1, length, [&](const std::vector<int>& h) {
      for (int a = 0; a < s.order(); ++a) {
        bool ok = true;
        for (int fi = 0; fi < family.size() && ok; ++fi) {
          int acc = a;
          for (int t : h) acc = s.mul(acc, family.at(fi, t));
          ok = set.contains(acc);
        }
        if (ok) {
          JWitness w;
          w.m = m;
          w.a.push_back({a});
          for (int j = 1; j <= m; ++j) w.a.push_back({e});
          w.t = IndexTuple(h);
          found = w;
          return true;
        }
      }
      return false;
    });
  }
  return found;
}

}  // namespace

Verdict<JWitness> is_j_set_bounded(const FiniteSemigroup& s, const ElementSet& a,
                                   const SequenceFamily& family, int max_m) {
  if (max_m > family.length())
    throw PreconditionError("max_m exceeds the family truncation length");
  Verdict<JWitness> v;
  v.bounds = "max_m=" + std::to_string(max_m) +
             " L=" + std::to_string(family.length());
  std::optional<JWitness> w =
      (s.commutative() && s.identity())
          ? j_search_commutative(s, a, family, max_m)
          : j_search_general(s, a, family, max_m);
  if (w) {
    // Re-check before returning: every emitted witness must be re-evaluable.
    for (const auto& f : family.sequences)
      if (!a.contains(eval_witness(s, *w, f)))
        throw InvariantViolation("J-witness failed its own recheck");
    v.status = Status::Established;
    v.witness = std::move(w);
  } else {
    v.status = Status::RefutedWithinBounds;
  }
  return v;
}

Verdict<std::vector<int>> is_ip_r_star_bounded(const FiniteSemigroup& s,
                                               const ElementSet& a, int r,
                                               const ElementSet& pool) {
  if (r < 1) throw PreconditionError("r must be >= 1");
  auto candidates = pool.members();
  if (r > static_cast<int>(candidates.size()))
    throw PreconditionError(
        "pool too small for an injective sequence of length r");
  Verdict<std::vector<int>> v;
  v.bounds = "r=" + std::to_string(r) +
             " pool_size=" + std::to_string(candidates.size()) +
             (pool == s.full_set() ? " (exhaustive: pool = S)" : "");
  std::vector<int> seq;
  std::vector<bool> used(candidates.size(), false);
  std::optional<std::vector<int>> counterexample;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(seq.size()) == r) {
      if (!fp_set(s, seq, 1, r).intersects(a)) {
        counterexample = seq;
        return true;
      }
      return false;
    }
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      seq.push_back(candidates[i]);
      if (rec()) return true;
      seq.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (rec()) {
    v.status = Status::RefutedExactly;
    v.witness = std::move(counterexample);
  } else {
    v.status = Status::Established;
  }
  return v;
}

}  // namespace cst
