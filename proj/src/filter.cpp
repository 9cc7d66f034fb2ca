#include "cst/filter.hpp"

#include <algorithm>
#include <sstream>

#include "cst/ideal.hpp"
#include "cst/window.hpp"

namespace cst {

FilterBase trivial_filter(const FiniteSemigroup& s) {
  return FilterBase{{s.full_set()}};
}

FilterBase parse_filter_base(const std::string& text, const FiniteSemigroup& s) {
  FilterBase f;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    size_t b = line.find_last_not_of(" \t\r");
    f.base.push_back(parse_subset(line.substr(a, b - a + 1), s));
  }
  return f;
}

ElementSet closure_set(const FiniteSemigroup& s, const FilterBase& f) {
  if (f.base.empty()) throw ValidationError("filter base is empty");
  ElementSet b = s.full_set();
  for (const auto& v : f.base) {
    if (v.empty()) throw ValidationError("filter base contains the empty set");
    b = b.intersect(v);
  }
  if (b.empty())
    throw ValidationError("filter base has empty intersection; the generated filter would contain the empty set");
  return b;
}

namespace {

// Calls fn on every V with b subset of V subset of S, in a deterministic order
// (subsets of the complement by increasing bitmask). Stops early when fn
// returns false.
bool for_each_superset(const FiniteSemigroup& s, const ElementSet& b,
                       const std::function<bool(const ElementSet&)>& fn) {
  std::vector<int> outside;
  for (int x = 0; x < s.order(); ++x)
    if (!b.contains(x)) outside.push_back(x);
  if (outside.size() > 24) throw ResourceError("too many filter supersets to enumerate");
  for (unsigned long mask = 0; mask < (1ul << outside.size()); ++mask) {
    ElementSet v = b;
    for (size_t i = 0; i < outside.size(); ++i)
      if (mask & (1ul << i)) v.insert(outside[i]);
    if (!fn(v)) return false;
  }
  return true;
}

bool is_closed(const FiniteSemigroup& s, const ElementSet& b) {
  for (int x : b.members())
    for (int y : b.members())
      if (!b.contains(s.mul(x, y))) return false;
  return true;
}

}  // namespace

IdempotencyReport is_idempotent_filter(const FiniteSemigroup& s,
                                       const FilterBase& f) {
  ElementSet b = closure_set(s, f);
  IdempotencyReport rep;

  // Literal: for every filter set V (every superset of B), the set
  // {y : y^-1 V in filter} is itself a filter set.
  rep.literal = for_each_superset(s, b, [&](const ElementSet& v) {
    ElementSet good_y(s.order());
    for (int y = 0; y < s.order(); ++y) {
      bool all_in = true;
      for (int z : b.members())
        if (!v.contains(s.mul(y, z))) {
          all_in = false;
          break;
        }
      if (all_in) good_y.insert(y);
    }
    return b.is_subset_of(good_y);
  });

  rep.shortcut = is_closed(s, b);
  if (rep.literal != rep.shortcut)
    throw InvariantViolation("idempotent-filter literal and shortcut checks disagree");
  rep.idempotent = rep.shortcut;
  return rep;
}

ClosureSemigroup closure_semigroup(const FiniteSemigroup& s, const FilterBase& f) {
  ElementSet b = closure_set(s, f);
  if (!is_closed(s, b))
    throw PreconditionError("filter closure is not a subsemigroup");
  ClosureSemigroup out{FiniteSemigroup(1, {0}), {}, b};
  out.sub = s.restrict_to(b, out.to_parent);
  return out;
}

FPwsResult is_pws_f_syndetic(const FiniteSemigroup& s, const FilterBase& f,
                             const ElementSet& a) {
  auto cs = closure_semigroup(s, f);
  const ElementSet& b = cs.closure;
  FPwsResult res;

  // Combinatorial: for every filter set V there is y in V with B*y inside
  // V^-1 A. (The finite-scale collapse: the finite-set quantifiers bind at
  // F_V = V and H = W_V = B.)
  res.combinatorial = for_each_superset(s, b, [&](const ElementSet& v) {
    ElementSet pre = translate_preimage(s, v, a);
    for (int y : v.members()) {
      bool ok = true;
      for (int h : b.members())
        if (!pre.contains(s.mul(h, y))) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  });
  if (res.combinatorial) {
    // Rerun the binding case V = B for the witness.
    ElementSet pre = translate_preimage(s, b, a);
    for (int y : b.members()) {
      bool ok = true;
      for (int h : b.members())
        if (!pre.contains(s.mul(h, y))) {
          ok = false;
          break;
        }
      if (ok) {
        res.witness = FPwsWitness{static_cast<int>(b.size()), y};
        break;
      }
    }
  }

  ElementSet k_sub = kernel(cs.sub);
  for (int i : k_sub.members())
    if (a.contains(cs.to_parent[i])) {
      res.algebraic = true;
      break;
    }
  res.agree = res.combinatorial == res.algebraic;
  return res;
}

FCentralResult is_f_central(const FiniteSemigroup& s, const FilterBase& f,
                            const ElementSet& a) {
  auto cs = closure_semigroup(s, f);
  ElementSet k_sub = kernel(cs.sub);
  FCentralResult res;
  for (int i : k_sub.members()) {
    int x = cs.to_parent[i];
    if (s.mul(x, x) == x && a.contains(x)) {
      res.central = true;
      res.witness_idempotent = x;
      break;
    }
  }
  return res;
}

FIpResult is_f_ip(const FiniteSemigroup& s, const FilterBase& f,
                  const ElementSet& a, bool star) {
  auto cs = closure_semigroup(s, f);
  std::vector<int> idem;
  for (int x : cs.closure.members())
    if (s.mul(x, x) == x) idem.push_back(x);
  if (idem.empty())
    throw InvariantViolation("finite subsemigroup without idempotents");
  FIpResult res;
  if (!star) {
    for (int e : idem)
      if (a.contains(e)) {
        res.holds = true;
        res.witness = e;
        break;
      }
  } else {
    res.holds = true;
    for (int e : idem)
      if (!a.contains(e)) {
        res.holds = false;
        res.witness = e;
        break;
      }
  }
  return res;
}

Verdict<int> is_f_good_bounded(const FiniteSemigroup& s, const FilterBase& f,
                               const SequenceFamily& family, int k_max) {
  if (family.size() == 0) throw PreconditionError("empty family");
  if (k_max < 1 || k_max > family.length())
    throw PreconditionError("k_max must lie in [1, family length]");
  ElementSet b = closure_set(s, f);
  Verdict<int> v;
  v.bounds = "k_max=" + std::to_string(k_max) +
             " (checked against B, which every filter set contains)";
  for (int k = 1; k <= k_max; ++k) {
    ElementSet z = zfp_k(s, family, k);
    if (!z.empty() && z.is_subset_of(b)) {
      v.status = Status::Established;
      v.witness = k;
      return v;
    }
  }
  v.status = Status::RefutedWithinBounds;
  return v;
}

Verdict<JWitness> is_f_j_bounded(const FiniteSemigroup& s, const FilterBase& f,
                                 const ElementSet& a, const SequenceFamily& family,
                                 int max_m, int k_max) {
  auto good = is_f_good_bounded(s, f, family, k_max);
  if (!good.established())
    throw PreconditionError("family is not certified filter-good within k_max");
  auto v = is_j_set_bounded(s, a, family, max_m);
  v.bounds += " goodness_k=" + std::to_string(*good.witness);
  return v;
}

// --- truncated integer filters -------------------------------------------------

TruncatedFilter filter_from_ip_sequence(const std::vector<long>& x, int l) {
  if (l < 1 || l > static_cast<int>(x.size()))
    throw BoundsError("truncation length out of range");
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (x[i] == x[j]) throw ValidationError("sequence must be injective");
  TruncatedFilter f;
  f.x.assign(x.begin(), x.begin() + l);
  f.truncation = l;
  for (int m = 1; m <= l; ++m) f.tails.push_back(fs_window(f.x, m, l));
  return f;
}

TruncatedIdempotencyReport check_truncated_idempotency(const TruncatedFilter& f,
                                                       int guard) {
  if (guard < 0 || guard >= f.truncation)
    throw PreconditionError("guard must satisfy 0 <= guard < truncation");
  TruncatedIdempotencyReport rep;
  rep.guard = guard;
  rep.passed = true;
  int l = f.truncation;
  for (int m = 1; m <= l && rep.passed; ++m) {
    const std::set<long>& c = f.tails[m - 1];
    if (m > guard) continue;  // no shifting element within the guard
    for (long y : fs_window(f.x, m, guard)) {
      bool shifted = false;
      for (int n = 1; n <= l && !shifted; ++n) {
        shifted = true;
        for (long z : fs_window(f.x, n, l))
          if (!c.count(y + z)) {
            shifted = false;
            break;
          }
      }
      if (!shifted) {
        rep.passed = false;
        rep.failure = {m, y};
        break;
      }
    }
  }
  return rep;
}

std::vector<std::vector<long>> good_family_from_residues(const std::vector<long>& x,
                                                         int n) {
  if (n < 2) throw PreconditionError("need at least two residue classes");
  if (static_cast<int>(x.size()) < n)
    throw BoundsError("sequence shorter than the number of residue classes");
  std::vector<std::vector<long>> classes(n);
  for (int j = 1; j <= static_cast<int>(x.size()); ++j)
    classes[j % n].push_back(x[j - 1]);
  size_t len = classes[0].size();
  for (const auto& c : classes) len = std::min(len, c.size());
  for (auto& c : classes) c.resize(len);
  return classes;
}

std::set<long> zfs_window(const std::vector<std::vector<long>>& family, int k) {
  if (family.empty()) throw PreconditionError("empty family");
  size_t len = family[0].size();
  for (const auto& seq : family) len = std::min(len, seq.size());
  int l = static_cast<int>(len);
  if (k < 1 || k > l) throw BoundsError("k out of [1, family length]");
  std::set<long> out;
  int width = l - k + 1;
  if (width > 20) throw ResourceError("zigzag index range too wide");
  for (unsigned mask = 1; mask < (1u << width); ++mask) {
    std::vector<int> idx;  // 1-based indices in H
    for (int i = 0; i < width; ++i)
      if (mask & (1u << i)) idx.push_back(k + i);
    // Per-index choice of sequence.
    std::vector<size_t> choice(idx.size(), 0);
    while (true) {
      long sum = 0;
      for (size_t j = 0; j < idx.size(); ++j)
        sum += family[choice[j]][idx[j] - 1];
      out.insert(sum);
      size_t i = 0;
      while (i < choice.size() && choice[i] + 1 == family.size()) choice[i++] = 0;
      if (i == choice.size()) break;
      ++choice[i];
    }
  }
  return out;
}

Verdict<int> f_sub_ip_sequence(const TruncatedFilter& f, const std::vector<long>& x) {
  int len = static_cast<int>(x.size());
  if (len < 1) throw PreconditionError("empty sequence");
  Verdict<int> v;
  v.bounds = "len=" + std::to_string(len) +
             " tails=" + std::to_string(f.truncation);
  int worst_m = 1;
  for (const auto& tail : f.tails) {
    bool found = false;
    for (int m = 1; m <= len; ++m) {
      bool inside = true;
      for (long s : fs_window(x, m, len))
        if (!tail.count(s)) {
          inside = false;
          break;
        }
      if (inside) {
        worst_m = std::max(worst_m, m);
        found = true;
        break;
      }
    }
    if (!found) {
      v.status = Status::RefutedWithinBounds;
      return v;
    }
  }
  v.status = Status::Established;
  v.witness = worst_m;
  return v;
}

Verdict<std::pair<int, int>> f_sub_ip_set_r(const TruncatedFilter& f,
                                            const std::set<long>& object, int r,
                                            const std::vector<std::vector<long>>& pool) {
  if (pool.empty()) throw PreconditionError("empty sequence pool");
  if (r < 0) throw PreconditionError("r must be >= 0");
  Verdict<std::pair<int, int>> v;
  v.bounds = "pool=" + std::to_string(pool.size()) + " r=" + std::to_string(r);
  for (size_t i = 0; i < pool.size(); ++i) {
    if (!f_sub_ip_sequence(f, pool[i]).established()) continue;
    int len = static_cast<int>(pool[i].size());
    for (int m = 1; m + r <= len; ++m) {
      bool inside = true;
      for (long s : fs_window(pool[i], m, m + r))
        if (!object.count(s)) {
          inside = false;
          break;
        }
      if (inside) {
        v.status = Status::Established;
        v.witness = {static_cast<int>(i), m};
        return v;
      }
    }
  }
  v.status = Status::RefutedWithinBounds;
  return v;
}

Verdict<std::pair<int, int>> f_sub_ip_star_r(const TruncatedFilter& f,
                                             const std::set<long>& object, int r,
                                             const std::vector<std::vector<long>>& pool) {
  if (pool.empty()) throw PreconditionError("empty sequence pool");
  if (r < 0) throw PreconditionError("r must be >= 0");
  Verdict<std::pair<int, int>> v;
  v.bounds = "pool=" + std::to_string(pool.size()) + " r=" + std::to_string(r) +
             " (exact over the pool only)";
  for (size_t i = 0; i < pool.size(); ++i) {
    if (!f_sub_ip_sequence(f, pool[i]).established()) continue;
    int len = static_cast<int>(pool[i].size());
    for (int m = 1; m + r <= len; ++m) {
      bool meets = false;
      for (long s : fs_window(pool[i], m, m + r))
        if (object.count(s)) {
          meets = true;
          break;
        }
      if (!meets) {
        v.status = Status::RefutedWithinBounds;
        v.witness = {static_cast<int>(i), m};
        return v;
      }
    }
  }
  v.status = Status::Established;
  return v;
}

Verdict<int> f_sub_ip_sequence(const FiniteSemigroup& s, const FilterBase& f,
                               const std::vector<int>& x) {
  int len = static_cast<int>(x.size());
  if (len < 1) throw PreconditionError("empty sequence");
  ElementSet b = closure_set(s, f);
  Verdict<int> v;
  v.bounds = "len=" + std::to_string(len) + " (all filter sets enumerated)";
  int worst_m = 1;
  bool ok = for_each_superset(s, b, [&](const ElementSet& set_v) {
    for (int m = 1; m <= len; ++m)
      if (fp_set(s, x, m, len).is_subset_of(set_v)) {
        worst_m = std::max(worst_m, m);
        return true;
      }
    return false;
  });
  if (ok) {
    v.status = Status::Established;
    v.witness = worst_m;
  } else {
    v.status = Status::RefutedWithinBounds;
  }
  return v;
}

}  // namespace cst
