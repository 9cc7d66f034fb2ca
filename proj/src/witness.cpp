#include "cst/witness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cst/ideal.hpp"

namespace cst {

ElementSet star_set(const FiniteSemigroup& s, int e, const ElementSet& a) {
  if (e < 0 || e >= s.order()) throw BoundsError("idempotent index out of range");
  if (s.mul(e, e) != e) throw PreconditionError("star_set needs an idempotent");
  ElementSet out(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (a.contains(s.mul(x, e))) out.insert(x);
  return out;
}

namespace {

std::string subset_label(const std::vector<int>& subset) {
  std::string out = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

JWitness entry_witness(const CstEntry& e) {
  JWitness w;
  w.m = e.m;
  w.a = e.alpha;
  w.t = e.tau;
  return w;
}

// Merge the chosen families into one (deduplicated, order-preserving).
SequenceFamily merge_families(const std::vector<SequenceFamily>& families,
                              const std::vector<int>& subset) {
  std::vector<std::vector<int>> seqs;
  for (int i : subset)
    for (const auto& seq : families[i].sequences)
      if (std::find(seqs.begin(), seqs.end(), seq) == seqs.end())
        seqs.push_back(seq);
  return SequenceFamily(seqs);
}

}  // namespace

JPipelineResult j_witness_via_hj(const FiniteSemigroup& s, const FilterBase& f,
                                 const ElementSet& a, const SequenceFamily& family,
                                 const ElementSet& v, int floor_m,
                                 int k_max, int hj_cap) {
  if (family.size() == 0) throw PreconditionError("empty family");
  if (floor_m < 0) throw PreconditionError("floor_m must be >= 0");
  ElementSet b = closure_set(s, f);
  if (!b.is_subset_of(v))
    throw PreconditionError("V must contain the filter closure");

  auto pws = is_pws_f_syndetic(s, f, a);
  if (!pws.combinatorial)
    throw PreconditionError("target set fails the pws-filter-syndetic certificate");

  auto good = is_f_good_bounded(s, f, family, std::min(k_max, family.length()));
  if (!good.established())
    throw PreconditionError("family is not certified filter-good within k_max");
  int k = *good.witness;

  JPipelineTrace trace;
  trace.v = v;
  trace.w_v = b;
  trace.k = k;

  // Smallest F_V (by size, then lexicographic) admitting a y in V with
  // B*y inside F_V^-1 A. Existence is guaranteed by the certificate above
  // (F_V = V always works).
  std::vector<int> v_members = v.members();
  bool located = false;
  for (int size = 1; size <= static_cast<int>(v_members.size()) && !located; ++size)
    for_each_increasing_tuple(
        size, 0, static_cast<int>(v_members.size()) - 1,
        [&](const std::vector<int>& positions) {
          ElementSet fv(s.order());
          for (int p : positions) fv.insert(v_members[p]);
          ElementSet pre = translate_preimage(s, fv, a);
          for (int y : v_members) {
            bool ok = true;
            for (int hh : b.members())
              if (!pre.contains(s.mul(hh, y))) {
                ok = false;
                break;
              }
            if (ok) {
              trace.f_v = fv;
              trace.y = y;
              located = true;
              return true;
            }
          }
          return false;
        });
  if (!located)
    throw InvariantViolation("pws certificate held but no (F_V, y) was found");

  int r = trace.f_v.size();
  int t_alpha = family.size();
  trace.r = r;
  auto hj_res = hj::hj_number(r, t_alpha, hj_cap);
  if (!hj_res.determined)
    throw ResourceError("Hales-Jewett dimension HJ(" + std::to_string(r) + "," +
                        std::to_string(t_alpha) + ") not determined within cap " +
                        std::to_string(hj_cap));
  int n = hj_res.value;
  trace.hj_n = n;
  if (k + floor_m + n > family.length())
    throw BoundsError("family too short for the shifted index block [" +
                      std::to_string(k + floor_m + 1) + "," +
                      std::to_string(k + floor_m + n) + "]");

  // Color every tuple in family^N (tuples, not the product set: colliding
  // products would merge colors otherwise) by the least element of F_V that
  // steers t * product * y into A.
  std::vector<int> fv_members = trace.f_v.members();
  auto product_of = [&](const hj::Word& w) {
    std::vector<int> factors;
    for (int j = 0; j < n; ++j)
      factors.push_back(family.at(w[j] - 1, k + floor_m + j + 1));
    return s.mul_word(factors);
  };
  auto coloring = [&](const hj::Word& w) {
    int x = product_of(w);
    int xy = s.mul(x, trace.y);
    for (size_t c = 0; c < fv_members.size(); ++c)
      if (a.contains(s.mul(fv_members[c], xy))) return static_cast<int>(c);
    throw InvariantViolation("tuple product escaped F_V^-1 A despite the certificate");
  };

  auto line = hj::find_mono_line(coloring, n, t_alpha);
  if (!line)
    throw InvariantViolation("no monochromatic line at the certified dimension");
  trace.line = line->tmpl;
  int color = coloring(line->points[0]);
  trace.color = fv_members[color];

  // Fold the line into the witness shape: stars become the f(h) slots, fixed
  // letters are baked into the surrounding words, the color goes in front and
  // y at the back.
  JWitness w;
  std::vector<int> current{trace.color};
  for (int j = 0; j < n; ++j) {
    int idx = k + floor_m + j + 1;
    if (line->tmpl[j] == hj::kStar) {
      w.a.push_back(current);
      current.clear();
      w.t.t.push_back(idx);
    } else {
      current.push_back(family.at(line->tmpl[j] - 1, idx));
    }
  }
  current.push_back(trace.y);
  w.a.push_back(current);
  w.m = static_cast<int>(w.t.t.size());

  if (w.t.t.front() <= floor_m)
    throw InvariantViolation("index floor contract violated");
  for (int i = 0; i < family.size(); ++i)
    if (!a.contains(eval_witness(s, w, family.sequences[i])))
      throw InvariantViolation("extracted witness failed re-evaluation");

  return JPipelineResult{std::move(w), std::move(trace)};
}

CstWitnessMap cst_build(const FiniteSemigroup& s, const FilterBase& f,
                        const ElementSet& a,
                        const std::vector<SequenceFamily>& families,
                        int size_cap, int k_max, int hj_cap) {
  int nf = static_cast<int>(families.size());
  if (nf == 0) throw PreconditionError("no families supplied");
  if (nf > size_cap)
    throw PreconditionError("family list exceeds the subset-enumeration cap");
  int len = families[0].length();
  for (const auto& fam : families)
    if (fam.length() != len)
      throw PreconditionError("families must share one truncation length");

  auto central = is_f_central(s, f, a);
  if (!central.central)
    throw PreconditionError("target set is not filter-central");
  int e = *central.witness_idempotent;

  for (const auto& fam : families)
    if (!is_f_good_bounded(s, f, fam, std::min(k_max, len)).established())
      throw PreconditionError("a supplied family is not filter-good within k_max");

  // A* = A cap {x : x*e in A}. The bare star set can leak outside A (x*e may
  // re-enter A while x itself is outside), which would break the chain
  // products' membership in A; intersecting keeps every conclusion inside A.
  ElementSet a_star = a.intersect(star_set(s, e, a));

  ElementSet v = closure_set(s, f);

  CstWitnessMap map;
  map.target = a;
  map.idempotent = e;
  map.families = families;

  // Subset masks ordered by size then numeric value.
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << nf); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
    return __builtin_popcount(x) < __builtin_popcount(y);
  });

  std::vector<std::optional<CstEntry>> by_mask(1u << nf);
  for (unsigned mask : masks) {
    std::vector<int> subset;
    for (int i = 0; i < nf; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    SequenceFamily merged = merge_families(families, subset);

    // Chain products over proper subsets of this subset.
    std::vector<int> m_products;
    std::function<void(unsigned, int)> extend = [&](unsigned last_mask, int z) {
      m_products.push_back(z);
      for (unsigned next = last_mask + 1; next < mask; ++next) {
        if ((next & mask) != next) continue;
        if ((last_mask & next) != last_mask || next == last_mask) continue;
        const auto& entry = by_mask[next];
        std::vector<int> next_subset;
        for (int i = 0; i < nf; ++i)
          if (next & (1u << i)) next_subset.push_back(i);
        SequenceFamily nf_merged = merge_families(families, next_subset);
        for (const auto& seq : nf_merged.sequences)
          extend(next, s.mul(z, eval_witness(s, entry_witness(*entry), seq)));
      }
    };
    for (unsigned first = 1; first < mask; ++first) {
      if ((first & mask) != first) continue;
      std::vector<int> first_subset;
      for (int i = 0; i < nf; ++i)
        if (first & (1u << i)) first_subset.push_back(i);
      SequenceFamily f_merged = merge_families(families, first_subset);
      for (const auto& seq : f_merged.sequences)
        extend(first, eval_witness(s, entry_witness(*by_mask[first]), seq));
    }

    ElementSet b_set = a_star;
    for (int z : m_products) {
      ElementSet zset(s.order());
      zset.insert(z);
      b_set = b_set.intersect(translate_preimage(s, zset, a_star));
    }

    int floor_m = 0;
    for (unsigned sub = 1; sub < mask; ++sub)
      if ((sub & mask) == sub)
        floor_m = std::max(floor_m, by_mask[sub]->tau.t.back());

    if (!is_pws_f_syndetic(s, f, b_set).combinatorial)
      throw SearchFailure("subset " + subset_label(subset) +
                          " defeated the search: B = " + format_subset(b_set) +
                          " is not pws-filter-syndetic");

    JPipelineResult res;
    try {
      res = j_witness_via_hj(s, f, b_set, merged, v, floor_m, k_max, hj_cap);
    } catch (const PreconditionError& err) {
      throw SearchFailure("subset " + subset_label(subset) +
                          " defeated the search: " + err.what());
    } catch (const BoundsError& err) {
      throw SearchFailure("subset " + subset_label(subset) +
                          " defeated the search: " + err.what());
    }

    CstEntry entry;
    entry.subset = subset;
    entry.m = res.witness.m;
    entry.alpha = res.witness.a;
    entry.tau = res.witness.t;
    by_mask[mask] = entry;
    map.entries.push_back(std::move(entry));
  }

  auto check = cst_verify(s, a, map);
  if (!check.ok)
    throw InvariantViolation("freshly built witness map failed verification: " +
                             (check.failures.empty() ? std::string("?")
                                                     : check.failures.front()));
  return map;
}

CstVerification cst_verify(const FiniteSemigroup& s, const ElementSet& a,
                           const CstWitnessMap& map) {
  CstVerification out;
  out.ok = true;
  auto is_proper_subset = [](const std::vector<int>& g, const std::vector<int>& f) {
    if (g.size() >= f.size()) return false;
    return std::includes(f.begin(), f.end(), g.begin(), g.end());
  };

  // Conclusion (1): index monotonicity along inclusions.
  for (const auto& ge : map.entries)
    for (const auto& fe : map.entries)
      if (is_proper_subset(ge.subset, fe.subset) &&
          !(ge.tau.t.back() < fe.tau.t.front())) {
        out.ok = false;
        out.failures.push_back("tau(" + subset_label(ge.subset) + ") ends at " +
                               std::to_string(ge.tau.t.back()) +
                               " but tau(" + subset_label(fe.subset) +
                               ") starts at " + std::to_string(fe.tau.t.front()));
      }

  // Conclusion (2): every chain product lands in the target.
  std::function<void(size_t, std::optional<int>)> chains =
      [&](size_t start, std::optional<int> prefix) {
        for (size_t i = start; i < map.entries.size(); ++i) {
          const auto& entry = map.entries[i];
          if (prefix.has_value()) {
            // Chains must grow by strict inclusion from the previous link.
            const auto& prev = map.entries[start - 1];
            if (!is_proper_subset(prev.subset, entry.subset)) continue;
          }
          SequenceFamily merged = merge_families(map.families, entry.subset);
          for (const auto& seq : merged.sequences) {
            int x = eval_witness(s, entry_witness(entry), seq);
            int value = prefix.has_value() ? s.mul(*prefix, x) : x;
            if (!a.contains(value)) {
              out.ok = false;
              out.failures.push_back("chain ending at " + subset_label(entry.subset) +
                                     " produced " + std::to_string(value) +
                                     " outside the target");
            }
            chains(i + 1, value);
          }
        }
      };
  chains(0, std::nullopt);
  return out;
}

// --- pigeonhole extractors -----------------------------------------------------

namespace {

long positive_mod(long v, long k) { return ((v % k) + k) % k; }

}  // namespace

IprExtraction ipr_star_extract_integers(long k, const std::vector<long>& h,
                                        const std::vector<long>& xs) {
  if (k < 1) throw PreconditionError("modulus must be >= 1");
  if (h.empty()) throw PreconditionError("translator set is empty");
  std::vector<bool> covered(k, false);
  for (long t : h) covered[positive_mod(t, k)] = true;
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw PreconditionError("translators do not cover all residues mod k");
  size_t r = h.size() + 1;
  if (xs.size() != r)
    throw PreconditionError("sequence length must be |H| + 1");

  std::vector<long> sorted_h = h;
  std::sort(sorted_h.begin(), sorted_h.end());

  // Covering makes every shift work; fix y = 0.
  long y = 0;
  std::vector<long> prefix(r);
  std::partial_sum(xs.begin(), xs.end(), prefix.begin());
  std::vector<long> color(r);
  for (size_t i = 0; i < r; ++i) {
    bool found = false;
    for (long t : sorted_h)
      if (positive_mod(t + prefix[i] + y, k) == 0) {
        color[i] = t;
        found = true;
        break;
      }
    if (!found) throw InvariantViolation("covering held but no translator fit");
  }
  for (size_t n = 1; n < r; ++n)
    for (size_t m = 0; m < n; ++m)
      if (color[m] == color[n]) {
        IprExtraction out;
        out.m = static_cast<int>(m) + 1;
        out.n = static_cast<int>(n) + 1;
        out.t = color[m];
        out.y = y;
        out.block = prefix[n] - prefix[m];
        if (positive_mod(out.block, k) != 0)
          throw InvariantViolation("pigeonholed block escaped the subgroup");
        return out;
      }
  throw InvariantViolation("no pigeonhole pair among |H|+1 prefixes");
}

IprExtraction ipr_star_extract_cayley(const FiniteSemigroup& s,
                                      const ElementSet& gsub, const ElementSet& h,
                                      const std::vector<int>& xs) {
  auto cert = is_subgroup(s, gsub, !s.commutative());
  if (!cert.ok)
    throw PreconditionError("subgroup check failed: " + cert.reason);
  if (h.empty()) throw PreconditionError("translator set is empty");
  ElementSet covered(s.order());
  for (int t : h.members()) {
    ElementSet tset(s.order());
    tset.insert(t);
    covered = covered.unite(translate_preimage(s, tset, gsub));
  }
  if (covered != s.full_set())
    throw PreconditionError("translator preimages do not cover the ambient");
  size_t r = h.size() + 1;
  if (xs.size() != r)
    throw PreconditionError("sequence length must be |H| + 1");

  std::vector<int> prefix(r);
  prefix[0] = xs[0];
  for (size_t i = 1; i < r; ++i) prefix[i] = s.mul(prefix[i - 1], xs[i]);

  // Any y works under full covering; keep the first that does for the record.
  int y = -1;
  for (int cand = 0; cand < s.order() && y < 0; ++cand) {
    bool all = true;
    for (size_t i = 0; i < r && all; ++i)
      all = covered.contains(s.mul(prefix[i], cand));
    if (all) y = cand;
  }
  if (y < 0) throw InvariantViolation("covering held but no shift worked");

  std::vector<int> color(r, -1);
  for (size_t i = 0; i < r; ++i) {
    for (int t : h.members())
      if (gsub.contains(s.mul(t, s.mul(prefix[i], y)))) {
        color[i] = t;
        break;
      }
    if (color[i] < 0) throw InvariantViolation("covering held but no translator fit");
  }
  for (size_t n = 1; n < r; ++n)
    for (size_t m = 0; m < n; ++m)
      if (color[m] == color[n]) {
        IprExtraction out;
        out.m = static_cast<int>(m) + 1;
        out.n = static_cast<int>(n) + 1;
        out.t = color[m];
        out.y = y;
        out.block = s.mul_word(std::vector<int>(xs.begin() + m + 1, xs.begin() + n + 1));
        if (!gsub.contains(static_cast<int>(out.block)))
          throw InvariantViolation("pigeonholed block escaped the subgroup");
        return out;
      }
  throw InvariantViolation("no pigeonhole pair among |H|+1 prefixes");
}

Verdict<std::pair<std::vector<int>, int>> j_to_ipstar_extract(
    const FiniteSemigroup& s, const ElementSet& gsub, const std::vector<int>& f,
    int max_m) {
  if (!s.identity().has_value() || !s.commutative())
    throw PreconditionError("ambient must be a commutative monoid");
  auto cert = is_subgroup(s, gsub);
  if (!cert.ok) throw PreconditionError("subgroup check failed: " + cert.reason);
  if (f.empty()) throw PreconditionError("empty sequence");

  std::vector<int> zeros(f.size(), *s.identity());
  SequenceFamily family({f, zeros});
  auto j = is_j_set_bounded(s, gsub, family, max_m);

  Verdict<std::pair<std::vector<int>, int>> out;
  out.bounds = j.bounds;
  if (!j.established()) {
    out.status = Status::Inconclusive;
    return out;
  }
  const JWitness& w = *j.witness;
  // a is the witness evaluated on the identity sequence; it lies in G, and so
  // does a * sum, hence the bare sum by cancellation.
  int a = eval_witness(s, w, zeros);
  int with_f = eval_witness(s, w, f);
  if (!gsub.contains(a) || !gsub.contains(with_f))
    throw InvariantViolation("J-witness re-evaluation left the subgroup");
  std::vector<int> factors;
  for (int t : w.t.t) factors.push_back(f[t - 1]);
  int sum = s.mul_word(factors);
  if (!gsub.contains(sum))
    throw InvariantViolation("cancelled sum escaped the subgroup");
  out.status = Status::Established;
  out.witness = {w.t.t, sum};
  return out;
}

}  // namespace cst
