#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cst/ideal.hpp"
#include "cst/witness.hpp"

using namespace cst;

namespace {

ElementSet subset_of(const FiniteSemigroup& s, std::initializer_list<int> xs) {
  ElementSet e(s.order());
  for (int x : xs) e.insert(x);
  return e;
}

std::vector<int> constant_seq(int value, int len) {
  return std::vector<int>(len, value);
}

}  // namespace

TEST_CASE("star_set") {
  auto z4 = cyclic_group(4);
  auto a = subset_of(z4, {0, 2});
  // In a group, shifting by the identity changes nothing.
  CHECK(star_set(z4, 0, a) == a);

  auto rz = right_zero_semigroup(3);
  // x*e = e, so the star set is everything or nothing.
  CHECK(star_set(rz, 0, subset_of(rz, {0})) == rz.full_set());
  CHECK(star_set(rz, 1, subset_of(rz, {0})) == ElementSet(3));
  CHECK(star_set(rz, 0, ElementSet(3)) == ElementSet(3));

  CHECK_THROWS_AS(star_set(z4, 1, a), PreconditionError);  // 1+1 != 1
}

TEST_CASE("coloring pipeline, two colors on Z4") {
  // A = {0,2}: no single translator covers all of Z4, but {0,1} does, so the
  // pipeline needs r=2 colors and the Hales-Jewett dimension HJ(2,2)=2.
  auto z4 = cyclic_group(4);
  auto f = trivial_filter(z4);
  auto a = subset_of(z4, {0, 2});
  SequenceFamily family({constant_seq(1, 6), constant_seq(3, 6)});

  auto res = j_witness_via_hj(z4, f, a, family, z4.full_set(), 0);
  CHECK(res.trace.r == 2);
  CHECK(res.trace.hj_n == 2);
  CHECK(res.trace.f_v == subset_of(z4, {0, 1}));
  CHECK(res.trace.k == 1);
  for (const auto& seq : family.sequences)
    CHECK(a.contains(eval_witness(z4, res.witness, seq)));
}

TEST_CASE("coloring pipeline respects the index floor") {
  auto z4 = cyclic_group(4);
  auto a = subset_of(z4, {0, 2});
  SequenceFamily family({constant_seq(1, 8), constant_seq(3, 8)});
  auto res = j_witness_via_hj(z4, trivial_filter(z4), a, family, z4.full_set(), 3);
  CHECK(res.witness.t.t.front() > 3);
  for (const auto& seq : family.sequences)
    CHECK(a.contains(eval_witness(z4, res.witness, seq)));
}

TEST_CASE("coloring pipeline, singleton family degenerates to one point") {
  auto rz = right_zero_semigroup(3);
  SequenceFamily family({constant_seq(0, 4)});
  auto res = j_witness_via_hj(rz, trivial_filter(rz), subset_of(rz, {0}), family,
                              rz.full_set(), 0);
  CHECK(res.trace.r == 1);
  CHECK(res.trace.hj_n == 1);
  CHECK(res.witness.m == 1);
  CHECK(eval_witness(rz, res.witness, family.sequences[0]) == 0);
}

TEST_CASE("coloring pipeline errors") {
  auto z4mul = zmod_multiplication(4);
  SequenceFamily fam({constant_seq(1, 4)});
  // {1,3} misses the kernel {0}, so the pws certificate fails.
  CHECK_THROWS_AS(j_witness_via_hj(z4mul, trivial_filter(z4mul),
                                   subset_of(z4mul, {1, 3}), fam,
                                   z4mul.full_set(), 0),
                  PreconditionError);

  auto z4 = cyclic_group(4);
  auto a = subset_of(z4, {0, 2});
  SequenceFamily family({constant_seq(1, 6), constant_seq(3, 6)});
  // The needed dimension HJ(2,2)=2 exceeds a cap of 1.
  CHECK_THROWS_AS(
      j_witness_via_hj(z4, trivial_filter(z4), a, family, z4.full_set(), 0, 4, 1),
      ResourceError);
  // Too short for the shifted block.
  SequenceFamily stub({constant_seq(1, 2), constant_seq(3, 2)});
  CHECK_THROWS_AS(
      j_witness_via_hj(z4, trivial_filter(z4), a, stub, z4.full_set(), 0),
      BoundsError);
  // V must contain the closure.
  CHECK_THROWS_AS(j_witness_via_hj(z4, trivial_filter(z4), a, family,
                                   subset_of(z4, {0, 2}), 0),
                  PreconditionError);
}

TEST_CASE("witness map over two families in a right-zero ambient") {
  auto rz = right_zero_semigroup(3);
  auto f = trivial_filter(rz);
  auto a = subset_of(rz, {0, 1});
  std::vector<SequenceFamily> families{SequenceFamily({constant_seq(0, 8)}),
                                       SequenceFamily({constant_seq(1, 8)})};
  auto map = cst_build(rz, f, a, families, 2);
  REQUIRE(map.entries.size() == 3);
  CHECK(map.entries[0].subset == std::vector<int>{0});
  CHECK(map.entries[1].subset == std::vector<int>{1});
  CHECK(map.entries[2].subset == std::vector<int>{0, 1});

  auto check = cst_verify(rz, a, map);
  CHECK(check.ok);
  CHECK(check.failures.empty());

  // Index monotonicity along both inclusions.
  CHECK(map.entries[0].tau.t.back() < map.entries[2].tau.t.front());
  CHECK(map.entries[1].tau.t.back() < map.entries[2].tau.t.front());
}

TEST_CASE("witness map on a group ambient") {
  auto z4 = cyclic_group(4);
  auto a = subset_of(z4, {0, 2});
  std::vector<SequenceFamily> families{SequenceFamily({constant_seq(2, 12)}),
                                       SequenceFamily({constant_seq(2, 12),
                                                       constant_seq(0, 12)})};
  auto map = cst_build(z4, trivial_filter(z4), a, families, 2);
  CHECK(cst_verify(z4, a, map).ok);
}

TEST_CASE("cst_verify flags corruption") {
  auto rz = right_zero_semigroup(3);
  auto a = subset_of(rz, {0, 1});
  std::vector<SequenceFamily> families{SequenceFamily({constant_seq(0, 8)}),
                                       SequenceFamily({constant_seq(1, 8)})};
  auto map = cst_build(rz, trivial_filter(rz), a, families, 2);

  auto corrupted = map;
  // Send the final slot of one entry outside A: right-zero products collapse
  // to the last letter.
  corrupted.entries[2].alpha.back() = {2};
  auto check = cst_verify(rz, a, corrupted);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.failures.empty());

  auto shuffled = map;
  // Break monotonicity by shifting one tuple up front.
  shuffled.entries[2].tau.t = {1};
  CHECK_FALSE(cst_verify(rz, a, shuffled).ok);
}

TEST_CASE("cst_build preconditions") {
  auto z4mul = zmod_multiplication(4);
  std::vector<SequenceFamily> fams{SequenceFamily({constant_seq(1, 8)})};
  // {1,3} contains no kernel idempotent, so it is not central.
  CHECK_THROWS_AS(cst_build(z4mul, trivial_filter(z4mul),
                            subset_of(z4mul, {1, 3}), fams, 2),
                  PreconditionError);
  auto rz = right_zero_semigroup(3);
  std::vector<SequenceFamily> two{SequenceFamily({constant_seq(0, 8)}),
                                  SequenceFamily({constant_seq(1, 8)})};
  CHECK_THROWS_AS(cst_build(rz, trivial_filter(rz), subset_of(rz, {0, 1}), two, 1),
                  PreconditionError);
  CHECK_THROWS_AS(cst_build(rz, trivial_filter(rz), subset_of(rz, {0, 1}), {}, 2),
                  PreconditionError);
}

TEST_CASE("cst_build failure report names the defeated subset") {
  // With a nontrivial filter on Z4 whose closure is {0,2}, the target {0}
  // is filter-central, but the family of 1's is not filter-good: the search
  // never starts.
  auto z4 = cyclic_group(4);
  FilterBase f;
  f.base.push_back(subset_of(z4, {0, 2}));
  std::vector<SequenceFamily> fams{SequenceFamily({constant_seq(1, 8)})};
  CHECK_THROWS_AS(cst_build(z4, f, subset_of(z4, {0}), fams, 2),
                  PreconditionError);
}

TEST_CASE("integer pigeonhole extraction") {
  auto res = ipr_star_extract_integers(3, {0, 1, 2}, {1, 1, 1, 1});
  CHECK(res.m == 1);
  CHECK(res.n == 4);
  CHECK(res.block == 3);
  CHECK(res.t == 2);

  CHECK_THROWS_AS(ipr_star_extract_integers(3, {0, 1}, {1, 1, 1}),
                  PreconditionError);  // residue 2 uncovered
  CHECK_THROWS_AS(ipr_star_extract_integers(3, {0, 1, 2}, {1, 1}),
                  PreconditionError);  // wrong length
}

TEST_CASE("integer pigeonhole extraction is total over small boxes") {
  for (long k : {2, 3, 4}) {
    std::vector<long> h;
    for (long t = 0; t < k; ++t) h.push_back(t);
    int r = static_cast<int>(k) + 1;
    std::vector<long> xs(r, 1);
    // Odometer over [1,k]^r.
    while (true) {
      auto res = ipr_star_extract_integers(k, h, xs);
      CHECK(res.block % k == 0);
      CHECK(res.block != 0);
      CHECK(res.m < res.n);
      int i = 0;
      while (i < r && xs[i] == k) xs[i++] = 1;
      if (i == r) break;
      ++xs[i];
    }
  }
}

TEST_CASE("Cayley pigeonhole extraction on Z4") {
  auto z4 = cyclic_group(4);
  auto res = ipr_star_extract_cayley(z4, subset_of(z4, {0, 2}),
                                     subset_of(z4, {0, 1}), {1, 1, 1});
  CHECK(res.m == 1);
  CHECK(res.n == 3);
  CHECK(res.block == 2);

  // All entries already inside the subgroup: still returns a valid pair.
  auto triv = ipr_star_extract_cayley(z4, subset_of(z4, {0, 2}),
                                      subset_of(z4, {0, 1}), {2, 2, 2});
  CHECK(subset_of(z4, {0, 2}).contains(static_cast<int>(triv.block)));

  // Translators that fail to cover.
  CHECK_THROWS_AS(ipr_star_extract_cayley(z4, subset_of(z4, {0, 2}),
                                          subset_of(z4, {0}), {1, 1}),
                  PreconditionError);
  // Not a subgroup.
  CHECK_THROWS_AS(ipr_star_extract_cayley(z4, subset_of(z4, {0, 1}),
                                          subset_of(z4, {0, 1}), {1, 1, 1}),
                  PreconditionError);
}

TEST_CASE("Cayley pigeonhole extraction exhaustive on Z6") {
  auto z6 = cyclic_group(6);
  auto gsub = subset_of(z6, {0, 3});
  auto h = subset_of(z6, {0, 1, 2});
  // r = 4; sweep all sequences over Z6.
  std::vector<int> xs(4, 0);
  while (true) {
    auto res = ipr_star_extract_cayley(z6, gsub, h, xs);
    CHECK(gsub.contains(static_cast<int>(res.block)));
    int i = 0;
    while (i < 4 && xs[i] == 5) xs[i++] = 0;
    if (i == 4) break;
    ++xs[i];
  }
}

TEST_CASE("J-witness to IP* extraction") {
  auto z6 = cyclic_group(6);
  auto gsub = subset_of(z6, {0, 3});
  auto v = j_to_ipstar_extract(z6, gsub, {1, 2, 3, 1, 2, 3}, 3);
  REQUIRE(v.established());
  auto [h, sum] = *v.witness;
  CHECK(gsub.contains(sum));
  // Recheck the sum from the indices.
  int resum = 0;
  std::vector<int> f{1, 2, 3, 1, 2, 3};
  for (int t : h) resum = z6.mul(resum, f[t - 1]);
  CHECK(resum == sum);

  // All-identity sequence: any block sums to the identity.
  auto vz = j_to_ipstar_extract(z6, gsub, constant_seq(0, 4), 2);
  REQUIRE(vz.established());
  CHECK(vz.witness->second == 0);

  // Full subgroup target always succeeds.
  CHECK(j_to_ipstar_extract(z6, z6.full_set(), {1, 2, 3, 4}, 2).established());

  // Too short to reach the subgroup within bounds.
  auto z4 = cyclic_group(4);
  auto inc = j_to_ipstar_extract(z4, subset_of(z4, {0}), {1, 1}, 2);
  CHECK(inc.status == Status::Inconclusive);

  // Ambient must be a commutative monoid; target must be a subgroup.
  auto rz = right_zero_semigroup(2);
  CHECK_THROWS_AS(j_to_ipstar_extract(rz, subset_of(rz, {0}), {0, 1}, 2),
                  PreconditionError);
  CHECK_THROWS_AS(j_to_ipstar_extract(z4, subset_of(z4, {0, 1}), {1, 1}, 2),
                  PreconditionError);
}
