#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cst/filter.hpp"
#include "cst/ideal.hpp"
#include "cst/window.hpp"

using namespace cst;

namespace {

FilterBase base_of(const FiniteSemigroup& s,
                   std::initializer_list<std::initializer_list<int>> sets) {
  FilterBase f;
  for (auto set : sets) {
    ElementSet e(s.order());
    for (int x : set) e.insert(x);
    f.base.push_back(e);
  }
  return f;
}

ElementSet subset_of(const FiniteSemigroup& s, std::initializer_list<int> xs) {
  ElementSet e(s.order());
  for (int x : xs) e.insert(x);
  return e;
}

// All nonempty multiplicatively closed subsets, for the exhaustive sweeps.
std::vector<ElementSet> closed_subsets(const FiniteSemigroup& s) {
  std::vector<ElementSet> out;
  int n = s.order();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    ElementSet b(n);
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) b.insert(x);
    bool closed = true;
    for (int x : b.members())
      for (int y : b.members())
        if (!b.contains(s.mul(x, y))) closed = false;
    if (closed) out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("closure_set") {
  auto z6 = cyclic_group(6);
  CHECK(closure_set(z6, trivial_filter(z6)) == z6.full_set());
  auto f = base_of(z6, {{0, 2, 4}, {0, 2}});
  CHECK(closure_set(z6, f) == subset_of(z6, {0, 2}));
  CHECK_THROWS_AS(closure_set(z6, base_of(z6, {{0}, {1}})), ValidationError);
  CHECK_THROWS_AS(closure_set(z6, FilterBase{}), ValidationError);
  CHECK_THROWS_AS(closure_set(z6, base_of(z6, {{}})), ValidationError);
}

TEST_CASE("parse_filter_base") {
  auto z6 = cyclic_group(6);
  auto f = parse_filter_base("# comment\n0,2,4\n  0,2 \n", z6);
  REQUIRE(f.base.size() == 2);
  CHECK(closure_set(z6, f) == subset_of(z6, {0, 2}));
}

TEST_CASE("idempotent filter checks") {
  auto z6 = cyclic_group(6);
  auto rep = is_idempotent_filter(z6, base_of(z6, {{0, 2, 4}}));
  CHECK(rep.idempotent);
  CHECK(rep.literal);
  CHECK(rep.shortcut);

  auto z4 = cyclic_group(4);
  auto rep2 = is_idempotent_filter(z4, base_of(z4, {{1}}));
  CHECK_FALSE(rep2.idempotent);  // 1+1=2 escapes {1}

  CHECK(is_idempotent_filter(z4, trivial_filter(z4)).idempotent);
}

TEST_CASE("literal and shortcut idempotency agree on every small instance") {
  // is_idempotent_filter raises InvariantViolation when they disagree, so it
  // suffices to run it over every semigroup of order <= 3 and every nonempty B.
  for (int order : {2, 3})
    enumerate_semigroups(order, [&](const FiniteSemigroup& s) {
      for (unsigned mask = 1; mask < (1u << order); ++mask) {
        FilterBase f;
        ElementSet b(order);
        for (int x = 0; x < order; ++x)
          if (mask & (1u << x)) b.insert(x);
        f.base.push_back(b);
        CHECK_NOTHROW(is_idempotent_filter(s, f));
      }
    });
}

TEST_CASE("closure_semigroup requires a closed closure") {
  auto z4 = cyclic_group(4);
  CHECK_THROWS_AS(closure_semigroup(z4, base_of(z4, {{1}})), PreconditionError);
  auto cs = closure_semigroup(z4, base_of(z4, {{0, 2}}));
  CHECK(cs.sub.order() == 2);
  CHECK(cs.to_parent == std::vector<int>{0, 2});
}

TEST_CASE("pws filter-relative: trivial filter matches the plain notion") {
  for (int order : {2, 3})
    enumerate_semigroups(order, [&](const FiniteSemigroup& s) {
      auto f = trivial_filter(s);
      for (unsigned mask = 0; mask < (1u << order); ++mask) {
        ElementSet a(order);
        for (int x = 0; x < order; ++x)
          if (mask & (1u << x)) a.insert(x);
        auto rel = is_pws_f_syndetic(s, f, a);
        auto plain = is_piecewise_syndetic(s, a);
        CHECK(rel.combinatorial == plain.combinatorial);
        CHECK(rel.algebraic == plain.algebraic);
        CHECK(rel.agree);
      }
    });
}

TEST_CASE("pws filter-relative agrees with the kernel criterion on all order <= 3 instances") {
  for (int order : {2, 3})
    enumerate_semigroups(order, [&](const FiniteSemigroup& s) {
      for (const auto& b : closed_subsets(s)) {
        FilterBase f;
        f.base.push_back(b);
        for (unsigned mask = 0; mask < (1u << order); ++mask) {
          ElementSet a(order);
          for (int x = 0; x < order; ++x)
            if (mask & (1u << x)) a.insert(x);
          CHECK(is_pws_f_syndetic(s, f, a).agree);
        }
      }
    });
}

TEST_CASE("pws filter-relative on the right-zero example") {
  auto s = right_zero_semigroup(3);
  auto f = base_of(s, {{0, 1}});
  auto res = is_pws_f_syndetic(s, f, subset_of(s, {0}));
  // The closure {0,1} is itself right-zero, so its kernel is everything.
  CHECK(res.algebraic);
  CHECK(res.combinatorial);
  CHECK(res.agree);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->y == 0);
}

TEST_CASE("pws filter-relative refuted when A avoids a group closure") {
  auto z4 = cyclic_group(4);
  auto f = base_of(z4, {{0, 2}});
  auto res = is_pws_f_syndetic(z4, f, subset_of(z4, {1, 3}));
  CHECK_FALSE(res.combinatorial);
  CHECK_FALSE(res.algebraic);
  CHECK(res.agree);
}

TEST_CASE("filter-relative central") {
  auto z6 = cyclic_group(6);
  auto f = base_of(z6, {{0, 2, 4}});
  auto res = is_f_central(z6, f, subset_of(z6, {0}));
  CHECK(res.central);
  CHECK(*res.witness_idempotent == 0);
  CHECK_FALSE(is_f_central(z6, f, subset_of(z6, {1, 3, 5})).central);

  // Trivial filter coincides with the plain notion.
  for (int order : {2, 3})
    enumerate_semigroups(order, [&](const FiniteSemigroup& s) {
      auto tf = trivial_filter(s);
      for (unsigned mask = 0; mask < (1u << order); ++mask) {
        ElementSet a(order);
        for (int x = 0; x < order; ++x)
          if (mask & (1u << x)) a.insert(x);
        CHECK(is_f_central(s, tf, a).central == is_central(s, a).central);
      }
    });
}

TEST_CASE("filter-central implies pws-filter-syndetic") {
  for (int order : {2, 3})
    enumerate_semigroups(order, [&](const FiniteSemigroup& s) {
      for (const auto& b : closed_subsets(s)) {
        FilterBase f;
        f.base.push_back(b);
        for (unsigned mask = 0; mask < (1u << order); ++mask) {
          ElementSet a(order);
          for (int x = 0; x < order; ++x)
            if (mask & (1u << x)) a.insert(x);
          if (is_f_central(s, f, a).central)
            CHECK(is_pws_f_syndetic(s, f, a).combinatorial);
        }
      }
    });
}

TEST_CASE("filter-relative IP and IP*") {
  auto z4 = cyclic_group(4);
  auto fg = base_of(z4, {{0, 2}});
  // Group closure: IP means containing the identity.
  CHECK(is_f_ip(z4, fg, subset_of(z4, {0, 1}), false).holds);
  CHECK_FALSE(is_f_ip(z4, fg, subset_of(z4, {1, 2}), false).holds);

  auto rz = right_zero_semigroup(3);
  auto f = base_of(rz, {{0, 1}});
  auto ip = is_f_ip(rz, f, subset_of(rz, {0}), false);
  CHECK(ip.holds);
  CHECK(*ip.witness == 0);
  auto star = is_f_ip(rz, f, subset_of(rz, {0}), true);
  CHECK_FALSE(star.holds);
  CHECK(*star.witness == 1);  // the idempotent of B that A misses
  CHECK(is_f_ip(rz, f, rz.full_set(), false).holds);
  CHECK(is_f_ip(rz, f, rz.full_set(), true).holds);
}

TEST_CASE("filter-good families") {
  auto z4 = cyclic_group(4);
  SequenceFamily twos({{2, 2, 2, 2}});
  // Sums of 2's land in {0,2}.
  auto f = base_of(z4, {{0, 2}});
  auto good = is_f_good_bounded(z4, f, twos, 4);
  REQUIRE(good.established());
  CHECK(*good.witness == 1);

  SequenceFamily ones({{1, 1, 1, 1}});
  auto f0 = base_of(z4, {{0}});
  CHECK(is_f_good_bounded(z4, f0, ones, 4).status == Status::RefutedWithinBounds);

  CHECK(is_f_good_bounded(z4, trivial_filter(z4), ones, 1).established());

  CHECK_THROWS_AS(is_f_good_bounded(z4, f, twos, 5), PreconditionError);
}

TEST_CASE("filter-J search") {
  auto rz = right_zero_semigroup(3);
  auto f = base_of(rz, {{0, 1}});
  SequenceFamily fam({{0, 0, 0, 0}, {1, 1, 1, 1}});
  // Constant families into B are good with k=1.
  REQUIRE(is_f_good_bounded(rz, f, fam, 2).established());

  auto v = is_f_j_bounded(rz, f, subset_of(rz, {0}), fam, 2, 2);
  REQUIRE(v.established());
  // Recheck the witness for every family member.
  for (int i = 0; i < fam.size(); ++i) {
    std::vector<int> fi = fam.sequences[i];
    CHECK(eval_witness(rz, *v.witness, fi) == 0);
  }

  // A = S is established for any good family.
  CHECK(is_f_j_bounded(rz, f, rz.full_set(), fam, 2, 2).established());

  // A family that is not filter-good is rejected up front.
  auto z4 = cyclic_group(4);
  SequenceFamily ones({{1, 1, 1, 1}});
  CHECK_THROWS_AS(
      is_f_j_bounded(z4, base_of(z4, {{0}}), subset_of(z4, {0}), ones, 2, 4),
      PreconditionError);

  // Trivial filter reduces to the plain J-search.
  auto plain = is_j_set_bounded(z4, subset_of(z4, {0, 2}), ones, 2);
  auto relative = is_f_j_bounded(z4, trivial_filter(z4), subset_of(z4, {0, 2}),
                                 ones, 2, 1);
  CHECK(plain.status == relative.status);
}

TEST_CASE("truncated filter from an IP sequence") {
  auto f = filter_from_ip_sequence({2, 4, 8, 16, 32}, 5);
  REQUIRE(f.tails.size() == 5);
  CHECK(f.tails[4] == std::set<long>{32});
  CHECK(f.tails[2] == std::set<long>{8, 16, 24, 32, 40, 48, 56});
  CHECK(f.closure() == fs_window({2, 4, 8, 16, 32}, 1, 5));
  // Nesting.
  for (size_t i = 1; i < f.tails.size(); ++i)
    for (long v : f.tails[i]) CHECK(f.tails[i - 1].count(v) == 1);

  auto rep = check_truncated_idempotency(f, 3);
  CHECK(rep.passed);
  CHECK(rep.guard == 3);

  auto single = filter_from_ip_sequence({7}, 1);
  CHECK(single.tails == std::vector<std::set<long>>{{7}});
  CHECK(check_truncated_idempotency(single, 0).passed);

  CHECK_THROWS_AS(filter_from_ip_sequence({1, 1, 2}, 3), ValidationError);
  CHECK_THROWS_AS(filter_from_ip_sequence({1, 2}, 3), BoundsError);
  CHECK_THROWS_AS(check_truncated_idempotency(f, 5), PreconditionError);
}

TEST_CASE("truncated idempotency holds for assorted injective sequences") {
  for (auto x : std::vector<std::vector<long>>{
           {1, 2, 4, 8}, {3, 1, 7, 20}, {5, 10, 2, 40, 80}}) {
    auto f = filter_from_ip_sequence(x, static_cast<int>(x.size()));
    for (int guard = 0; guard < f.truncation; ++guard)
      CHECK(check_truncated_idempotency(f, guard).passed);
  }
}

TEST_CASE("residue-class family splitting") {
  std::vector<long> x{10, 20, 30, 40, 50, 60, 70, 80};
  auto fam = good_family_from_residues(x, 2);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == std::vector<long>{20, 40, 60, 80});
  CHECK(fam[1] == std::vector<long>{10, 30, 50, 70});

  auto singles = good_family_from_residues({1, 2, 3}, 3);
  REQUIRE(singles.size() == 3);
  for (const auto& s : singles) CHECK(s.size() == 1);

  CHECK_THROWS_AS(good_family_from_residues({1, 2}, 3), BoundsError);
  CHECK_THROWS_AS(good_family_from_residues(x, 1), PreconditionError);
}

TEST_CASE("zigzag finite sums") {
  auto z = zfs_window({{2, 4}, {3, 5}}, 1);
  CHECK(z == std::set<long>{2, 3, 4, 5, 6, 7, 8});
  CHECK(zfs_window({{2, 4}, {3, 5}}, 2) == std::set<long>{4, 5});
  CHECK_THROWS_AS(zfs_window({{1, 2}}, 3), BoundsError);
  CHECK_THROWS_AS(zfs_window({}, 1), PreconditionError);
}

TEST_CASE("residue family zigzag sums stay inside the finite sums of the source") {
  std::vector<long> x{2, 4, 8, 16, 32, 64};
  auto fam = good_family_from_residues(x, 2);
  auto fs = fs_window(x, 1, 6);
  for (int k = 1; k <= static_cast<int>(fam[0].size()); ++k)
    for (long v : zfs_window(fam, k)) CHECK(fs.count(v) == 1);
}

TEST_CASE("filter-contained IP sequences over the window") {
  auto f = filter_from_ip_sequence({2, 4, 8, 16, 32}, 5);
  // The generating sequence itself qualifies.
  auto self_check = f_sub_ip_sequence(f, {2, 4, 8, 16, 32});
  REQUIRE(self_check.established());
  CHECK(*self_check.witness == 5);  // the last tail {32} forces m = 5
  // A suffix still works.
  CHECK(f_sub_ip_sequence(f, std::vector<long>{8, 16, 32}).established());
  // An unrelated sequence does not.
  CHECK(f_sub_ip_sequence(f, std::vector<long>{3, 6}).status ==
        Status::RefutedWithinBounds);
}

TEST_CASE("filter-contained IP_r sets and their star duals") {
  auto f = filter_from_ip_sequence({2, 4, 8, 16, 32}, 5);
  std::vector<std::vector<long>> pool{{8, 16, 32}};
  // tails[2] is exactly FS(8,16,32), so it contains the r=2 block at m=1.
  auto setr = f_sub_ip_set_r(f, f.tails[2], 2, pool);
  REQUIRE(setr.established());
  CHECK(*setr.witness == std::make_pair(0, 1));
  // Recheck by direct enumeration.
  for (long v : fs_window(pool[0], 1, 3)) CHECK(f.tails[2].count(v) == 1);

  auto star_empty = f_sub_ip_star_r(f, {}, 1, pool);
  CHECK(star_empty.status == Status::RefutedWithinBounds);
  CHECK(star_empty.witness.has_value());

  auto star_full = f_sub_ip_star_r(f, f.closure(), 1, pool);
  CHECK(star_full.established());

  CHECK_THROWS_AS(f_sub_ip_set_r(f, {}, 1, {}), PreconditionError);
  CHECK_THROWS_AS(f_sub_ip_star_r(f, {}, 1, {}), PreconditionError);
}

TEST_CASE("filter-contained IP sequence over a semigroup") {
  auto z6 = cyclic_group(6);
  auto f = base_of(z6, {{0, 2, 4}});
  CHECK(f_sub_ip_sequence(z6, f, std::vector<int>{2, 4, 2, 4}).established());
  // (1,2,4) is accepted: its m=3 tail is {4}, inside the closure.
  CHECK(f_sub_ip_sequence(z6, f, std::vector<int>{1, 2, 4}).established());
  // Every tail of (2,4,1) contains an odd sum, so no tail fits.
  CHECK(f_sub_ip_sequence(z6, f, std::vector<int>{2, 4, 1}).status ==
        Status::RefutedWithinBounds);
  // With the trivial filter every sequence qualifies at m = 1.
  auto v = f_sub_ip_sequence(z6, trivial_filter(z6), std::vector<int>{1, 3});
  REQUIRE(v.established());
  CHECK(*v.witness == 1);
}
