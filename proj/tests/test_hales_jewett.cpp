#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cst/hales_jewett.hpp"

using namespace cst;
using namespace cst::hj;

TEST_CASE("line_points substitution") {
  CHECK(line_points({kStar, 1}, 2) == std::vector<Word>{{1, 1}, {2, 1}});
  CHECK(line_points({kStar, kStar}, 2) == std::vector<Word>{{1, 1}, {2, 2}});
  CHECK(line_points({2, kStar}, 3) == std::vector<Word>{{2, 1}, {2, 2}, {2, 3}});
  CHECK_THROWS_AS(line_points({1, 2}, 2), PreconditionError);
}

TEST_CASE("line points are pairwise distinct and in the cube") {
  for (int t : {2, 3})
    for (int n : {1, 2, 3})
      for_each_template(n, t, [&](const VariableWord& vw) {
        auto pts = line_points(vw, t);
        CHECK(static_cast<int>(pts.size()) == t);
        for (size_t i = 0; i < pts.size(); ++i) {
          for (int letter : pts[i]) {
            CHECK(letter >= 1);
            CHECK(letter <= t);
          }
          for (size_t j = i + 1; j < pts.size(); ++j) CHECK(pts[i] != pts[j]);
        }
        return false;
      });
}

TEST_CASE("template count matches (t+1)^N - t^N") {
  for (int t : {1, 2, 3})
    for (int n : {1, 2, 3}) {
      long seen = 0;
      for_each_template(n, t, [&](const VariableWord&) {
        ++seen;
        return false;
      });
      CHECK(seen == template_count(n, t));
    }
}

TEST_CASE("find_mono_line") {
  SUBCASE("constant coloring at N=1 finds the line '*'") {
    auto line = find_mono_line([](const Word&) { return 0; }, 1, 2);
    REQUIRE(line.has_value());
    CHECK(line->tmpl == VariableWord{kStar});
  }
  SUBCASE("distinct colors at N=1: the only line is bichromatic") {
    auto line = find_mono_line([](const Word& w) { return w[0] - 1; }, 1, 2);
    CHECK_FALSE(line.has_value());
  }
  SUBCASE("first-letter coloring at N=2 has a monochromatic line") {
    auto line = find_mono_line([](const Word& w) { return w[0] - 1; }, 2, 2);
    REQUIRE(line.has_value());
    // The line cannot vary the first letter.
    CHECK(line->tmpl[0] != kStar);
  }
  SUBCASE("partial coloring is an error") {
    CHECK_THROWS_AS(find_mono_line([](const Word&) { return -1; }, 1, 2),
                    PreconditionError);
  }
}

TEST_CASE("line-free certificates are verified line-free") {
  // Line-free search result must pass the independent all-lines check.
  for (int t : {2, 3}) {
    auto cert = find_line_free_coloring(2, t, 1);
    REQUIRE(cert.has_value());
    auto coloring = [&](const Word& w) { return (*cert)[word_index(w, t)]; };
    CHECK_FALSE(find_mono_line(coloring, 1, t).has_value());
  }
  auto cert23 = find_line_free_coloring(2, 3, 3);
  REQUIRE(cert23.has_value());
  auto coloring = [&](const Word& w) { return (*cert23)[word_index(w, 3)]; };
  CHECK_FALSE(find_mono_line(coloring, 3, 3).has_value());
}

TEST_CASE("HJ(1,t) = 1") {
  for (int t = 1; t <= 4; ++t) {
    auto res = hj_number(1, t, 2);
    CHECK(res.determined);
    CHECK(res.value == 1);
  }
}

TEST_CASE("HJ(2,2) = 2") {
  auto res = hj_number(2, 2, 3);
  REQUIRE(res.determined);
  CHECK(res.value == 2);
  // Certificate at N=1 exists and is line-free.
  REQUIRE(res.certificate.has_value());
  CHECK(res.certificate_n == 1);
  auto coloring = [&](const Word& w) { return (*res.certificate)[word_index(w, 2)]; };
  CHECK_FALSE(find_mono_line(coloring, 1, 2).has_value());
  // Exhaustive oracle at N=2: all 2^4 colorings of [2]^2 have a mono line.
  for (int mask = 0; mask < 16; ++mask) {
    auto c = [&](const Word& w) { return (mask >> word_index(w, 2)) & 1; };
    CHECK(find_mono_line(c, 2, 2).has_value());
  }
}

TEST_CASE("HJ(2,3) > 3 with certificate") {
  auto res = hj_number(2, 3, 3);
  CHECK_FALSE(res.determined);
  CHECK(res.value == 3);
  REQUIRE(res.certificate.has_value());
  CHECK(res.certificate_n == 3);
}

TEST_CASE("word index round trip") {
  for (int t : {2, 3})
    for (long i = 0; i < word_count(3, t); ++i)
      CHECK(word_index(word_at(i, 3, t), t) == i);
}
