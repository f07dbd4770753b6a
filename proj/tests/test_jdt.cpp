#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "selt/error.hpp"
#include "selt/jdt.hpp"

using namespace selt;

TEST_CASE("slide through rules south, diagonal-east, south, edge-absorb") {
  const EdgeTableau t = fixtures::jdt_path_start();
  REQUIRE(is_valid(t));
  SlideRecord rec;
  const EdgeTableau out = jdt_slide(t, {1, 2}, &rec);
  CHECK(rec.path == std::vector<Box>{{1, 2}, {2, 2}, {2, 3}, {3, 3}});
  CHECK(rec.rules == std::vector<SlideRule>{SlideRule::kSouth, SlideRule::kDiagonalEast,
                                            SlideRule::kSouth, SlideRule::kEdgeAbsorb});
  CHECK(rec.absorbed_edge_label);
  CHECK(out == fixtures::jdt_path_end());
  CHECK(is_valid(out));
}

TEST_CASE("rectifying the path tableau") {
  const RectificationTrace trace = rectify(fixtures::jdt_path_start());
  // One slide per inner box, starting from T itself.
  REQUIRE(trace.states.size() == 3);
  CHECK(trace.states[1] == fixtures::jdt_path_end());
  CHECK(trace.corners == std::vector<Box>{{1, 2}, {1, 1}});
  CHECK(trace.result().shape().is_straight());
  CHECK(trace.result() == oracle::rect(fixtures::jdt_path_start()));
}

TEST_CASE("degenerate slides") {
  SUBCASE("east label moves west") {
    EdgeTableau t(SkewShape(StrictPartition{2}, StrictPartition{1}), 1);
    t.set({1, 2}, 1);
    // (1,1) is diagonal: the east label beats an empty edge.
    SlideRecord rec;
    const EdgeTableau out = jdt_slide(t, {1, 1}, &rec);
    CHECK(out.at(1, 1) == 1);
    CHECK(out.shape().outer() == StrictPartition{1});
    CHECK_FALSE(rec.absorbed_edge_label);
  }
  SUBCASE("east move in a non-diagonal box") {
    EdgeTableau t(SkewShape(StrictPartition{3}, StrictPartition{2}), 1);
    t.set({1, 3}, 1);
    SlideRecord rec;
    const EdgeTableau out = jdt_slide(t, {1, 2}, &rec);
    CHECK(rec.rules == std::vector<SlideRule>{SlideRule::kEast});
    CHECK(out.at(1, 2) == 1);
    CHECK(out.shape().outer() == StrictPartition{2});
  }
  SUBCASE("single diagonal box absorbs its edge label") {
    EdgeTableau t(SkewShape(StrictPartition{1}, StrictPartition{1}), 1);
    t.set_edge(1, {1});
    SlideRecord rec;
    const EdgeTableau out = jdt_slide(t, {1, 1}, &rec);
    CHECK(rec.rules == std::vector<SlideRule>{SlideRule::kEdgeAbsorb});
    CHECK(out.at(1, 1) == 1);
    CHECK(out.edge(1).empty());
  }
  SUBCASE("not a corner") {
    const EdgeTableau t = fixtures::rectifying_first();
    CHECK_THROWS_AS(jdt_slide(t, {1, 2}, nullptr), NotACorner);
    CHECK_THROWS_AS(jdt_slide(t, {1, 3}, nullptr), NotACorner);
  }
}

TEST_CASE("both small tableaux rectify to the superstandard (3,2)") {
  for (const EdgeTableau& t : {fixtures::rectifying_first(), fixtures::rectifying_second()}) {
    const RectificationTrace trace = rectify(t);
    CHECK(is_superstandard(trace.result(), StrictPartition{3, 2}));
    CHECK(trace.states.size() == 4);
  }
}

TEST_CASE("straight shapes rectify to themselves") {
  const EdgeTableau s = superstandard(StrictPartition{4, 2, 1});
  const RectificationTrace trace = rectify(s);
  CHECK(trace.states.size() == 1);
  CHECK(trace.result() == s);
  CHECK(rect(s) == s);
}

TEST_CASE("rectify rejects invalid input") {
  CHECK_THROWS_AS(rectify(fixtures::axioms_break_iv()), InvalidTableau);
}

TEST_CASE("rectification matches the reference slide on every small tableau") {
  struct Case {
    StrictPartition outer, inner;
    int n;
  };
  const std::vector<Case> cases{
      {{3, 2}, {2, 1}, 5}, {{3, 2, 1}, {2}, 5}, {{3, 2, 1}, {3, 2, 1}, 4},
      {{4, 2}, {2, 1}, 5}, {{4, 3, 1}, {3, 1}, 5}, {{3, 1}, {2}, 4},
  };
  for (const Case& c : cases) {
    CAPTURE(c.outer);
    CAPTURE(c.inner);
    for (const EdgeTableau& t : enumerate_selt(SkewShape(c.outer, c.inner), c.n)) {
      const RectificationTrace trace = rectify(t);
      const EdgeTableau expected = oracle::rect(t);
      CHECK(trace.result() == expected);
      CHECK(rect(t) == expected);
      CHECK(is_valid(trace.result()));
      REQUIRE(trace.states.size() == static_cast<size_t>(c.inner.size()) + 1);
      for (size_t i = 1; i < trace.states.size(); ++i) {
        const EdgeTableau& before = trace.states[i - 1];
        const EdgeTableau& after = trace.states[i];
        CHECK(after.shape().inner().size() == before.shape().inner().size() - 1);
        CHECK(trace.corners[i - 1] == southmost_inner_corner(before.shape()));
        // Either the outer shape lost a box or an edge label was absorbed.
        const bool shrank = after.shape().outer().size() == before.shape().outer().size() - 1;
        CHECK(shrank != trace.slides[i - 1].absorbed_edge_label);
        CHECK(is_valid(after));
      }
    }
  }
}

TEST_CASE("coefficient d on small cases") {
  CHECK(count_d(StrictPartition{2, 1}, StrictPartition{3, 2}, StrictPartition{3, 2}) == 2);
  CHECK(count_d(StrictPartition{2, 1}, StrictPartition{1}, StrictPartition{2, 1}) == 2);
  CHECK(count_d(StrictPartition{}, StrictPartition{}, StrictPartition{}) == 1);
  CHECK(count_d(StrictPartition{2}, StrictPartition{1}, StrictPartition{1}) == 0);
  CHECK(count_d(StrictPartition{}, StrictPartition{2}, StrictPartition{3}) == 0);
  CHECK(count_d(StrictPartition{2, 1}, StrictPartition{3, 2}, StrictPartition{3, 2}, 2) == 2);
}

TEST_CASE("coefficient d matches the reference on assorted triples") {
  for (const StrictPartition& lambda : strict_partitions_up_to(3)) {
    for (const StrictPartition& mu : strict_partitions_up_to(4)) {
      for (const StrictPartition& nu : strict_partitions_up_to(lambda.size() + mu.size())) {
        if (nu.size() < lambda.size() || nu.size() - lambda.size() > mu.size()) continue;
        if (mu.size() > 4) continue;
        CAPTURE(lambda);
        CAPTURE(mu);
        CAPTURE(nu);
        CHECK(count_d(lambda, mu, nu) == oracle::count_d(lambda, mu, nu));
      }
    }
  }
}
