#include <doctest.h>

#include <functional>
#include <set>

#include "selt/error.hpp"
#include "selt/eyd.hpp"

using namespace selt;

namespace {

std::set<Box> boxes(std::initializer_list<Box> bs) { return {bs}; }

// Closure under the local move, computed from scratch with an explicit
// worklist over plain box sets.
std::set<std::set<Box>> closure(const StrictPartition& lambda, const StrictPartition& mu) {
  std::set<Box> start;
  for (const Box& b : lambda.boxes()) start.insert(b);
  std::set<std::set<Box>> seen{start};
  std::vector<std::set<Box>> work{start};
  while (!work.empty()) {
    const std::set<Box> cur = work.back();
    work.pop_back();
    for (const Box& b : cur) {
      const Box east{b.row, b.col + 1}, diag{b.row + 1, b.col + 1}, south{b.row + 1, b.col};
      if (!mu.has_box(east) || cur.contains(east)) continue;
      if (!mu.has_box(diag) || cur.contains(diag)) continue;
      if (mu.has_box(south) && cur.contains(south)) continue;
      std::set<Box> next = cur;
      next.erase(b);
      next.insert(diag);
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("initial diagrams") {
  const ExcitedDiagram d = initial_diagram(StrictPartition{2, 1}, StrictPartition{5, 3, 2});
  CHECK(d.pluses == boxes({{1, 1}, {1, 2}, {2, 2}}));
  CHECK(d.ambient == StrictPartition{5, 3, 2});
  CHECK(initial_diagram(StrictPartition{}, StrictPartition{3}).pluses.empty());
  CHECK(initial_diagram(StrictPartition{3, 1}, StrictPartition{3, 1}).pluses.size() == 4);
  CHECK_THROWS_AS(initial_diagram(StrictPartition{4}, StrictPartition{3, 1}), ContainmentError);
}

TEST_CASE("local moves") {
  const ExcitedDiagram d = initial_diagram(StrictPartition{2, 1}, StrictPartition{5, 3, 2});
  const auto moves = local_moves(d);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].pluses == boxes({{1, 1}, {1, 2}, {3, 3}}));

  const auto next = local_moves(moves[0]);
  REQUIRE(next.size() == 1);
  CHECK(next[0].pluses == boxes({{1, 1}, {2, 3}, {3, 3}}));

  CHECK(local_moves(initial_diagram(StrictPartition{3, 1}, StrictPartition{3, 1})).empty());
}

TEST_CASE("the four excited diagrams of (2,1) in (5,3,2)") {
  const auto all = enumerate_eyd(StrictPartition{2, 1}, StrictPartition{5, 3, 2});
  REQUIRE(all.size() == 4);
  std::set<std::set<Box>> got;
  for (const auto& d : all) got.insert(d.pluses);
  const std::set<std::set<Box>> expected{
      boxes({{1, 1}, {1, 2}, {2, 2}}),
      boxes({{1, 1}, {1, 2}, {3, 3}}),
      boxes({{1, 1}, {2, 3}, {3, 3}}),
      boxes({{2, 2}, {2, 3}, {3, 3}}),
  };
  CHECK(got == expected);
}

TEST_CASE("enumeration edge cases") {
  CHECK(enumerate_eyd(StrictPartition{3}, StrictPartition{2, 1}).empty());
  CHECK(count_eyd(StrictPartition{}, StrictPartition{4, 2}) == 1);
  CHECK(count_eyd(StrictPartition{2, 1}, StrictPartition{2, 1}) == 1);
  CHECK(count_eyd(StrictPartition{2, 1}, rho(3)) == 4);
}

TEST_CASE("traversal order does not change the result") {
  for (const StrictPartition& mu : strict_partitions_up_to(9)) {
    for (const StrictPartition& lambda : strict_partitions_up_to(4)) {
      CAPTURE(lambda);
      CAPTURE(mu);
      const auto bfs = enumerate_eyd(lambda, mu, Traversal::kBreadthFirst);
      const auto dfs = enumerate_eyd(lambda, mu, Traversal::kDepthFirst);
      CHECK(bfs == dfs);
      if (!contains(lambda, mu)) {
        CHECK(bfs.empty());
        continue;
      }
      std::set<std::set<Box>> got;
      for (const auto& d : bfs) {
        CHECK(d.pluses.size() == static_cast<size_t>(lambda.size()));
        for (const Box& b : d.pluses) CHECK(mu.has_box(b));
        got.insert(d.pluses);
      }
      CHECK(got == closure(lambda, mu));
    }
  }
}

TEST_CASE("localization value") {
  CHECK(frakd_localization(rho(3), StrictPartition{2, 1}) == 8);
  CHECK(frakd_localization(rho(3), StrictPartition{}) == 1);
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= n; ++m) {
      const std::uint64_t expected = std::uint64_t{1}
                                     << (binomial(n, 2) - binomial(n - m, 2));
      CHECK(count_eyd(rho_nm(n, m), rho(n)) == 1);
      CHECK(frakd_localization(rho(n), rho_nm(n, m)) == expected);
    }
  }
}
