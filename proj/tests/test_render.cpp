#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "selt/render.hpp"

using namespace selt;

TEST_CASE("tableau pictures") {
  const std::string s = render_ascii(fixtures::rectifying_first());
  CHECK(s.find('.') != std::string::npos);
  CHECK(s.find("E1: 1") != std::string::npos);
  CHECK(s.find("E2: 2 4") != std::string::npos);
  CHECK(render_ascii(superstandard(StrictPartition{2, 1})).find("1") != std::string::npos);
  EdgeTableau blank(SkewShape(StrictPartition{2}, StrictPartition{}), 2);
  CHECK(render_ascii(blank).find('_') != std::string::npos);
}

TEST_CASE("rows are indented by their shift") {
  const std::string s = render_ascii(superstandard(StrictPartition{2, 1}));
  const auto second = s.find('\n');
  REQUIRE(second != std::string::npos);
  CHECK(s[second + 1] == ' ');
}

TEST_CASE("excited diagram pictures") {
  const std::string s = render_ascii(initial_diagram(StrictPartition{2, 1}, StrictPartition{5, 3, 2}));
  CHECK(std::count(s.begin(), s.end(), '+') == 3);
  CHECK(std::count(s.begin(), s.end(), '.') == 7);
}

TEST_CASE("shading pictures") {
  const std::string s = render_ascii(Shading{4, 2, {{1, 1}, {2, 1}, {3, 2}}});
  CHECK(std::count(s.begin(), s.end(), '*') == 3);
}
