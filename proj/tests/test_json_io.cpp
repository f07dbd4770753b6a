#include <doctest.h>

#include "fixtures.hpp"
#include "selt/error.hpp"
#include "selt/json_io.hpp"

using namespace selt;

TEST_CASE("partitions") {
  CHECK(to_json(StrictPartition{4, 3}).dump() == "[4,3]");
  CHECK(partition_from_json(Json::parse("[5,2]")) == StrictPartition{5, 2});
  CHECK(partition_from_json(Json::array()).empty());
  CHECK_THROWS_AS(partition_from_json(Json::parse("[2,2]")), InvalidArgument);
  CHECK_THROWS_AS(partition_from_json(Json::parse("{\"a\":1}")), InvalidArgument);
}

TEST_CASE("tableau documents") {
  const EdgeTableau t = fixtures::axioms_valid();
  const Json j = to_json(t);
  CHECK(j.dump() ==
        R"({"shape":{"outer":[5,3,2],"inner":[3,2]},)"
        R"("boxes":[{"row":1,"col":4,"label":2},{"row":1,"col":5,"label":6},)"
        R"({"row":2,"col":4,"label":5},{"row":3,"col":3,"label":4},{"row":3,"col":4,"label":7}],)"
        R"("edges":{"1":[],"2":[1,3],"3":[8]},"n":8})");
  CHECK(tableau_from_json(j) == t);
}

TEST_CASE("tableau round trips") {
  for (const EdgeTableau& t :
       {fixtures::jdt_path_start(), fixtures::rectifying_second(), fixtures::shift_source(),
        fixtures::axioms_break_ii(), fixtures::axioms_break_iv(), superstandard(rho(3))}) {
    CHECK(tableau_from_json(Json::parse(to_json(t).dump())) == t);
  }
}

TEST_CASE("malformed tableau documents") {
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"shape":{"outer":[2],"inner":[]},"boxes":[],"edges":{},"n":"x"})")),
                  InvalidArgument);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"shape":{"outer":[2],"inner":[]},"boxes":[{"row":2,"col":1,"label":1}],"edges":{},"n":1})")),
                  InvalidArgument);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"shape":{"outer":[2],"inner":[]},"boxes":[],"edges":{"x":[1]},"n":1})")),
                  InvalidArgument);
  CHECK_THROWS_AS(tableau_from_json(Json::parse("[]")), InvalidArgument);
}

TEST_CASE("shadings") {
  const Shading s{4, 2, {{1, 1}, {2, 1}, {3, 2}}};
  const Json j = to_json(s);
  CHECK(j.dump() == R"({"n":4,"m":2,"shaded":[[1,1],[2,1],[3,2]]})");
  CHECK(shading_from_json(j) == s);
  CHECK_THROWS_AS(shading_from_json(Json::parse(R"({"n":4,"m":5,"shaded":[]})")), InvalidArgument);
  CHECK_THROWS_AS(shading_from_json(Json::parse(R"({"n":4,"m":2,"shaded":[[1]]})")), InvalidArgument);
}

TEST_CASE("shading pair serializes exactly") {
  const EdgeTableau t = shading_to_tableau(Shading{4, 2, {{1, 1}, {2, 1}, {3, 2}}});
  CHECK(to_json(t).dump() ==
        R"({"shape":{"outer":[4,3,2,1],"inner":[4,3,2,1]},"boxes":[],)"
        R"("edges":{"1":[],"2":[2,5],"3":[1,3],"4":[4,6,7]},"n":7})");
}

TEST_CASE("rectification traces") {
  const RectificationTrace trace = rectify(fixtures::jdt_path_start());
  const Json j = to_json(trace);
  REQUIRE(j["states"].size() == 3);
  CHECK(j["corners"].dump() == "[[1,2],[1,1]]");
  const Json& first = j["slides"][0];
  CHECK(first["rules"].dump() == R"(["south","diagonal-east","south","edge-absorb"])");
  CHECK(tableau_from_json(j["states"][2]) == trace.result());
}

TEST_CASE("integers") {
  CHECK(to_json(Integer(42)).dump() == "42");
  const Integer big = Integer(1) << 80;
  CHECK(to_json(big).dump() == "\"1208925819614629174706176\"");
}

TEST_CASE("sigma expansions") {
  const SigmaExpansion& e = product_expansion(StrictPartition{1}, StrictPartition{1});
  CHECK(to_json(e).dump() ==
        R"({"lambda":[1],"mu":[1],"terms":[{"nu":[1],"coeff":1,"z_power":1},{"nu":[2],"coeff":2,"z_power":0}]})");
}

TEST_CASE("excited diagrams and violations") {
  const ExcitedDiagram d = initial_diagram(StrictPartition{2, 1}, StrictPartition{5, 3, 2});
  CHECK(to_json(d).dump() == R"({"ambient":[5,3,2],"pluses":[[1,1],[1,2],[2,2]]})");
  const auto vs = validate(fixtures::axioms_break_iv());
  REQUIRE_FALSE(vs.empty());
  const Json v = to_json(vs.front());
  CHECK(v.contains("axiom"));
  CHECK(v.contains("message"));
}
