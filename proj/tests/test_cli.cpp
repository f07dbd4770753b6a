#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SELT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SELT_TEST_DATA) + "/" + name; }

size_t lines(const std::string& s) { return static_cast<size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("enumerate") {
  const Run r = run("enumerate --outer 3,2 --inner 2,1 --labels 5");
  CHECK(r.code == 0);
  CHECK(lines(r.out) >= 2);
  CHECK(r.out.find(R"("edges":{"1":[],"2":[1,2,4]})") != std::string::npos);
  CHECK(r.out.find(R"("edges":{"1":[1],"2":[2,4]})") != std::string::npos);
  const Run single = run("enumerate --outer 1 --inner 1 --labels 1");
  CHECK(single.code == 0);
  CHECK(lines(single.out) == 1);
  const Run empty = run("enumerate --outer - --labels 0");
  CHECK(empty.code == 0);
  CHECK(lines(empty.out) == 1);
  const Run ascii = run("enumerate --outer 3,2 --inner 2,1 --labels 5 --format ascii");
  CHECK(ascii.code == 0);
  CHECK(ascii.out.find("# 0") != std::string::npos);
}

TEST_CASE("enumerate error codes") {
  CHECK(run("enumerate --outer 3,1 --labels 2").code == 3);
  CHECK(run("enumerate --outer 2,2 --labels 4").code == 2);
  CHECK(run("enumerate --outer 2 --inner 3 --labels 4").code == 2);
  CHECK(run("enumerate --outer x --labels 4").code == 2);
}

TEST_CASE("rectify") {
  const Run r = run("rectify " + data("path_tableau.json"));
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["states"].size() == 3);
  CHECK(j["slides"][0]["rules"].size() == 4);
  const Run bad = run("rectify " + data("invalid_tableau.json"));
  CHECK(bad.code == 2);
  CHECK(bad.out.find("violations") != std::string::npos);
  CHECK(run("rectify /nonexistent.json").code == 2);
  const Run stdin_run = run("rectify - < " + data("path_tableau.json"));
  CHECK(stdin_run.code == 0);
}

TEST_CASE("coefficients") {
  CHECK(nlohmann::json::parse(run("coeff d --lambda 2,1 --mu 3,2 --nu 3,2").out)["value"] == 2);
  CHECK(nlohmann::json::parse(run("coeff frakd-eyd --lambda 3,2,1 --mu 2,1").out)["value"] == 8);
  CHECK(run("coeff frakD --lambda 1 --mu 1 --nu 2 --format ascii").out == "2\n");
  CHECK(run("coeff frakD --lambda 1 --mu 1 --nu 1 --format ascii").out == "z\n");
  CHECK(run("coeff frakd-ring --lambda 2,1 --mu 1 --nu 2,1 --format ascii").out == "2\n");
  CHECK(run("coeff frakd-ring --lambda 1 --mu 1 --nu 2 --method linear --format ascii").out == "1\n");
  CHECK(run("coeff bogus --lambda 1").code == 2);
  CHECK(run("coeff frakD --lambda 1 --mu 1 --nu 2 --method magic").code == 2);
}

TEST_CASE("expand") {
  const Run r = run("expand --lambda 1 --mu 1");
  CHECK(r.code == 0);
  CHECK(r.out == R"({"lambda":[1],"mu":[1],"terms":[{"nu":[1],"coeff":1,"z_power":1},{"nu":[2],"coeff":2,"z_power":0}]})"
                 "\n");
}

TEST_CASE("check suites") {
  const Run pieri = run("check pieri --max-n 3 --jobs 1");
  CHECK(pieri.code == 0);
  CHECK(nlohmann::json::parse(pieri.out)["summary"]["fail"] == 0);
  const Run stair = run("check staircase --max-n 3 --format ascii");
  CHECK(stair.code == 0);
  CHECK(stair.out.find(" 0 fail") != std::string::npos);
  const Run conj = run("check conjecture --max-weight 0");
  CHECK(conj.code == 0);
  CHECK(nlohmann::json::parse(conj.out)["results"].empty());
  CHECK(run("check nothing").code != 0);
}

TEST_CASE("bijection") {
  const Run fwd = run("bijection --n 4 --m 2 " + data("shading_4_2.json"));
  CHECK(fwd.code == 0);
  CHECK(nlohmann::json::parse(fwd.out) ==
        nlohmann::json::parse(R"({"shape":{"outer":[4,3,2,1],"inner":[4,3,2,1]},"boxes":[],"edges":{"1":[],"2":[2,5],"3":[1,3],"4":[4,6,7]},"n":7})"));
  const Run back = run("bijection --tableau " + data("shading_4_2_tableau.json"));
  CHECK(back.code == 0);
  CHECK(back.out == R"({"n":4,"m":2,"shaded":[[1,1],[2,1],[3,2]]})"
                    "\n");
  const Run empty = run("bijection --n 3 --m 2");
  CHECK(empty.code == 0);
  CHECK(empty.out.find(R"("1":[1],"2":[2,4],"3":[3,5])") != std::string::npos);
  CHECK(run("bijection --tableau " + data("not_slidable.json")).code == 6);
  CHECK(run("bijection --n 3 --m 2 " + data("shading_4_2.json")).code == 2);
}

TEST_CASE("excited diagrams") {
  const Run r = run("eyd --lambda 2,1 --mu 5,3,2");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 4);
}

TEST_CASE("usage errors") {
  CHECK(run("").code != 0);
  CHECK(run("enumerate").code != 0);
}
