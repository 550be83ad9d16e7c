#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

std::string data(const std::string& name) { return std::string(LORENZ_DATA) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const auto out = std::filesystem::temp_directory_path() / "lorenz_cli_test.out";
  const std::string cmd = std::string(LORENZ_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

}  // namespace

TEST_CASE("gini fixture") {
  const auto r = run("gini -i " + data("gini_1_3.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "0.250000000000\n");
}

TEST_CASE("hull output") {
  auto r = run("hull -i " + data("unit_square.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "x,y\n0,0\n1,0\n1,1\n0,1\n");
  r = run("hull -i " + data("empty2.json"));
  CHECK(r.out == "x,y\n0,0\n");
  r = run("hull -i " + data("line3.json") + " --dirs 5 --seed 3");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(r.out.rfind("d1,d2,d3,reach\n", 0) == 0);
  CHECK(run("hull -i " + data("malformed.json")).code == 2);
  CHECK(run("hull -i " + data("missing.json")).code == 2);
}

TEST_CASE("product and sum") {
  auto r = run("product " + data("identity2.json") + " " + data("unit_square.json"));
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["atoms"] == nlohmann::json::parse("[[1.0,0.0],[0.0,1.0]]"));
  CHECK(run("product " + data("unit_square.json") + " " + data("line3.json")).code == 2);
  r = run("sum -i " + data("unit_square.json") + " -i " + data("double_square.json"));
  CHECK(nlohmann::json::parse(r.out)["atoms"].size() == 4);
  r = run("product " + data("complex1.json") + " " + data("complex1.json"));
  CHECK(nlohmann::json::parse(r.out)["complex"] == true);
}

TEST_CASE("inclusion verdicts and exit codes") {
  auto r = run("include " + data("unit_square.json") + " " + data("double_square.json"));
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "Included");
  r = run("include " + data("double_square.json") + " " + data("unit_square.json") + " --mode sampled");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "Excluded");
  CHECK(run("include " + data("line3.json") + " " + data("line3.json") + " --mode exact2d").code == 2);
}

TEST_CASE("hausdorff") {
  auto r = run("hausdorff " + data("unit_square.json") + " " + data("unit_square.json"));
  CHECK(nlohmann::json::parse(r.out)["distance"] == 0.0);
  r = run("hausdorff " + data("segment_a.json") + " " + data("segment_b.json"));
  CHECK(nlohmann::json::parse(r.out)["distance"].get<double>() == doctest::Approx(1.5));
  r = run("hausdorff --points " + data("unit_square.json") + " " + data("double_square.json"));
  CHECK(nlohmann::json::parse(r.out)["distance"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("achieve") {
  auto r = run("achieve -i " + data("unit_square.json") + " --target 0.5,0.5");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["intervals"] == nlohmann::json::parse("[[0.0,0.5],[1.0,1.5]]"));
  CHECK(run("achieve -i " + data("unit_square.json") + " --target 2,2").code == 1);
}

TEST_CASE("curve, skeleton and discretize") {
  const auto svg = std::filesystem::temp_directory_path() / "lorenz_cli_curve.svg";
  auto r = run("curve -i " + data("gini_1_3.json") + " --svg " + svg.string());
  CHECK(r.out == "x,y\n0,0\n0.5,0.25\n1,1\n");
  CHECK(slurp(svg).find("viewBox=\"0 0 1 1\"") != std::string::npos);
  r = run("skeleton -i " + data("unit_square.json"));
  CHECK(r.out == "x1,x2\n0,0\n0,1\n1,0\n1,1\n");
  r = run("discretize -i " + data("gini_1_3.json") + " -i " + data("unit_square.json") + " --delta 0.4 --levels 3");
  CHECK(r.code == 0);
  const auto levels = nlohmann::json::parse(r.out);
  REQUIRE(levels.size() == 3);
  for (const auto& l : levels) CHECK(l["measured_distance"].get<double>() <= l["bound"].get<double>());
}

TEST_CASE("verify and usage errors") {
  auto r = run("verify --suite identity --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("suite identity: 100 cases, 0 failures") != std::string::npos);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}
