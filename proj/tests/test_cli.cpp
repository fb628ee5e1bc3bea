#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(PEARCEY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// data rows of a CSV, comments and the column header dropped
std::vector<std::vector<std::string>> rows(const std::string& csv) {
  std::vector<std::vector<std::string>> r;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    r.push_back(cells);
  }
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gap at s = 2 gives a negative F") {
  auto r = cli("gap --s 2 --rho 0 --m 60");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# pearcey-gap v", 0) == 0);
  auto t = rows(r.out);
  REQUIRE(t.size() == 1);
  REQUIRE(t[0].size() == 7);
  CHECK(std::stod(t[0][3]) < 0);
}

TEST_CASE("gap over a range is monotone") {
  auto r = cli("gap --s-range 4:8:9 --rho 0");
  CHECK(r.code == 0);
  auto t = rows(r.out);
  REQUIRE(t.size() == 9);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(std::stod(t[i][3]) < std::stod(t[i - 1][3]));
}

TEST_CASE("gap at tiny s is close to zero") {
  auto t = rows(cli("gap --s 1e-3").out);
  REQUIRE(t.size() == 1);
  CHECK(std::abs(std::stod(t[0][3])) < 1e-2);
}

TEST_CASE("invalid configurations are rejected") {
  CHECK(cli("gap --s 11").code == 1);
  CHECK(cli("gap --s 2 --rho 5").code == 1);
  CHECK(cli("gap --s 2 --m 7").code == 1);
  CHECK(cli("gap --s 2 --m 500").code == 1);
  CHECK(cli("gap").code == 1);
  CHECK(cli("gap --s 2 --format xml").code != 0);
  CHECK(cli("fit-c --s-range 2:8:5").code == 1);
  CHECK(cli("nonsense").code != 0);
}

TEST_CASE("unconverged gap exits with 2") {
  CHECK(cli("gap --s 8 --m 8 --tol 1e-12").code == 2);
}

TEST_CASE("output is deterministic and thread independent") {
  auto a = cli("gap --s-range 1:3:3 --rho 0.5 --threads 1");
  auto b = cli("gap --s-range 1:3:3 --rho 0.5 --threads 4");
  CHECK(a.out == b.out);
  CHECK(cli("chart --nx 9 --ny 9").out == cli("chart --nx 9 --ny 9").out);
}

TEST_CASE("json format and config file") {
  const std::string path = "cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"s": 2.0, "rho": 0.5, "m": 40})";
  }
  auto r = cli("gap --config " + path + " --format json");
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["m"] == 40);
  CHECK(j["rows"][0]["rho"] == 0.5);
  CHECK(j["rows"][0]["F"].get<double>() < 0);
}

TEST_CASE("fit-c synthetic recovers the injected constant") {
  auto r = cli("fit-c --synthetic");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["c_hat"].get<double>() - j["injected_c"].get<double>()) < 1e-6);
  CHECK(j["samples"].size() == 5);
}

TEST_CASE("fit-c residual exponent at rho = 0") {
  auto j = nlohmann::json::parse(cli("fit-c --rho 0").out);
  const double e = j["residual_exponent"].get<double>();
  CHECK(e >= -1.0);
  CHECK(e <= -0.4);
}

TEST_CASE("verify restricted to one module") {
  auto r = cli("verify --only surface");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  for (const auto& c : j["checks"]) CHECK(c["module"] == "surface");
}

TEST_CASE("verify with tightened tolerances names the limited checks") {
  auto r = cli("verify --only parametrix --tol-scale 0.001");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tol_scale"] == 0.001);
  if (j["passed"] == false) {
    CHECK(r.code == 1);
    CHECK(!j["failing"].empty());
  }
  CHECK(j["tolerance_limited"].is_array());
}

TEST_CASE("chart sign pattern at 2 + 2i and symmetry in y") {
  auto t = rows(cli("chart --xmin -2 --xmax 2 --ymin -2 --ymax 2 --nx 3 --ny 3").out);
  REQUIRE(t.size() == 9);
  for (const auto& row : t)
    if (row[0] == "2" && row[1] == "2") CHECK(row[2] == "1");  // Re(lambda1* - lambda2*) > 0
  // rows ordered with x fastest: y = -2 block mirrors y = 2 block
  for (int ix = 0; ix < 3; ++ix)
    for (int c = 2; c <= 4; ++c) CHECK(t[ix][c] == t[6 + ix][c]);
}

}
