#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "sasaki_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = "cd " + workdir().string() + " && " + env + " " + SASAKI_GEOD_BIN + " " +
                          args + " > /dev/null 2> last_stderr.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& name) {
  std::ifstream f(workdir() / name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

nlohmann::json load(const std::string& name) { return nlohmann::json::parse(slurp(name)); }

void ensure_example() {
  if (!fs::exists(workdir() / "ex" / "phi1.csv")) REQUIRE(run("example --name conformal --out ex") == 0);
}

}  // namespace

TEST_CASE("example then oracle distance") {
  ensure_example();
  const auto ex = load("ex/example.json");
  CHECK(ex["status"] == "ok");
  CHECK(ex["oracle_distance"].get<double>() == doctest::Approx(2.89441).epsilon(1e-3));
  REQUIRE(run("distance --phi0 ex/phi0.csv --phi1 ex/phi1.csv --method oracle --out d.json") == 0);
  const auto d = load("d.json");
  CHECK(d["value"].get<double>() == doctest::Approx(2.89441).epsilon(1e-3));
  CHECK(d["config"]["grid"]["N"] == 257);
}

TEST_CASE("distance to itself is zero") {
  ensure_example();
  REQUIRE(run("distance --phi0 ex/phi1.csv --phi1 ex/phi1.csv --method oracle --out self.json") == 0);
  CHECK(load("self.json")["value"].get<double>() == 0.0);
}

TEST_CASE("reports are byte identical across runs") {
  ensure_example();
  REQUIRE(run("distance --phi0 ex/phi0.csv --phi1 ex/phi1.csv --method eps_limit --eps-schedule 1,0.01 --out a.json") == 0);
  REQUIRE(run("distance --phi0 ex/phi0.csv --phi1 ex/phi1.csv --method eps_limit --eps-schedule 1,0.01 --out b.json") == 0);
  CHECK(slurp("a.json") == slurp("b.json"));
  CHECK(load("a.json")["eps_trace"].size() == 2);
}

TEST_CASE("random cat0 audit honours the seed") {
  REQUIRE(run("cat0 --random --trials 20 --lambda 0.5 --out c1.json", "GEOD_SEED=5") == 0);
  REQUIRE(run("cat0 --random --trials 20 --lambda 0.5 --out c2.json", "GEOD_SEED=5") == 0);
  REQUIRE(run("cat0 --random --trials 20 --lambda 0.5 --out c3.json", "GEOD_SEED=6") == 0);
  CHECK(slurp("c1.json") == slurp("c2.json"));
  CHECK(slurp("c1.json") != slurp("c3.json"));
  const auto rep = load("c1.json");
  CHECK(rep["seed"] == 5);
  CHECK(rep["statistics"]["passed"] == 20);
  CHECK(rep["statistics"]["min_relative_slack"].get<double>() >= -1e-3);
}

TEST_CASE("energy and sasaki subcommands") {
  ensure_example();
  REQUIRE(run("energy --phi ex/phi1.csv --out e.json") == 0);
  const auto e = load("e.json");
  CHECK(e["full_mass"] == true);
  CHECK(e["in_E2"] == true);
  REQUIRE(run("sasaki --phi0 ex/phi0.csv --phi1 ex/phi1.csv --method oracle --out s.json") == 0);
  CHECK(load("s.json")["sasaki_distance"].get<double>() == doctest::Approx(7.2552).epsilon(1e-3));
}

TEST_CASE("solve writes one path per eps") {
  ensure_example();
  REQUIRE(run("solve --phi0 ex/phi0.csv --phi1 ex/phi1.csv --ns 129 --nt 17 --eps-schedule 1,0.1 --out sol") == 0);
  const auto summary = load("sol/summary.json");
  CHECK(summary["solutions"].size() == 2);
  CHECK(fs::exists(workdir() / "sol" / "solution_1.csv"));
  CHECK(load("sol/solution_1.json")["eps"].get<double>() == 0.1);
}

TEST_CASE("exit codes") {
  ensure_example();
  CHECK(run("solve --phi0 ex/phi0.csv --phi1 ex/phi1.csv --eps-schedule 0.1,1 --out bad") == 2);
  CHECK(load("bad/summary.json")["status"] == "validation_error");
  CHECK(run("solve --phi0 ex/phi0.csv --phi1 ex/phi1.csv --ns 129 --nt 17 --max-newton-iters 1 --out fail") == 3);
  CHECK(load("fail/summary.json")["status"] == "solver_failure");
  CHECK(run("distance --phi0 missing.csv --phi1 ex/phi1.csv --out x.json") != 0);
  CHECK(run("frobnicate") != 0);
}
