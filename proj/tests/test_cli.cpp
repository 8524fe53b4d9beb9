#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "pip/bench.hpp"
#include "pip/fixtures.hpp"
#include "pip/mask.hpp"
#include "pip/polygon_io.hpp"
#include "support.hpp"

using namespace pip;

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const std::string capture = tmp_path("pip_cli_capture.txt");
  const std::string cmd = std::string(PIP_CLI_PATH) + " " + args + " >" + capture + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult result;
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.output = slurp(capture);
  std::remove(capture.c_str());
  return result;
}

std::string write_square() {
  const std::string path = tmp_path("pip_cli_square.txt");
  save_polygon(path, square_fixture());
  return path;
}

}  // namespace

TEST_CASE("gen writes a loadable fixture") {
  const std::string path = tmp_path("pip_cli_gen.txt");
  const RunResult r = run_cli("gen --fixture square --out " + path);
  REQUIRE(r.status == 0);
  const Polygon poly = load_polygon(path);
  REQUIRE(poly.size() == 4);
  CHECK(same_point(poly.vertex(0), {-1, -1}));
  CHECK(same_point(poly.vertex(2), {1, 1}));
  std::remove(path.c_str());
}

TEST_CASE("gen random is deterministic per seed") {
  const std::string a = tmp_path("pip_cli_rand_a.txt");
  const std::string b = tmp_path("pip_cli_rand_b.txt");
  REQUIRE(run_cli("gen --fixture random --seed 5 --n 10 --out " + a).status == 0);
  REQUIRE(run_cli("gen --fixture random --seed 5 --n 10 --out " + b).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("classify prints one label per query") {
  const std::string poly = write_square();
  CHECK(run_cli("classify --poly " + poly + " --x 0 --y 0").output == "Inside\n");
  CHECK(run_cli("classify --poly " + poly + " --x 3 --y 0").output == "Outside\n");
  CHECK(run_cli("classify --poly " + poly + " --x 1 --y 0").output == "OnBoundary\n");
  CHECK(run_cli("classify --poly " + poly + " --x 0.5 --y 0.5 --method ray").output == "Inside\n");
  std::remove(poly.c_str());
}

TEST_CASE("slender flag flips the narrow channel verdict") {
  const std::string path = tmp_path("pip_cli_slender.txt");
  REQUIRE(run_cli("gen --fixture slender --out " + path).status == 0);
  const std::string base = "classify --poly " + path + " --x 0.06 --y 2";
  CHECK(run_cli(base).output == "Inside\n");
  CHECK(run_cli(base + " --slender").output == "Outside\n");
  CHECK(run_cli(base + " --method ray").output == "Outside\n");
  std::remove(path.c_str());
}

TEST_CASE("grid writes a readable mask") {
  const std::string poly = write_square();
  const std::string mask_path = tmp_path("pip_cli_mask.csv");
  const RunResult r =
      run_cli("grid --poly " + poly + " --xmin -5 --step 0.1 --lines 101 --out " + mask_path);
  REQUIRE(r.status == 0);
  const Mask mask = load_mask(mask_path);
  CHECK(mask.q == 101);
  std::size_t boundary = 0;
  for (const Classification c : mask.labels) {
    if (c == Classification::OnBoundary) ++boundary;
  }
  CHECK(boundary == 80);
  std::remove(poly.c_str());
  std::remove(mask_path.c_str());
}

TEST_CASE("bench emits the csv header") {
  const RunResult r = run_cli("bench --methods dual --sizes 144 --z 1");
  REQUIRE(r.status == 0);
  std::istringstream in(r.output);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == std::string(kBenchCsvHeader));
  REQUIRE(std::getline(in, line));
  CHECK(line.substr(0, 9) == "dual,144,");
}

TEST_CASE("validate reports simplicity through the exit code") {
  const std::string good = write_square();
  const RunResult ok = run_cli("validate --poly " + good);
  CHECK(ok.status == 0);
  CHECK(ok.output.find("simple yes") != std::string::npos);
  CHECK(ok.output.find("orientation ccw") != std::string::npos);
  std::remove(good.c_str());

  const std::string bad = tmp_path("pip_cli_bowtie.txt");
  save_polygon(bad, Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}));
  const RunResult fail = run_cli("validate --poly " + bad);
  CHECK(fail.status == 2);
  CHECK(fail.output.find("simple no") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("usage and data errors use distinct exit codes") {
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("classify --nope").status == 1);
  CHECK(run_cli("classify").status == 1);
  CHECK(run_cli("frobnicate").status == 1);
  CHECK(run_cli("classify --poly " + tmp_path("pip_cli_absent.txt") + " --x 0 --y 0").status == 2);
  CHECK(run_cli("classify --poly /dev/null --x 0 --y 0").status == 2);
}
