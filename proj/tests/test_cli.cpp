#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "regdepth/csv.hpp"
#include "regdepth/fixtures.hpp"
#include "regdepth/gridmap.hpp"
#include "test_support.hpp"

using namespace regdepth;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  const auto dir = fs::temp_directory_path() / "regdepth-cli-tests";
  fs::create_directories(dir);
  return dir;
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const auto capture = work_dir() / "stdout.txt";
  const std::string cmd = std::string(REGDEPTH_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.code = (raw == -1) ? -1 : WEXITSTATUS(raw);
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string stars_csv() {
  static const std::string path = [] {
    const auto p = work_dir() / "stars.csv";
    std::ofstream out(p);
    write_dataset_csv(load_fixture("stars"), out);
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dataset CSV round trip") {
  const auto d = load_fixture("stars");
  std::stringstream ss;
  write_dataset_csv(d, ss);
  const auto back = parse_dataset_csv(ss);
  REQUIRE(back.n() == 47);
  REQUIRE(back.p() == 2);
  for (int i = 0; i < d.n(); ++i) {
    CHECK(back.carrier1(i) == d.carrier1(i));
    CHECK(back.y(i) == d.y(i));
  }
}

TEST_CASE("dataset CSV: location format and malformed input") {
  std::stringstream ok("y\n1\n2.5\n-3\n");
  const auto d = parse_dataset_csv(ok);
  CHECK(d.p() == 1);
  CHECK(d.n() == 3);

  std::stringstream bad_header("a,y\n1,2\n");
  CHECK_THROWS_AS(parse_dataset_csv(bad_header), std::invalid_argument);
  std::stringstream bad_cell("x1,y\n1,zap\n");
  CHECK_THROWS_AS(parse_dataset_csv(bad_cell), std::invalid_argument);
  std::stringstream short_row("x1,y\n1\n");
  CHECK_THROWS_AS(parse_dataset_csv(short_row), std::invalid_argument);
  std::stringstream empty("");
  CHECK_THROWS_AS(parse_dataset_csv(empty), std::invalid_argument);
}

TEST_CASE("format_g7 keeps seven significant digits") {
  CHECK(format_g7(0.44680851063829785) == "0.4468085");
  CHECK(format_g7(-6.065) == "-6.065");
  CHECK(format_g7(21.0) == "21");
}

TEST_CASE("load_fixture") {
  CHECK(load_fixture("stars").n() == 47);
  CHECK(load_fixture("abc").n() == 3);
  CHECK(load_fixture("two_lines").n() == 20);
  CHECK(load_fixture("symm30").n() == 30);
  CHECK_THROWS_AS(load_fixture("nope"), std::invalid_argument);
  CHECK_THROWS_AS(make_two_lines(7), std::invalid_argument);
}

TEST_CASE("gridmap rows are row-major with beta1 outer") {
  const auto d = load_fixture("abc");
  const auto rows = depth_gridmap(d, Notion::RD, {-1.0, 1.0, 3}, 2);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].beta1 == -1.0);
  CHECK(rows[0].beta2 == -1.0);
  CHECK(rows[1].beta2 == 0.0);
  CHECK(rows[3].beta1 == 0.0);
  CHECK(rows[8].beta1 == 1.0);
  CHECK(rows[8].beta2 == 1.0);
  CHECK_THROWS_AS(depth_gridmap(d, Notion::DC, {-1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(depth_gridmap(d, Notion::RD, {1, -1, 3}), std::invalid_argument);
}

TEST_CASE("gridmap is deterministic across thread counts") {
  const auto d = load_fixture("abc");
  const auto serial = depth_gridmap(d, Notion::RD, {-2, 2, 9}, 1);
  const auto parallel = depth_gridmap(d, Notion::RD, {-2, 2, 9}, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].depth == parallel[i].depth);
  }
}

TEST_CASE("cli: depth subcommand emits k/n JSON and honors exit codes") {
  const auto r = run_cli("depth --notion rd --data " + stars_csv() +
                         " --beta -6.065 2.5");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["k"] == 21);
  CHECK(j["n"] == 47);
  CHECK(approx(j["depth"].get<double>(), 21.0 / 47.0, 1e-9));

  CHECK(run_cli("depth --notion rd --data /no/such/file.csv --beta 0 0").code == 2);
  CHECK(run_cli("depth --notion rd --data " + stars_csv() + " --beta 1").code == 2);
  CHECK(run_cli("depth --bogus-flag 1").code == 2);
}

TEST_CASE("cli: domain errors exit 3") {
  const auto dir = work_dir();
  const auto p3 = dir / "p3.csv";
  {
    std::ofstream out(p3);
    out << "x1,x2,y\n1,2,3\n4,5,6\n7,8,10\n";
  }
  CHECK(run_cli("depth --notion rd --data " + p3.string() + " --beta 0 0 0").code == 3);
  CHECK(run_cli("median --notion rd --data " + p3.string()).code == 3);
}

TEST_CASE("cli: median on the abc fixture") {
  const auto dir = work_dir();
  const auto abc = dir / "abc.csv";
  {
    std::ofstream out(abc);
    write_dataset_csv(load_fixture("abc"), out);
  }
  const auto r = run_cli("median --notion rd --data " + abc.string());
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["maximizers"].size() == 3);
  CHECK(j["unique"] == false);
  CHECK(j["max_depth"]["k"] == 2);
  CHECK(approx(j["average_depth"]["depth"].get<double>(), 1.0 / 3.0, 1e-9));
}

TEST_CASE("cli: dc depth on the two-line fixture") {
  const auto dir = work_dir();
  const auto tl = dir / "two_lines.csv";
  {
    std::ofstream out(tl);
    write_dataset_csv(load_fixture("two_lines"), out);
  }
  const auto r = run_cli("depth --notion dc --data " + tl.string() + " --beta 0 1");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["depth"] == 0.5);
  CHECK(j["k"] == 10);
  CHECK(j["n"] == 20);
}

TEST_CASE("cli: gridmap writes steps^2 rows with the exact header") {
  const auto dir = work_dir();
  const auto out_csv = dir / "grid.csv";
  const auto r = run_cli("gridmap --notion rd --data " + stars_csv() +
                         " --lo -3 --hi 3 --steps 7 --out " + out_csv.string());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rows"] == 49);

  std::ifstream in(out_csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "beta1,beta2,depth");
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 49);
}

TEST_CASE("cli: fixture dump and residual table") {
  const auto dir = work_dir();
  const auto dumped = dir / "abc-dump.csv";
  const auto r = run_cli("fixture --name abc --dump " + dumped.string());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["n"] == 3);
  CHECK(load_dataset_csv(dumped.string()).n() == 3);

  const auto table_csv = dir / "table.csv";
  const auto rr = run_cli("residuals --data " + stars_csv() +
                          " --methods ls,rd --out " + table_csv.string());
  REQUIRE(rr.code == 0);
  std::ifstream in(table_csv);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "i,x1,y,yhat_ls,yhat_rd,r_ls,r_rd");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 47);
}

TEST_CASE("cli: byte-identical output across runs") {
  const auto args = "depth --notion rd --data " + stars_csv() + " --beta -6.065 2.5";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE
