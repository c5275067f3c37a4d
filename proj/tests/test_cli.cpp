// End-to-end tests of the command line tool: exit codes, document layout,
// and byte stability of the rendered reports.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  static int counter = 0;
  const std::string capture = "cli_capture_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      std::string("\"") + POLYMUX_CLI_PATH + "\" " + args + " > " + capture + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());

  CliRun r;
  r.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(capture);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(capture.c_str());
  return r;
}

}  // namespace

TEST_CASE("multiplex report with flags") {
  const CliRun r = run_cli("multiplex --d 4 --n 6 --flags --lattice --selfdual");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  CHECK(doc["command"] == "multiplex");
  CHECK(doc["status"] == "ok");
  CHECK(doc["parameters"]["d"] == 4);
  CHECK(doc["results"]["vertices"] == 7);
  CHECK(doc["results"]["f_vector"] == Json::array({"7", "16", "16", "7"}));
  CHECK(doc["results"]["h_vector"] == Json::array({"1", "3", "3", "3", "1"}));
  CHECK(doc["results"]["flags"]["0,3"] == "32");
  CHECK(doc["results"]["flags"][""] == "1");
  for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("ordinary reports") {
  const CliRun r = run_cli("ordinary --d 5 --k 6 --n 8 --h");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  CHECK(doc["status"] == "ok");
  CHECK(doc["results"]["h_vector"] == Json::array({"1", "4", "7", "7", "4", "1"}));
  CHECK(doc["results"]["g_vector"] == Json::array({"1", "3", "3"}));
  CHECK(doc["results"]["f_vector"][0] == "9");

  // boundary instances allow the lattice oracle
  CHECK(run_cli("ordinary --d 5 --k 5 --n 8 --oracle").exit_code == 0);
  CHECK(run_cli("ordinary --d 5 --k 8 --n 8 --oracle").exit_code == 0);

  // invalid parameters and misuse exit with a usage error
  CHECK(run_cli("ordinary --d 6 --k 7 --n 8").exit_code == 1);
  CHECK(run_cli("ordinary --d 5 --k 6 --n 8 --oracle").exit_code == 1);
  CHECK(run_cli("ordinary --d 5 --k 9 --n 8").exit_code == 1);
}

TEST_CASE("large facet reports") {
  const CliRun r = run_cli("largefacet --q 7 --verify --trace");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  CHECK(doc["status"] == "ok");
  CHECK(doc["results"]["f_vector"] == Json::array({"7", "16", "16", "7"}));
  CHECK(doc["results"]["f_02"] == "50");
  CHECK(doc["results"]["h_vector"] == Json::array({"1", "3", "3", "3", "1"}));
  CHECK(doc["results"]["largest_facet_size"] == 6);
  CHECK(doc["results"]["steps"].size() == 0);
  CHECK(doc["results"]["facet_list"].size() == 7);

  const CliRun r8 = run_cli("largefacet --q 8 --verify");
  REQUIRE(r8.exit_code == 0);
  const Json doc8 = Json::parse(r8.output);
  CHECK(doc8["results"]["stacked_final_vertex"] == true);

  CHECK(run_cli("largefacet --q 4").exit_code == 1);
}

TEST_CASE("reduction table report") {
  const CliRun r = run_cli("reduce --d 4");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  CHECK(doc["results"]["columns"] == Json::array({"1", "f_0", "f_1", "f_2"}));
  CHECK(doc["results"]["rows"]["0,2"] == Json::array({"0", "-2", "2", "2"}));
  CHECK(doc["results"]["rows"][""] == Json::array({"1", "0", "0", "0"}));
  CHECK(doc["results"]["rows"].size() == 16);
}

TEST_CASE("span rank report") {
  const CliRun r = run_cli("spanrank --d 5");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  CHECK(doc["status"] == "ok");
  CHECK(doc["results"]["rank"] == 5);
  CHECK(run_cli("spanrank --d 4").exit_code == 1);
}

TEST_CASE("verification suite command") {
  const CliRun r = run_cli("verify --suite largefacet --qmax 12");
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  CHECK(doc["status"] == "ok");
  CHECK(doc["results"]["suites"][0]["name"] == "largefacet");
  CHECK(doc["results"]["suites"][0]["pass"] == true);
}

TEST_CASE("usage errors and global options") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("multiplex --d 4").exit_code == 1);            // missing --n
  CHECK(run_cli("multiplex --d 4 --n 6 --bogus").exit_code == 1);
  CHECK(run_cli("multiplex --d 1 --n 6").exit_code == 1);      // rejected parameters

  // identical invocations must produce identical bytes
  const CliRun a = run_cli("multiplex --d 4 --n 6 --flags");
  const CliRun b = run_cli("multiplex --d 4 --n 6 --flags");
  CHECK(a.output == b.output);

  // csv rendering is a flat key/value table
  const CliRun csv = run_cli("multiplex --d 4 --n 6 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.rfind("key,value\n", 0) == 0);
  CHECK(csv.output.find("results.f_vector.0,7") != std::string::npos);

  // --out writes the same document to a file
  const std::string path = "cli_out_report.json";
  const CliRun filed = run_cli("multiplex --d 4 --n 6 --out " + path);
  REQUIRE(filed.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(Json::parse(buf.str())["status"] == "ok");
  std::remove(path.c_str());

  // trailing global flags are accepted after the subcommand
  CHECK(run_cli("multiplex --d 4 --n 6 --format csv").exit_code == 0);
}
