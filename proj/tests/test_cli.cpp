#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sternpoly/cli.hpp"
#include "sternpoly/report.hpp"

using namespace sternpoly;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sternpoly");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly") {
  CHECK(run({"poly", "--t", "2", "--n", "11"}).out == "1 + z^2 + z^4 + z^8 + z^10\n");
  CHECK(run({"poly", "--t", "2", "--n", "0"}).out == "0\n");
  const Run json = run({"poly", "--t", "2", "--n", "8", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(Json::parse(json.out)["terms"] == Json::parse(R"([["7","1"]])"));
}

TEST_CASE("alpha and series") {
  const Run a = run({"alpha", "--k", "2", "--n", "3", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(Json::parse(a.out)["value"] == "13");
  const Run s = run({"series", "--t", "2", "--k", "1", "--order", "24", "--format", "json"});
  CHECK(Json::parse(s.out)["coeffs"] == "101010001010000010101000");
}

TEST_CASE("eval and cf") {
  const Run e = run({"eval", "--t", "2", "--k", "1", "--alpha", "1/2", "--order", "64", "--format", "json"});
  REQUIRE(e.code == 0);
  const Json j = Json::parse(e.out);
  CHECK(j.contains("H_alpha"));
  CHECK(j.contains("tail_bound"));

  const Run cf = run({"cf", "--t", "2", "--k", "1", "--depth", "3", "--at", "1/2", "--format", "json"});
  REQUIRE(cf.code == 0);
  const Json conv = Json::parse(cf.out)["convergents"];
  REQUIRE(conv.size() == 4);
  CHECK(conv[3] == "1349/1092");

  const Run reg = run({"cf", "--t", "2", "--k", "1", "--depth", "3", "--at", "1/2", "--regular"});
  CHECK(reg.code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"poly", "--t", "1", "--n", "3"}).code == 2);
  CHECK(run({"eval", "--t", "2", "--k", "1", "--alpha", "2/1"}).code == 2);
  CHECK(run({"eval", "--t", "2", "--k", "1", "--alpha", "1/0"}).code == 2);
  CHECK(run({"cf", "--t", "2", "--k", "1", "--depth", "2", "--regular"}).code == 2);
  CHECK(run({"cf", "--t", "2", "--k", "1", "--depth", "2", "--at", "1/3", "--regular"}).code == 2);
  CHECK(run({"poly", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  const Run capped = run({"--term-cap", "2", "poly", "--t", "2", "--n", "11"});
  CHECK(capped.code == 3);
  CHECK_FALSE(capped.err.empty());
  CHECK(run({"poly", "--t", "2", "--n", "11"}).code == 0);
}

TEST_CASE("verify reports") {
  const std::vector<std::string> args{"verify", "--t", "2", "--k", "1,2", "--depth", "4", "--order", "64", "--format", "json"};
  const Run first = run(args);
  CHECK(first.code == 0);
  const Run second = run(args);
  CHECK(first.out == second.out);
  const Json j = Json::parse(first.out);
  CHECK(j["pass"] == true);
  CHECK(CheckReport::from_json(j).to_json().dump(2) + "\n" == first.out);

  CHECK(run({"verify", "--suite", "mahler", "--t", "2", "--k", "1", "--depth", "8"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--t", "1"}).code == 2);

  const Run jobs = run({"verify", "--t", "2,3", "--k", "1", "--depth", "4", "--order", "64", "--jobs", "2", "--format", "json"});
  const Run serial = run({"verify", "--t", "2,3", "--k", "1", "--depth", "4", "--order", "64", "--jobs", "1", "--format", "json"});
  CHECK(jobs.out == serial.out);
}

#ifdef STERNPOLY_CLI_PATH
TEST_CASE("installed executable") {
  const std::string cmd = std::string(STERNPOLY_CLI_PATH) + " poly --t 2 --n 5 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}
#endif
