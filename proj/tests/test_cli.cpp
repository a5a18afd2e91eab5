#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pwe/errors.hpp"
#include "pwe/json_io.hpp"

using namespace pwe;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

void check_round_trip(const std::string& text) {
  const Json j = Json::parse(text);
  CHECK(j.dump(2) + "\n" == text);
}

}  // namespace

TEST_CASE("integer lists") {
  CHECK(cli::parse_int_list("3,1,-2") == std::vector<int>{3, 1, -2});
  CHECK(cli::parse_int_list("").empty());
  CHECK(cli::parse_int_list("+4") == std::vector<int>{4});
  for (const char* bad : {"3,,1", "a", "3,", ",3", "1.5", "- 2", "99999999999"}) {
    INFO(bad);
    CHECK_THROWS_AS(cli::parse_int_list(bad), ParseError);
  }
}

TEST_CASE("orbit prints the eleven-member chain") {
  const Result r = run({"orbit", "--entries", "6,5,2,1,-2,-3"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 11);
  CHECK(ls.front() == "[5^2,3^2,2|∅]  (9,8,5,4,2)");
  CHECK(ls[3] == "[3^2,1^2|1^2]  (6,5,2,1,-2,-3)");
  CHECK(ls.back() == "[∅|5^2,4,2^2]  (-3,-4,-7,-9,-10)");
}

TEST_CASE("pw of the empty character is 1") {
  const Result r = run({"pw", "--model", "laguerre", "--psi", "", "--phi", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("equiv on the worked example") {
  const Result text = run({"equiv", "--model", "laguerre", "--psi", "3,1,-2", "--phi=3,-3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("exponents  (z)^-4") != std::string::npos);
  CHECK(text.out.find("alpha +1") != std::string::npos);

  const Result r = run({"equiv", "--model", "laguerre", "--psi", "3,1,-2", "--phi=3,-3", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("exponents").at("z") == -4);
  CHECK(j.at("shifts").at("alpha") == 1);
  CHECK(j.at("verified") == true);
  check_round_trip(r.out);
  // Through the typed report and back.
  CHECK(to_json(equivalence_report_from_json(j)).dump(2) + "\n" == r.out);
}

TEST_CASE("every JSON output round-trips byte for byte") {
  const std::vector<std::vector<std::string>> cmds = {
      {"orbit", "--entries", "6,5,2,1,-2,-3"},
      {"render", "--entries", "3,1,-2"},
      {"pw", "--model", "jacobi", "--psi", "2,-1", "--phi", "1"},
      {"equiv", "--model", "jacobi", "--psi", "3,1,-2", "--phi=3,-3"},
      {"oracle", "--model", "laguerre", "--psi", "2,-1", "--phi", "1"},
      {"potential", "--model", "laguerre", "--psi", "1", "--phi", ""},
      {"sweep", "--model", "laguerre", "--max-size", "2", "--range", "-1,1"},
  };
  for (auto cmd : cmds) {
    cmd.push_back("--format");
    cmd.push_back("json");
    INFO(cmd.front());
    const Result r = run(cmd);
    CHECK(r.code == 0);
    check_round_trip(r.out);
  }
}

TEST_CASE("usage errors exit with 2") {
  const std::vector<std::vector<std::string>> cmds = {
      {},
      {"frobnicate"},
      {"pw", "--model", "hermite", "--psi", "1", "--phi", ""},
      {"pw", "--model", "laguerre", "--psi", "1,1", "--phi", ""},
      {"pw", "--model", "laguerre", "--psi", "1,x", "--phi", ""},
      {"orbit"},
      {"orbit", "--entries", "2,2"},
      {"equiv", "--psi", "1", "--format", "xml"},
      {"oracle", "--model", "laguerre", "--psi", "3,2,1", "--phi", "", "--bound", "2"},
      {"sweep", "--range", "3,1"},
      {"sweep", "--check", "nothing"},
  };
  for (const auto& cmd : cmds) {
    const std::string name = cmd.empty() ? "(none)" : cmd.front();
    INFO(name);
    const Result r = run(cmd);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("failed checks exit with 1") {
  // Every character above the seed cap fails its check.
  const Result r = run({"sweep", "--model", "laguerre", "--check", "oracle", "--max-size", "1", "--range", "0,1",
                        "--bound", "0"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("seeded sweep is deterministic") {
  for (const char* model : {"laguerre", "jacobi"}) {
    const std::vector<std::string> cmd = {"sweep", "--model", model, "--seed", "1",      "--count",
                                          "12",    "--max-size", "2", "--range", "-3,4", "--format", "json"};
    const Result a = run(cmd);
    const Result b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).at("total") == 12);
  }
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep") != std::string::npos);
}
