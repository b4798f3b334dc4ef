#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = eulerpoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("eulerian subcommand") {
  const Result r = run({"eulerian", "--ell", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "x + 11x^2 + 11x^3 + x^4\n1\n1 1\n1 4 1\n1 11 11 1\n");
  CHECK(run({"eulerian", "--ell", "3", "--format", "csv"}).out == "1\n1,1\n1,4,1\n");
  CHECK(run({"eulerian", "--ell", "0"}).out == "1\n");

  const auto j = nlohmann::json::parse(run({"eulerian", "--ell", "3", "--format", "json"}).out);
  CHECK(j["ell"] == 3);
  CHECK(j["polynomial"] == nlohmann::json::array({"0", "1", "4", "1"}));
  CHECK(j["table"].size() == 3);
}

TEST_CASE("bernoulli subcommand") {
  const Result r = run({"bernoulli", "--ell", "4"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "x^4 - 2x^3 + x^2 - 1/30");
  const auto j = nlohmann::json::parse(run({"bernoulli", "--ell", "2", "--format", "json"}).out);
  CHECK(j["number"] == "1/6");
  CHECK(j["number_via_eulerian"] == "1/6");
}

TEST_CASE("verify subcommand") {
  const Result ok = run({"verify", "--ell", "2", "--m", "2"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["holds"] == true);
  CHECK(j["remainder"] == nlohmann::json::array());
  CHECK(j["quotient"] == nlohmann::json::array({"0", "1/8", "-1/8"}));
  CHECK(j["defect"] == nlohmann::json::array({"0", "-1/8", "1/2", "-3/4", "1/2", "-1/8"}));

  const Result bad = run({"verify", "--ell", "2", "--m", "2", "--f", "0 2 1"});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["holds"] == false);

  CHECK(run({"verify", "--ell", "1", "--m", "3"}).code == 0);
  CHECK(run({"verify", "--ell", "2", "--m", "3", "--order", "33"}).code == 0);
  const Result plain = run({"verify", "--ell", "3", "--m", "2", "--format", "plain"});
  CHECK(first_line(plain.out) == "holds: true");
}

TEST_CASE("solve, linial and worpitzky subcommands") {
  CHECK(run({"solve", "--ell", "3", "--m", "2"}).out == "x + 4x^2 + x^3\n");
  const auto j = nlohmann::json::parse(run({"solve", "--ell", "5", "--m", "3", "--format", "json"}).out);
  CHECK(j["matches_recurrence"] == true);
  CHECK(j["unique"] == true);

  CHECK(run({"linial", "--ell", "2"}).out == "t^2 - 3t + 3\n");
  const Result both = run({"linial", "--ell", "4", "--m", "2", "--both"});
  CHECK(both.code == 0);
  CHECK(both.out.find("agree=true") != std::string::npos);

  const Result w = run({"worpitzky", "--ell", "6"});
  CHECK(w.code == 0);
  CHECK(w.out == "t^6\nholds=true\n");
}

TEST_CASE("audit subcommand") {
  const Result r = run({"audit", "--ell", "4", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
  CHECK(run({"audit", "--ell", "4", "--m", "3"}).out == r.out);

  const Result corrupt = run({"audit", "--ell", "4", "--m", "3", "--corrupt-table"});
  CHECK(corrupt.code == 1);
  CHECK(corrupt.out.find("FAIL") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"audit", "--ell", "3", "--m", "2", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() >= 10);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"eulerian"}).code == 2);
  CHECK(run({"eulerian", "--ell", "-1"}).code == 2);
  CHECK(run({"verify", "--ell", "2", "--m", "1"}).code == 2);
  CHECK(run({"verify", "--ell", "2", "--m", "2", "--f", "1/0"}).code == 2);
  CHECK(run({"verify", "--ell", "2", "--m", "2", "--f", "0 0 0 1"}).code == 2);
  CHECK(run({"verify", "--ell", "2", "--m", "3", "--order", "5"}).code == 2);
  CHECK(run({"solve", "--ell", "2", "--m", "2", "--format", "csv"}).code == 2);
  CHECK(run({"eulerian", "--ell", "2", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
