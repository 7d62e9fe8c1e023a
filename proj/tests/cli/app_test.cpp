#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riordan/genlagrange.hpp"
#include "riordan_cli/app.hpp"
#include "riordan_cli/render.hpp"

using riordan::cli::run_app;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "riordan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("series prints coefficients 0..order") {
  CHECK(run({"series", "catalan", "--order", "4"}).out == "1, 1, 2, 5, 14\n");
  CHECK(run({"series", "1/(1-x)", "--order", "3"}).out == "1, 1, 1, 1\n");
  CHECK(run({"series", "genbin(1/2, 1)", "--order", "3"}).out == "1, 1, 1/2, 1/8\n");
}

TEST_CASE("series csv and json") {
  CHECK(run({"series", "1+x", "--order", "1", "--format", "csv"}).out == "k,coefficient\r\n0,1\r\n1,1\r\n");
  const auto doc = nlohmann::json::parse(run({"series", "catalan", "--order", "3", "--format", "json"}).out);
  CHECK(doc["coefficients"] == nlohmann::json({"1", "1", "2", "5"}));
  CHECK(doc["order"] == 3);
}

TEST_CASE("the order default comes from the environment") {
  ::setenv("RIORDAN_ORDER_DEFAULT", "2", 1);
  CHECK(run({"series", "1/(1-x)"}).out == "1, 1, 1\n");
  ::setenv("RIORDAN_ORDER_DEFAULT", "two", 1);
  CHECK(run({"series", "1/(1-x)"}).code == 2);
  ::unsetenv("RIORDAN_ORDER_DEFAULT");
  CHECK(run({"series", "1/(1-x)"}).out == "1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1\n");
}

TEST_CASE("matrix examples") {
  CHECK(run({"matrix", "W", "--n", "3", "--m", "2", "--format", "csv"}).out == "4,1,0\r\n4,6,4\r\n0,1,4\r\n");
  CHECK(run({"matrix", "J", "--n", "3", "--format", "csv"}).out == "0,0,0,1\r\n0,0,1,0\r\n0,1,0,0\r\n1,0,0,0\r\n");
  CHECK(run({"matrix", "S", "--n", "3", "--format", "csv"}).out == "6,0,0,0\r\n54,24,0,0\r\n54,72,60,0\r\n6,24,60,120\r\n");
  CHECK(run({"matrix", "U", "--n", "1"}).out == " 1  0\n-1  1\n");
}

TEST_CASE("matrix json round trip") {
  for (const char* kind : {"U", "Finv", "St", "X"}) {
    const auto r = run({"matrix", kind, "--n", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["kind"] == kind);
    CHECK(doc["n"] == 4);
    CHECK_FALSE(doc.contains("beta"));
    const auto back = riordan::cli::matrix_from_json(doc);
    const auto again = nlohmann::json::parse(run({"matrix", kind, "--n", "4", "--format", "json"}).out);
    CHECK(riordan::cli::matrix_from_json(again) == back);
  }
  const auto doc = nlohmann::json::parse(run({"matrix", "G", "--n", "3", "--beta", "-1/2", "--format", "json"}).out);
  CHECK(doc["beta"] == "-1/2");
  CHECK(riordan::cli::matrix_from_json(doc) == riordan::beta_matrix(riordan::BetaKind::G, 3, riordan::Rational(-1, 2)));
}

TEST_CASE("matrix parameter rules are usage errors") {
  CHECK(run({"matrix", "G", "--n", "3"}).code == 2);
  CHECK(run({"matrix", "U", "--n", "3", "--beta", "1"}).code == 2);
  CHECK(run({"matrix", "W", "--n", "3"}).code == 2);
  CHECK(run({"matrix", "U", "--n", "3", "--m", "2"}).code == 2);
  CHECK(run({"matrix", "Q", "--n", "3"}).code == 2);
  CHECK(run({"matrix", "G", "--n", "3", "--beta", "1/0"}).code == 2);
  CHECK(run({"matrix", "U"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("numerator examples") {
  const auto euler = run({"numerator", "euler", "--b", "1", "--a", "exp(x)", "--n", "4"});
  CHECK(euler.code == 0);
  CHECK(euler.out.rfind("1/24*x + 11/24*x^2 + 11/24*x^3 + 1/24*x^4\n", 0) == 0);
  CHECK(run({"numerator", "narayana", "--a", "1/(1-x)", "--n", "2"}).out.rfind("6*x + 6*x^2\n", 0) == 0);
  CHECK(run({"numerator", "alpha", "--a", "1+x", "--n", "5"}).out.rfind("x^5\n", 0) == 0);
  CHECK(run({"numerator", "phi", "--a", "1+x", "--n", "3", "--format", "csv"}).out ==
        "k,coefficient\r\n0,0\r\n1,0\r\n2,0\r\n3,120\r\n");
}

TEST_CASE("input errors go to stderr with a nonzero status") {
  const auto bad = run({"series", "1 +"});
  CHECK(bad.code == 3);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"numerator", "euler", "--a", "2+x", "--n", "2"}).code == 3);
  CHECK(run({"series", "log(x)"}).code == 3);
  CHECK(run({"numerator", "alpha", "--b", "2", "--a", "1+x", "--n", "2"}).code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--suite", "fixtures"}).code == 0);
  CHECK(run({"verify", "--suite", "thm2.3", "--max-n", "8", "--seed", "7"}).code == 0);
  CHECK(run({"verify", "--suite", "thm6.1", "--betas", "-2,1/2,3"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "thm6.1", "--betas", "x"}).code == 2);
}

TEST_CASE("identical invocations give identical output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--suite", "thm2.1", "--seed", "11", "--format", "json"},
           {"matrix", "T", "--n", "4", "--beta", "1/3"},
           {"series", "rev(x - x^2)", "--order", "6"}}) {
    const auto first = run(args);
    CHECK(first.out == run(args).out);
    CHECK(first.err == run(args).err);
  }
}
