#include "coxkl/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace coxkl;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "coxkl");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table") {
  const auto r = run({"--group", "A2", "table", "--u", "e", "--w", "1 2 1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("q^3 - 2*q^2 + 2*q - 1") != std::string::npos);
  CHECK(r.out.find("(q-1)^3 + (q-1)^2 + (q-1)") != std::string::npos);
  CHECK(r.out.find("q^3 + q") != std::string::npos);

  const auto j = run({"--group", "A3", "--format", "json", "table", "--w", "2 1 3 2"});
  REQUIRE(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["KL"]["coeffs"] == nlohmann::json::array({1, 1}));
  CHECK(doc["defect"] == 1);
  CHECK(doc["abs_len"] == 2);
}

TEST_CASE("verify") {
  const auto r = run({"-g", "B2", "verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  const auto one = run({"-g", "A2", "--format", "json", "verify", "--checks", "deodhar"});
  CHECK(one.code == kExitOk);
  CHECK(nlohmann::json::parse(one.out).size() == 1);
}

TEST_CASE("graph") {
  const auto r = run({"-g", "A2", "graph"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("// 6 vertices, 9 edges", 0) == 0);
  const auto b = run({"-g", "A3", "--format", "json", "graph", "--find-boolean", "3"});
  REQUIRE(b.code == kExitOk);
  const auto doc = nlohmann::json::parse(b.out);
  CHECK(doc["vertices"] == 8);
  CHECK(doc["edge_count"] == 12);
  CHECK(run({"-g", "A2", "graph", "--find-boolean", "3"}).code == kExitUsage);
}

TEST_CASE("classify") {
  const auto r = run({"-g", "A3", "--format", "json", "classify"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["singular"].size() == 6);
  CHECK(run({"-g", "F4", "--guard", "2000", "classify"}).code == kExitUsage);
}

TEST_CASE("scan-brenti") {
  const auto r = run({"-g", "B2", "scan-brenti"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("no excess") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({"-g", "Z9", "table"}).code == kExitUsage);
  CHECK(run({"table"}).code == kExitUsage);
  CHECK(run({"-g", "A2"}).code == kExitUsage);
  const auto bad = run({"-g", "A2", "table", "--u", "1", "--w", "2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("incomparable") != std::string::npos);
  CHECK(run({"-g", "A2", "table", "--w", "1 1"}).code == kExitUsage);
  CHECK(run({"-g", "A2", "verify", "--checks", "bogus"}).code == kExitUsage);
  CHECK(run({"-g", "A2", "--format", "dot", "table"}).code == kExitUsage);
  CHECK(run({"-g", "A2", "table", "--kinds", "X"}).code == kExitUsage);
}
