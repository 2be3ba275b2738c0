#include <sstream>

#include "doctest.h"
#include "recgeo/cli.hpp"
#include "recgeo/serialize.hpp"

using namespace recgeo;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  auto r = run_cli({"eval", "--f", "x", "--g", "1", "--h", "-1", "-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 0 1 2 9 44 265\n");

  r = run_cli({"eval", "--f=x", "--g=1", "--h=0", "-n", "5", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["terms"].dump() == R"(["1","1","2","6","24","120"])");
  CHECK(validate_report(doc).empty());
}

TEST_CASE("classify") {
  auto r = run_cli({"classify", "--f", "4 - 2*x", "--g", "3*x - 3", "--h", "2", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["classification"] == "ultimately_geometric");
  CHECK(doc["b"] == "2");
  CHECK(doc["c"] == "3");
  CHECK(doc["n0"] == 2);
  CHECK(doc["primes"].dump() == R"(["2","3"])");
  CHECK(validate_report(doc).empty());

  r = run_cli({"classify", "--f", "x", "--g", "1", "--h=-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "not_ultimately_geometric reason=RatioIdentityFails\n");
}

TEST_CASE("primes") {
  auto r = run_cli({"primes", "--f", "x", "--g", "1", "--h=-1", "-n", "8", "--checkpoints", "4,8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("primes (9): 2 3 5 7 11 13 53 103 163") != std::string::npos);
  CHECK(r.out.find("zero terms at: 1") != std::string::npos);
  CHECK(r.out.find("n=8 primes=9") != std::string::npos);

  r = run_cli({"primes", "--f", "x", "--g", "1", "--h=-1", "-n", "8", "--checkpoints", "8,4"});
  CHECK(r.code == 2);
  r = run_cli({"primes", "--f", "x", "--g", "1", "--h=-1", "--checkpoints", "a,b"});
  CHECK(r.code == 1);

  r = run_cli({"primes", "--f", "x", "--g", "1", "--h=-1", "-n", "8", "--checkpoints", "8", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["growth"].dump() == "[[8,9]]");
  CHECK(validate_report(doc).empty());
}

TEST_CASE("example") {
  auto r = run_cli({"example", "example1", "--b", "2", "--c", "3", "--action", "eval", "-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "-3 -6 12 24\nclosed form agrees with the recurrence\n");

  r = run_cli({"example", "example2", "--bp", "1", "--cp", "1", "--n0", "3", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["family"] == "example2");
  CHECK(doc["b"] == "6");
  CHECK(doc["n0"] == 3);
  CHECK(validate_report(doc).empty());

  r = run_cli({"example", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("remark2 --bp --cp --d --n0") != std::string::npos);

  CHECK(run_cli({"example", "nope"}).code == 1);
  CHECK(run_cli({"example", "example1", "--b", "2"}).code == 1);
  CHECK(run_cli({"example", "example1", "--b", "2", "--c", "x"}).code == 1);
  CHECK(run_cli({"example", "factorial", "--b", "2"}).code == 1);
  CHECK(run_cli({"example", "example2", "--bp", "1", "--cp", "1", "--n0", "0"}).code == 2);
  CHECK(run_cli({"example", "example1", "--b", "2", "--c", "3", "--action", "dance"}).code == 1);
}

TEST_CASE("search") {
  auto r = run_cli({"search", "--deg-max", "1", "--coeff-max", "1", "--terms", "20", "--prime-n", "50",
                    "--prime-threshold", "3", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["summary"]["total"] == 729);
  CHECK(validate_report(doc).empty());
  CHECK(r.err.find("729 specs evaluated") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto r = run_cli({"eval", "--f", "x +", "--g", "1", "--h", "0", "-n", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("syntax error at offset 3") != std::string::npos);

  CHECK(run_cli({"eval", "--f", "1/0", "--g", "1", "--h", "0"}).code == 1);
  CHECK(run_cli({"eval", "--f", "1/2*x", "--g", "1", "--h", "0"}).code == 2);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"eval", "--f", "x"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}
