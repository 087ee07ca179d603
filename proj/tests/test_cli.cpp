#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "addcyc/dual.hpp"
#include "addcyc/textio.hpp"
#include "cli.hpp"

using namespace addcyc;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ADDCYC_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  std::string path = std::string(ADDCYC_TEST_TMP) + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

TripleCode code_of(const std::string& text) {
  std::istringstream in(text);
  return to_code(parse_input(in));
}

}  // namespace

TEST_CASE("verify-paper reports every check and fails on the rejected triple") {
  Result r = run({"verify-paper"});
  CHECK(r.status == 1);
  CHECK(r.out.find("9/10 checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL  mixed (5,5,2) triple validates: divisibility (iii)") != std::string::npos);
  CHECK(r.out.find("PASS  mixed (3,3,3) size 32") != std::string::npos);
  CHECK(r.out.find("PASS  binary row 7: [21,3,12]") != std::string::npos);
  Result m = run({"verify-paper", "--machine"});
  CHECK(m.out.find("1 3 1 3 7 4 3 7 4 3 PASS\n") != std::string::npos);
  CHECK(m.out.find("7 7 7 7 21 3 12 21 3 12 PASS\n") != std::string::npos);
}

TEST_CASE("factor and chains") {
  Result f = run({"factor", "--n", "3", "--p", "2", "--a", "2"});
  CHECK(f.status == 0);
  CHECK(f.out == "x+3, x^2+x+1\n");
  Result c = run({"chains", "--n", "3", "--a", "2", "--machine"});
  CHECK(c.status == 0);
  CHECK(c.out.find("count 9\n") != std::string::npos);
  Result limited = run({"chains", "--n", "7", "--limit", "2"});
  CHECK(limited.out == "1\nx+1\ncount = 8\n");
}

TEST_CASE("info, classify and separable on the (3,3,3) code") {
  Result r = run({"info", data("z2z2z4_333.spec")});
  CHECK(r.status == 0);
  CHECK(r.out.find("size = 32, non-separable, case 7\n") != std::string::npos);
  CHECK(run({"info", "--machine", data("z2z2z4_333.spec")}).out == "size 32 log 5 separable 0 case 7\n");
  CHECK(run({"classify", data("z2z2z4_333.matrix"), "--machine"}).out == "7\n");
  Result s = run({"separable", data("z2z2z4_333.spec")});
  CHECK(s.status == 0);
  CHECK(s.out.rfind("separable = no\n", 0) == 0);
  CHECK(run({"mindist", data("binary_21_3_12.spec")}).out == "[21,3,12]\n");
  CHECK(run({"mindist", data("binary_7_4_3.spec"), "--machine"}).out == "7 4 3\n");
}

TEST_CASE("matrix export re-imports to the same code") {
  for (const char* name : {"z2z2z4_333.spec", "z2z2z4_335.spec", "binary_7_4_3.spec"}) {
    Result m = run({"matrix", data(name)});
    REQUIRE(m.status == 0);
    TripleCode original = to_code(load_input(data(name)));
    CHECK(code_of(m.out) == original);
    std::string path = temp_file("roundtrip.matrix", m.out);
    Result info = run({"info", path});
    CHECK(info.out == run({"info", data(name)}).out);
    std::remove(path.c_str());
  }
}

TEST_CASE("dual export") {
  Result d = run({"dual", data("z2z2z4_333.spec")});
  REQUIRE(d.status == 0);
  CHECK(d.out.rfind("# dual of a code of size 32; dual size 128 (formula 128)\n", 0) == 0);
  TripleCode c = to_code(load_input(data("z2z2z4_333.spec")));
  CHECK(code_of(d.out) == dual_code(c));
  Result check = run({"check-duality", data("z2z2z4_335.spec"), "--samples", "50"});
  CHECK(check.status == 0);
  CHECK(check.out.find("FAIL") == std::string::npos);
}

TEST_CASE("genset and enumerate") {
  Result g = run({"genset", data("z2z2z4_333.spec")});
  CHECK(g.out.find("G_1  x^1  (x^2+x | x+1 | 2x^2+2x)") != std::string::npos);
  CHECK(g.out.find("4 generators, size 32") != std::string::npos);
  Result e = run({"enumerate", data("z2z2z4_333.spec"), "--machine"});
  CHECK(e.status == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 32);
  Result capped = run({"enumerate", data("z2z2z4_333.spec"), "--cap", "10"});
  CHECK(capped.status == 2);
  CHECK(capped.err.find("enumeration too large") != std::string::npos);
}

TEST_CASE("validation and error statuses") {
  Result bad = run({"validate", data("z3z3z9_552.spec")});
  CHECK(bad.status == 1);
  CHECK(bad.out.rfind("invalid\n  divisibility (iii): ", 0) == 0);
  CHECK(run({"validate", data("z2z2z4_333.spec")}).out == "valid\n");
  CHECK(run({"info", data("z3z3z9_552.spec")}).status == 1);
  std::string path = temp_file("broken.spec", "p = 2\nalpha = 3\nbeta = 3\ngamma = 3\nA0 = 1 q\n");
  Result parse = run({"info", path});
  CHECK(parse.status == 2);
  CHECK(parse.err.find("line 5:") != std::string::npos);
  std::remove(path.c_str());
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"info", data("missing.spec")}).status == 2);
}

TEST_CASE("reports are deterministic unless stamped") {
  std::vector<std::string> args = {"info", data("z2z2z4_335.spec")};
  CHECK(run(args).out == run(args).out);
  args.push_back("--stamp");
  Result stamped = run(args);
  CHECK(stamped.out.rfind("# generated ", 0) == 0);
}
