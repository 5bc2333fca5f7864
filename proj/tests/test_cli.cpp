#include <doctest.h>

#include "binoidal/cli.hpp"
#include "dot_check.hpp"

#include <fstream>
#include <sstream>

using binoidal::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("JSON output matches the golden files byte for byte") {
  std::ifstream cases(std::string(BINOIDAL_GOLDEN_DIR) + "/cases.txt");
  REQUIRE(cases);
  std::string line;
  int checked = 0;
  while (std::getline(cases, line)) {
    if (line.empty()) continue;
    auto parts = split(line, '|');
    const std::string name = parts.front();
    parts.erase(parts.begin());
    const auto got = invoke(parts);
    INFO(name);
    CHECK(got.code == 0);
    CHECK(got.out == slurp(std::string(BINOIDAL_GOLDEN_DIR) + "/" + name + ".json"));
    // Same bytes on a second run and with a different thread count.
    parts.push_back("--threads");
    parts.push_back("3");
    CHECK(invoke(parts).out == got.out);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("human-readable output") {
  auto r = invoke({"dim", "free(x,y)"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  r = invoke({"gb", "free(x,y)/(x+y=2x)"});
  CHECK(r.out == "2x -> x+y\n");
  r = invoke({"nf", "free(x,y)/(x+y=2x)", "3x"});
  CHECK(r.out == "x+2y\n");
  r = invoke({"export-algebra", "free(x,y)/(x+y=inf)"});
  CHECK(r.out == "ring K[X1,X2]; ideal (X1*X2)\n");
  r = invoke({"simplicial:sr", "complex{1,2,3; {1},{2},{3}}"});
  CHECK(r.code == 0);
  CHECK(r.out.find("X1*X2, X1*X3, X2*X3") != std::string::npos);
}

TEST_CASE("stdin input") {
  auto r = invoke({"dim", "-"}, "free(x,y,z)\n");
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("exit code 1: usage and parse errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate", "free(x)"}).code == 1);
  CHECK(invoke({"dim", "--nope", "free(x)"}).code == 1);
  CHECK(invoke({"dim"}).code == 1);
  auto r = invoke({"dim", "free(x)/(x+ =y)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("column") != std::string::npos);
  CHECK(invoke({"dim", "free(x)", "--dot"}).code == 1);
  CHECK(invoke({"export-algebra", "free(x)", "--format", "maple"}).code == 1);
  CHECK(invoke({"count-points", "free(x)"}).code == 1);
  CHECK(invoke({"nf", "free(x)", "y"}).code == 1);
  CHECK(invoke({"simplicial:fvector", "complex{1,2; {1}}"}).code == 1);
  CHECK(invoke({"classify-one-gen", "free(x,y)"}).code == 1);
}

TEST_CASE("exit code 2: budget and undecided verdicts") {
  auto r = invoke({"gb", "--budget", "1", "free(x,y,z)/(2x=y+z, 2y=x+z, 2z=x+y)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("BudgetExceeded") != std::string::npos);
  r = invoke({"separated", "free(x,y)/(x+y=0)", "--json"});
  CHECK(r.code == 2);
  CHECK(r.out.find("\"Unknown\"") != std::string::npos);
}

TEST_CASE("exit code 3: precondition violations") {
  auto r = invoke({"hilbert", "3", "free(x)/(3x=x)"});
  CHECK(r.code == 3);
  CHECK(r.err.find("NoPositiveGrading") != std::string::npos);
  CHECK(invoke({"biunion", "free(x)/(x=0)", "free(y)"}).code == 3);
  CHECK(invoke({"count-points", "free(x)", "--q", "6"}).code == 3);
  CHECK(invoke({"count-points", "free(x)", "--q", "4", "--oracle"}).code == 3);
  CHECK(invoke({"fvector", "free(x)/(0=inf)"}).code == 3);
  CHECK(invoke({"hilbert", "2", "free(x)/(x=0)"}).code == 3);
  std::string many = "free(";
  for (int i = 0; i < 25; ++i) many += (i ? ",g" : "g") + std::to_string(i);
  many += ")";
  CHECK(invoke({"spec", many}).code == 3);
}

TEST_CASE("DOT output is well formed") {
  for (const char* text : {"free(x,y)/(x+y=2x)", "free(x,y,z)", "free(x,y)/(x+y=inf)", "free(x)/(3x=0)"}) {
    for (const char* verb : {"spec", "bool"}) {
      const auto r = invoke({verb, text, "--dot"});
      INFO(verb << " " << text);
      CHECK(r.code == 0);
      CHECK(dotcheck::check(r.out) == "");
    }
  }
}

TEST_CASE("DOT checker rejects malformed graphs") {
  CHECK(dotcheck::check("digraph g { a -> b; }") == "");
  CHECK(dotcheck::check("graph { a -- b [color=red]; c; }") == "");
  CHECK(dotcheck::check("digraph g { a -- b; }") != "");
  CHECK(dotcheck::check("digraph g { a -> b; ") != "");
  CHECK(dotcheck::check("digraph g { a [label=\"x] }") != "");
  CHECK(dotcheck::check("digraph g { a [label=]; }") != "");
  CHECK(dotcheck::check("tree g { }") != "");
  CHECK(dotcheck::check("digraph g { } extra") != "");
}
