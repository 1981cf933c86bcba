#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

  struct Result {
    int         code = 0;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "kauffman");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = kauffman::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("cli normalize") {
  CHECK(run({"--n", "3", "normalize", "h1 h2 h1"}).out == "h[1,1]\n");
  CHECK(run({"--n", "3", "normalize", "h1 h1"}).out == "c h[1,1]\n");
  CHECK(run({"--n", "3", "normalize", "1"}).out == "1\n");
  auto r = run({"--n", "3", "normalize", "h1 h1", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out == "rule=3 pos=0 h[1,1] h[1,1] => c h[1,1] chi:-2->0\nc h[1,1]\n");
}

TEST_CASE("cli mul and eval") {
  auto r = run({"--n", "4", "mul", "h[3,2]", "h[2,1]"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("c h[3,1]\n", 0) == 0);
  CHECK(run({"--n", "3", "mul", "1", "h2"}).out.rfind("h[2,2]\n", 0) == 0);
  auto e = run({"--n", "3", "--json", "eval", "c"});
  auto j = nlohmann::json::parse(e.out);
  CHECK(j["schema"] == "kauffman.eval.v1");
  CHECK(j["element"]["exp"] == 1);
  CHECK(j["element"]["diagram"]["pairs"] == nlohmann::json::parse("[[1,-1],[2,-2],[3,-3]]"));
}

TEST_CASE("cli chi") {
  auto r = run({"--n", "4", "chi", "c h[3,1]"});
  CHECK(r.out.find("word: c=1 blue=1 red=0 chi=0") != std::string::npos);
}

TEST_CASE("cli member") {
  auto r = run({"--n", "4", "member", "c h[3,1]", "--certificate"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("yes\n", 0) == 0);
  CHECK(r.out.find("certificate: h[3,2] h[2,3] h[2,1]") != std::string::npos);
  CHECK(run({"--n", "3", "member", "c"}).out.rfind("no (chi odd)", 0) == 0);
  auto s = run({"--n", "3", "member", "c c"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("no (pure scalar)", 0) == 0);
  CHECK(s.err.find("note:") != std::string::npos);
  auto j = nlohmann::json::parse(run({"--n", "3", "--json", "member", "c c"}).out);
  CHECK(j["member"] == false);
  CHECK(j["reason"] == "pure-scalar");
  CHECK(j["diagnostics"].size() == 1);
}

TEST_CASE("cli decompose") {
  CHECK(run({"--n", "6", "decompose", "h[5,2]"}).out == "h[5,4] h[3,2]\n");
  auto r = run({"--n", "3", "decompose", "c"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli idempotents and eggbox") {
  CHECK(run({"idempotents", "--n", "3"}).out == "1\nh[2,1]\nh[1,2]\n");
  auto r = run({"eggbox", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D1 (n=10): 5 R-classes x 4 L-classes, 8 idempotents") != std::string::npos);
  CHECK(r.out.find("D2 (n=10): 4 R-classes x 5 L-classes, 8 idempotents") != std::string::npos);
  auto j = nlohmann::json::parse(run({"--json", "eggbox", "--n", "10"}).out);
  CHECK(j["D1"]["rows"].size() == 5);
}

TEST_CASE("cli verify") {
  auto r = run({"verify", "--n", "5", "--suite", "main2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("main2  PASS  rank 4 (expected 4), idrank 6 (expected 6)") != std::string::npos);
  auto s = run({"verify", "--n", "9", "--suite", "main2", "--suite", "incomparable"});
  CHECK(s.code == 0);
  CHECK(s.out.find("main2         SKIP") != std::string::npos);
  CHECK(s.out.find("incomparable  SKIP") != std::string::npos);
  auto a = run({"--json", "--seed", "7", "verify", "--n", "4", "--trials", "300"});
  auto b = run({"--json", "--seed", "7", "verify", "--n", "4", "--trials", "300"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "kauffman.verify.v1");
  CHECK(j["suites"].size() == 5);
  for (auto const& s : j["suites"]) {
    CHECK(s["status"] == "PASS");
  }
}

TEST_CASE("cli errors and exit codes") {
  CHECK(run({"--n", "3", "normalize", "h5"}).code == 2);
  CHECK(run({"--n", "2", "eggbox"}).code == 2);
  CHECK(run({"eggbox"}).code == 2);
  CHECK(run({"--n", "3"}).code == 2);
  CHECK(run({"--n", "3", "frobnicate"}).code == 2);
  CHECK(run({"--n", "3", "verify", "--suite", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  auto j = nlohmann::json::parse(run({"--n", "3", "--json", "normalize", "h[1"}).out);
  CHECK(j["schema"] == "kauffman.error.v1");
  CHECK(j["error"] == "parse");
}
