#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wgame/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wgame::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& text) {
  std::size_t count = 0;
  for (char c : text) count += c == '\n';
  return count;
}

}  // namespace

TEST_CASE("fvector") {
  CHECK(run({"fvector", "--board", "path:5", "--weights", "2,3"}).out == "1,7,5\n");
  CHECK(run({"fvector", "--board", "cycle:5", "--weights", "2,3"}).out == "1,10,10\n");
  CHECK(run({"fvector", "--board", "complete:4", "--weights", "2,2"}).out == "1,12,12\n");
  const auto json = nlohmann::json::parse(run({"fvector", "--board", "complete:4", "--weights", "2,2", "--json"}).out);
  CHECK(json["f_vector"] == nlohmann::json({"1", "12", "12"}));
}

TEST_CASE("fvector on a board file") {
  const std::string path = "wgame_cli_test_board.txt";
  {
    std::ofstream file(path);
    file << "# two triangles sharing vertex 3\n5\n1 2\n2 3\n1 3\n3 4\n4 5\n3 5\n";
  }
  const auto result = run({"fvector", "--board", "file:" + path, "--weights", "1,1"});
  std::remove(path.c_str());
  CHECK(result.code == 0);
  CHECK(result.out == "1,10,40,80,80,32\n");
}

TEST_CASE("enumerate") {
  const auto two = run({"enumerate", "--board", "path:5", "--weights", "2,3", "--k", "2"});
  CHECK(two.code == 0);
  CHECK(lines(two.out) == 6);
  CHECK(two.out.find("L{1,2} R{3,4,5}\n") != std::string::npos);
  CHECK(two.out.find("# count: 5\n") != std::string::npos);
  CHECK(run({"enumerate", "--board", "path:5", "--weights", "2,3", "--k", "0"}).out == "-\n# count: 1\n");
  CHECK(run({"enumerate", "--board", "path:2", "--weights", "1,2", "--k", "1"}).out ==
        "L{1}\nL{2}\nR{1,2}\n# count: 3\n");
}

TEST_CASE("formula") {
  const auto complete = run({"formula", "--board", "complete:4", "--weights", "2,2", "--k", "2"});
  CHECK(complete.code == 0);
  CHECK(complete.out.rfind("12\n", 0) == 0);
  const auto path = run({"formula", "--board", "path:5", "--weights", "2,3", "--k", "2"});
  CHECK(path.out.rfind("5\n", 0) == 0);
  CHECK(path.out.find("N_LL=3,N_LR=2,N_RR=0") != std::string::npos);
  const auto none = run({"formula", "--board", "path:5", "--weights", "2,3", "--k", "3"});
  CHECK(none.code == wgame::cli::kDomainError);
  CHECK(none.err.find("no closed form") != std::string::npos);
}

TEST_CASE("kk") {
  CHECK(run({"kk", "rep", "5", "2"}).out == "C(3,2)+C(2,1)\n");
  CHECK(run({"kk", "pseudo", "12", "2", "3"}).out == "11\n");
  CHECK(run({"kk", "check", "1,7,5"}).out == "valid\n");
  CHECK(run({"kk", "check", "1,1,1", "--form", "lower"}).out.rfind("invalid", 0) == 0);
  CHECK(run({"kk", "rep", "0", "2"}).code == wgame::cli::kDomainError);
  CHECK(run({"kk", "rep", "x", "2"}).code == wgame::cli::kParseError);
}

TEST_CASE("diff") {
  CHECK(run({"diff", "--board", "path", "--weights", "2,3", "--n", "1..12"}).out == "OK 12/12\n");
  const auto cycle = run({"diff", "--board", "cycle", "--weights", "2,2", "--n", "3..10"});
  CHECK(cycle.code == 0);
  CHECK(cycle.out.rfind("OK", 0) == 0);
  CHECK(run({"diff", "--board", "complete", "--weights", "2,3", "--n", "1..8"}).out == "OK 8/8\n");
  // The single-piece cycle formula counts n placements for a full-length piece.
  const auto full = run({"diff", "--board", "cycle", "--weights", "5,1", "--n", "5"});
  CHECK(full.code == wgame::cli::kDiffMismatch);
  CHECK(full.out.find("MISMATCH n=5 k=1 formula=10 brute=6") != std::string::npos);
}

TEST_CASE("compare") {
  const auto cycle = run({"compare", "--board", "cycle", "--weights", "2,3", "--n", "5..5"});
  CHECK(cycle.out == "board,n,a,b,k,paper,kk,ratio,strict\ncycle,5,2,3,2,10,45,0.222222,true\n");
  const auto path = run({"compare", "--board", "path", "--weights", "1,1", "--n", "4..4"});
  CHECK(path.out.find("path,4,1,1,2,24,28,") != std::string::npos);
}

TEST_CASE("export") {
  const auto json = run({"export", "--board", "complete:4", "--weights", "2,2", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["vertices"].size() == 12);
  CHECK(doc["faces"][2].size() == 12);
  const auto faces = run({"export", "--board", "path:5", "--weights", "2,3"});
  CHECK(faces.out.rfind("# game: Weight(2,3)\n", 0) == 0);
  CHECK(run({"export", "--board", "path:5", "--weights", "2,3", "--format", "xml"}).code == wgame::cli::kParseError);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == wgame::cli::kParseError);
  CHECK(run({"fvector", "--board", "path:5", "--weights", "2"}).code == wgame::cli::kParseError);
  CHECK(run({"fvector", "--board", "path:5", "--weights", "2,3", "--bogus"}).code == wgame::cli::kParseError);
  CHECK(run({"fvector", "--board", "torus:5", "--weights", "2,3"}).code == wgame::cli::kParseError);
  CHECK(run({"fvector", "--board", "cycle:2", "--weights", "2,3"}).code == wgame::cli::kDomainError);
  CHECK(run({"fvector", "--board", "path:5", "--weights", "0,3"}).code == wgame::cli::kDomainError);
  CHECK(run({"diff", "--board", "path", "--weights", "1,1", "--n", "5..2"}).code == wgame::cli::kParseError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"export", "--board", "cycle:7", "--weights", "1,2", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
