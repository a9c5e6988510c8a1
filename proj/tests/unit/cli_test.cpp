#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kelc/cli.hpp"
#include "kelc/error.hpp"

using namespace kelc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempFile(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kelc_cli_test_" + name);
}

}  // namespace

TEST_CASE("lc and klc") {
  auto r = Invoke({"lc", "--n", "3", "--seq", "10100000"});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  r = Invoke({"lc", "--n", "3", "--seq", "0xA0"});
  CHECK(r.out == "6\n");
  r = Invoke({"klc", "--n", "3", "--seq", "10100000", "--k", "2"});
  CHECK(r.out == "0\n");
  r = Invoke({"klc", "--n", "2", "--seq", "1111", "--k", "2", "--method", "exhaustive"});
  CHECK(r.out == "1\n");
}

TEST_CASE("sequence literal from a file") {
  const auto path = TempFile("seq.txt");
  std::ofstream(path) << "10100000\n";
  CHECK(cli::ParseSequenceLiteral(3, "@" + path.string()) == MakeSequence(3, "10100000"));
  const auto r = Invoke({"lc", "--n", "3", "--seq", "@" + path.string()});
  CHECK(r.out == "6\n");
  std::filesystem::remove(path);
  CHECK(Invoke({"lc", "--n", "3", "--seq", "@/nonexistent/kelc"}).code == 1);
}

TEST_CASE("bad literal is a usage error") {
  const auto r = Invoke({"lc", "--n", "3", "--seq", "1012000"});
  CHECK(r.code == 2);
  CHECK(r.err.find("InvalidLiteral") != std::string::npos);
  CHECK(Invoke({"lc", "--n", "3", "--seq", "1010000"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(Invoke({}).code == 2);
  CHECK(Invoke({"frobnicate"}).code == 2);
  CHECK(Invoke({"lc", "--n", "3"}).code == 2);
  CHECK(Invoke({"count", "--n", "5", "--L", "25", "--bogus"}).code == 2);
  CHECK(Invoke({"count", "--n", "5", "--k", "3", "--L", "25"}).code == 2);
  CHECK(Invoke({"count", "--n", "5", "--L", "40"}).code == 2);
  const auto help = Invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("sum-check") != std::string::npos);
}

TEST_CASE("count") {
  auto r = Invoke({"count", "--n", "5", "--k", "4", "--L", "25"});
  CHECK(r.code == 0);
  CHECK(r.out == "486539264\n");
  r = Invoke({"count", "--n", "5", "--L", "25", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == "486539264");
  CHECK(doc["category"] == "F{r=3,m=3}");
}

TEST_CASE("table formats") {
  auto r = Invoke({"table", "--n", "5", "--k", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("L,count\n0,36457\n", 0) == 0);

  r = Invoke({"table", "--n", "2", "--k", "4"});
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 1 + 4);

  r = Invoke({"table", "--n", "7", "--k", "4", "--format", "json"});
  const auto table = cli::TableFromJson(r.out);
  CHECK(table == FullTable(7, 4));
}

TEST_CASE("table csv is identical across thread counts") {
  const auto one = Invoke({"table", "--n", "5", "--k", "4", "--format", "csv", "--threads", "1"});
  const auto four = Invoke({"table", "--n", "5", "--k", "4", "--format", "csv", "--threads", "4"});
  const auto again = Invoke({"table", "--n", "5", "--k", "4", "--format", "csv", "--threads", "1"});
  CHECK(one.out == four.out);
  CHECK(one.out == again.out);
}

TEST_CASE("verify and sum-check") {
  auto r = Invoke({"verify", "--n", "3", "--k", "4", "--method", "exhaustive"});
  CHECK(r.code == 0);
  r = Invoke({"verify", "--n", "3", "--k", "5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["rows"].size() == 8);
  CHECK(Invoke({"sum-check", "--n", "4"}).code == 0);
  r = Invoke({"sum-check", "--n", "6", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(r.code == (doc["match"].get<bool>() ? 0 : 1));
}

TEST_CASE("long enumeration needs an explicit flag") {
  const auto r = Invoke({"spectrum", "--n", "5", "--k", "4", "--method", "fast"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--allow-long") != std::string::npos);
  CHECK(r.err.find("min") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(Invoke({"verify", "--n", "5", "--k", "4"}).code == 2);
}

TEST_CASE("every json output parses and is the only stdout content") {
  const std::vector<std::vector<std::string>> commands = {
      {"lc", "--n", "3", "--seq", "10100000"},
      {"klc", "--n", "3", "--seq", "10100000", "--k", "1"},
      {"profile", "--n", "3", "--seq", "10100000", "--k", "3"},
      {"count", "--n", "6", "--L", "49"},
      {"table", "--n", "3"},
      {"spectrum", "--n", "3", "--k", "2", "--filter", "all"},
      {"verify", "--n", "2", "--k", "4"},
      {"sum-check", "--n", "3"},
      {"census", "--n", "4", "--weight", "8"},
      {"sample", "--n", "4", "--L", "11", "--seed", "3"},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = Invoke(args);
    CAPTURE(args[0]);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::accept(r.out));
  }
}

TEST_CASE("output file") {
  const auto path = TempFile("table.csv");
  const auto r = Invoke({"table", "--n", "3", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "L,count");
  std::filesystem::remove(path);
  CHECK(Invoke({"table", "--n", "3", "--out", "/nonexistent/dir/t.csv"}).code == 1);
}

TEST_CASE("thread count from the environment") {
  setenv("KELC_THREADS", "2", 1);
  CHECK(Invoke({"table", "--n", "4"}).code == 0);
  setenv("KELC_THREADS", "two", 1);
  CHECK(Invoke({"table", "--n", "4"}).code == 2);
  CHECK(Invoke({"table", "--n", "4", "--threads", "1"}).code == 0);
  unsetenv("KELC_THREADS");
}

TEST_CASE("census and spectrum text") {
  auto r = Invoke({"census", "--n", "4", "--weight", "8", "--format", "csv"});
  CHECK(r.out.find("\n5,16\n") != std::string::npos);
  r = Invoke({"spectrum", "--n", "2", "--k", "2", "--format", "csv"});
  CHECK(r.out == "L,count\n0,7\n1,1\n2,0\n3,0\n4,0\n");
  r = Invoke({"profile", "--n", "3", "--seq", "10100000", "--k", "2", "--format", "csv"});
  CHECK(r.out == "k,L\n0,6\n1,6\n2,0\n");
}
