#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "modchar/rep_io.hpp"

using namespace modchar;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("modchar-test-" + std::to_string(std::rand()) + "-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("basis") {
  CHECK(run({"basis", "--p", "3", "--r", "1", "--max-degree", "4"}).out == "0: 1\n3: xy\n4: y²\n");
  CHECK(run({"basis", "--p", "2", "--r", "1", "--max-degree", "2"}).out == "0: 1\n1: y\n2: y²\n");
  const Result q4 = run({"basis", "--p", "2", "--r", "2", "--max-degree", "3"});
  CHECK(q4.out.find("2: y₀y₁\n") != std::string::npos);
  const Result csv = run({"basis", "--p", "3", "--max-degree", "4", "--format", "csv"});
  CHECK(csv.out == "degree,monomial\n0,1\n3,x y\n4,y^2\n");
}

TEST_CASE("chi") {
  CHECK(run({"chi", "--p", "2", "--n", "2", "--alpha", "y^3"}).out == "y⊗y² + y²⊗y\n");
  CHECK(run({"chi", "--p", "3", "--n", "1", "--alpha", "x y"}).out == "xy\n");
  CHECK(run({"chi", "--p", "2", "--n", "2", "--alpha", "y^2"}).out == "0\n");
  const Result bad = run({"chi", "--p", "3", "--n", "2", "--alpha", "y"});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("not invariant") != std::string::npos);
  const Result parse = run({"chi", "--p", "3", "--n", "2", "--alpha", "y^"});
  CHECK(parse.code == cli::kInputError);
  CHECK(parse.err.find("position") != std::string::npos);
  const Json j = Json::parse(run({"--format", "json", "chi", "--p", "2", "--n", "2", "--alpha", "y^3"}).out);
  CHECK(j["schema"] == "modchar/1");
  CHECK(j["class"]["terms"].size() == 2);
}

TEST_CASE("nonvanish") {
  const Result r = run({"nonvanish", "--p", "3", "--r", "1", "--n", "2", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "N,alpha,degree,status");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK((line.find(",11,nonzero") != std::string::npos || line.find(",16,non-nilpotent") != std::string::npos));
  }
  CHECK(rows == 16);
  const Json j = Json::parse(run({"nonvanish", "--p", "2", "--n", "2", "--format", "json"}).out);
  CHECK(j["columns"] == Json::parse(R"(["N","alpha","degree","status"])"));
  CHECK(j["rows"].size() == 3);
}

TEST_CASE("dickson") {
  const Result r = run({"dickson", "--p", "2", "--n", "2", "--dmax", "9"});
  CHECK(r.code == 0);
  CHECK(r.out == "newton: ok, inverse: ok, products: sign=+1 (i=0,1,2)\n");
  CHECK(run({"dickson", "--p", "3", "--n", "2", "--dmax", "4"}).code == cli::kUsageError);
  const Json j = Json::parse(run({"dickson", "--p", "3", "--n", "2", "--format", "json"}).out);
  CHECK(j["ok"] == true);
  CHECK(j["dmax"] == 24);
  CHECK(j["independence"]["independent"] == true);
  CHECK(j["products"].size() == 3);
}

TEST_CASE("tuples") {
  const Result r = run({"tuples", "--p", "2", "--n", "2", "--max", "7"});
  CHECK(r.out.rfind("(1,2) degree 3\n(1,4) degree 5\n(2,4) degree 6\n", 0) == 0);
  CHECK(r.out.find("(3,4) degree 7") != std::string::npos);
  CHECK(run({"tuples", "--p", "3", "--n", "2", "--max", "10"}).out.find("(2,6) degree 16") != std::string::npos);
}

TEST_CASE("rep") {
  TempDir dir;
  const auto reg = dir.write("regular.json", to_json(regular_rep(2, 2)).dump());
  const Result r = run({"rep", reg, "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("J dims 1,3,4; Reduced rank 2; chi[y^3] = z1^2 z2 + z1 z2^2\n", 0) == 0);

  const auto ds = dir.write("sum.json", to_json(direct_sum(basic_rep(2, 1, 1).rep, basic_rep(2, 1, 1).rep)).dump());
  CHECK(run({"rep", ds}).out.find("Zero (dim J₀ = 2)") != std::string::npos);

  const auto bad = dir.write("bad.json", R"({"p":3,"dim":2,"generators":[[[1,1],[0,1]],[[0,1],[1,0]]]})");
  const Result v = run({"rep", bad});
  CHECK(v.code == cli::kInputError);
  CHECK(v.err.find("generators[1]") != std::string::npos);

  const auto malformed = dir.write("malformed.json", R"({"p":3,"dim":2,"generators":[[[1,1],[0]]]})");
  const Result m = run({"rep", malformed});
  CHECK(m.code == cli::kInputError);
  CHECK(m.err.find("generators[0][1]") != std::string::npos);

  const auto ext = dir.write("ext.json", to_json(basic_rep(2, 2, 1).rep).dump());
  CHECK(run({"rep", ext}).code == 0);
  CHECK(run({"rep", ext, "--k", "3"}).code == cli::kInputError);
  CHECK(run({"rep", (dir.path / "missing.json").string()}).code == cli::kInputError);

  const Json j = Json::parse(run({"--format", "json", "rep", reg, "--k", "3,5"}).out);
  CHECK(j["verdict"] == "Reduced");
  CHECK(j["chi"].size() == 2);
}

TEST_CASE("usage errors and version") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"basis"}).code == cli::kUsageError);
  CHECK(run({"basis", "--p", "4"}).code == cli::kUsageError);
  CHECK(run({"basis", "--p", "3", "--format", "xml"}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"verify", "--profile", "slow"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"--version"}).out == std::string(cli::kVersion) + "\n");
}

TEST_CASE("output is deterministic and the cache preserves it") {
  TempDir dir;
  const std::vector<std::string> args = {"--format", "json", "dickson", "--p", "3", "--n", "2"};
  const Result fresh = run(args);
  CHECK(run(args).out == fresh.out);

  std::vector<std::string> cached = args;
  cached.insert(cached.begin(), {"--cache-dir", dir.path.string()});
  const Result first = run(cached);
  CHECK(first.out == fresh.out);
  CHECK(std::distance(fs::directory_iterator(dir.path), fs::directory_iterator{}) == 1);
  const Result second = run(cached);
  CHECK(second.out == fresh.out);
  CHECK(second.code == fresh.code);

  TempDir env_dir;
  ::setenv("MODCHAR_CACHE", env_dir.path.c_str(), 1);
  CHECK(run(cached).out == fresh.out);
  ::unsetenv("MODCHAR_CACHE");
  CHECK(std::distance(fs::directory_iterator(env_dir.path), fs::directory_iterator{}) == 1);
}

TEST_CASE("fnv1a") {
  CHECK(cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
