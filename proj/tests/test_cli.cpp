#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sct/cli.hpp"

namespace fs = std::filesystem;
using namespace sct;

namespace {

int run(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = dispatch(std::move(args), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("sct-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_partition(const std::string& path, const Partition& p) {
  std::ofstream f(path);
  f << partition_to_json(p).dump();
}

}  // namespace

TEST_CASE("enumerate prints every theory") {
  std::string out;
  REQUIRE(run({"enumerate", "--n", "6"}, &out) == 0);
  CHECK(out.rfind("n=6 count=7\n", 0) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') == 8);

  REQUIRE(run({"enumerate", "--n", "6", "--format", "json"}, &out) == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["n"] == 6);
  CHECK(j["count"] == 7);
  REQUIRE(j["theories"].size() == 7);
  for (const auto& blocks : j["theories"]) {
    nlohmann::json one;
    one["n"] = 6;
    one["blocks"] = blocks;
    CHECK(is_theory(partition_from_json(one)));
  }
}

TEST_CASE("exit codes") {
  std::string err;
  CHECK(run({"enumerate", "--n", "0"}, nullptr, &err) == 64);
  CHECK(run({"enumerate", "--n", "65"}, nullptr, &err) == 2);
  CHECK(run({"enumerate"}, nullptr, &err) == 64);
  CHECK(run({"no-such-command"}, nullptr, &err) == 64);
  CHECK(run({}, nullptr, &err) == 64);
  CHECK(run({"check", "--n", "6", "--property", "median"}, nullptr, &err) ==
        64);

  std::string out;
  CHECK(run({"--help"}, &out) == 0);
  CHECK(out.find("enumerate") != std::string::npos);
}

TEST_CASE("construct subcommands") {
  std::string out;
  REQUIRE(run({"construct", "--n", "7", "inversion"}, &out) == 0);
  CHECK(partition_from_json(nlohmann::json::parse(out)) ==
        inversion_theory(7).superclasses);

  REQUIRE(run({"construct", "--n", "12", "aut", "--gens", "5"}, &out) == 0);
  auto p = partition_from_json(nlohmann::json::parse(out));
  CHECK(p == canonical_partition(12, {{0},
                                      {1, 5},
                                      {2, 10},
                                      {3},
                                      {4, 8},
                                      {6},
                                      {7, 11},
                                      {9}}));

  REQUIRE(run({"construct", "--n", "9", "min"}, &out) == 0);
  CHECK(partition_from_json(nlohmann::json::parse(out)).block_count() == 9);
  REQUIRE(run({"construct", "--n", "9", "max"}, &out) == 0);
  CHECK(partition_from_json(nlohmann::json::parse(out)).block_count() == 2);

  CHECK(run({"construct", "--n", "12", "aut", "--gens", "4"}) == 64);
}

TEST_CASE("construct star and direct read component files") {
  TempDir tmp;
  std::string out;

  write_partition(tmp.file("inner.json"), min_theory(2).superclasses);
  write_partition(tmp.file("outer.json"), max_theory(3).superclasses);
  REQUIRE(run({"construct", "--n", "6", "star", "--subgroup", "2", "--inner",
               tmp.file("inner.json"), "--outer", tmp.file("outer.json")},
              &out) == 0);
  CHECK(partition_from_json(nlohmann::json::parse(out)) ==
        canonical_partition(6, {{0}, {3}, {1, 2, 4, 5}}));

  // component sized for the wrong group
  write_partition(tmp.file("bad.json"), min_theory(3).superclasses);
  CHECK(run({"construct", "--n", "6", "star", "--subgroup", "2", "--inner",
             tmp.file("bad.json"), "--outer", tmp.file("outer.json")}) == 64);

  // component partition that is not a theory
  write_partition(tmp.file("invalid.json"),
                  canonical_partition(4, {{0}, {1}, {2, 3}}));
  CHECK(run({"construct", "--n", "4", "star", "--subgroup", "2", "--inner",
             tmp.file("a.json"), "--outer", tmp.file("invalid.json")}) == 64);

  write_partition(tmp.file("a.json"), min_theory(2).superclasses);
  write_partition(tmp.file("b.json"), max_theory(3).superclasses);
  REQUIRE(run({"construct", "--n", "6", "direct", "--a", tmp.file("a.json"),
               "--b", tmp.file("b.json")},
              &out) == 0);
  CHECK(partition_from_json(nlohmann::json::parse(out)) ==
        canonical_partition(6, {{0}, {2, 4}, {3}, {1, 5}}));

  write_partition(tmp.file("b2.json"), max_theory(2).superclasses);
  CHECK(run({"construct", "--n", "4", "direct", "--a", tmp.file("a.json"),
             "--b", tmp.file("b2.json")}) == 64);

  CHECK(run({"construct", "--n", "6", "star", "--subgroup", "4", "--inner",
             tmp.file("inner.json"), "--outer", tmp.file("outer.json")}) ==
        64);
}

TEST_CASE("check prints a witness when the property fails") {
  std::string out;
  REQUIRE(run({"check", "--n", "5", "--property", "usm"}, &out) == 0);
  CHECK(out == "true\n");

  REQUIRE(run({"check", "--n", "8", "--property", "usm"}, &out) == 0);
  CHECK(out.rfind("false\n", 0) == 0);
  CHECK(out.find("witness a: {0}") != std::string::npos);
  CHECK(out.find("witness b: {0}") != std::string::npos);

  REQUIRE(run({"check", "--n", "8", "--property", "lsm"}, &out) == 0);
  CHECK(out.rfind("false\n", 0) == 0);

  REQUIRE(run({"check", "--n", "4", "--property", "modular"}, &out) == 0);
  CHECK(out == "true\n");
}

TEST_CASE("hasse writes DOT output") {
  TempDir tmp;
  std::string out;
  REQUIRE(run({"hasse", "--n", "6", "--dot", tmp.file("h.dot")}, &out) == 0);
  CHECK(out.rfind("nodes=7 covers=", 0) == 0);

  std::ifstream f(tmp.file("h.dot"));
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str().find("digraph") != std::string::npos);
}

TEST_CASE("verify-paper writes a report and succeeds at small orders") {
  TempDir tmp;
  std::string out;
  REQUIRE(run({"verify-paper", "--max-n", "6", "--report",
               tmp.file("report.json")},
              &out) == 0);
  CHECK(out.find("claims:") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);

  std::ifstream f(tmp.file("report.json"));
  nlohmann::json j;
  f >> j;
  CHECK(j["max_n"] == 6);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"] == j["claims"].size());

  CHECK(run({"verify-paper", "--max-n", "5"}) == 64);
}

TEST_CASE("enumeration cache round trip") {
  TempDir tmp;
  std::string first, second;
  REQUIRE(run({"enumerate", "--n", "6", "--cache", tmp.path.string()},
              &first) == 0);
  CHECK(fs::exists(tmp.path / "sup-6.json"));
  REQUIRE(run({"enumerate", "--n", "6", "--cache", tmp.path.string()},
              &second) == 0);
  CHECK(first == second);

  // environment variable supplies the default cache directory
  TempDir env_dir;
  ::setenv("SCT_CACHE", env_dir.path.string().c_str(), 1);
  std::string out;
  REQUIRE(run({"enumerate", "--n", "5"}, &out) == 0);
  ::unsetenv("SCT_CACHE");
  CHECK(fs::exists(env_dir.path / "sup-5.json"));
  CHECK(out.rfind("n=5 count=3\n", 0) == 0);

  // corrupted cache entries are re-derived, not trusted
  std::ofstream bad(tmp.path / "sup-8.json");
  bad << "{\"version\": \"nope\"}";
  bad.close();
  REQUIRE(run({"enumerate", "--n", "8", "--cache", tmp.path.string()},
              &out) == 0);
  CHECK(out.rfind("n=8 count=10\n", 0) == 0);
}
