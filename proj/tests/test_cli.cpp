#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bptk/cli.hpp"

namespace {

struct Ran {
  int code;
  std::string out;
  std::string err;
};

Ran run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = bptk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "bptk_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

void check_replay(const Ran& first) {
  const auto path = write("record.json", first.out);
  const auto again = run({"--config", path});
  CHECK(again.code == first.code);
  CHECK(again.out == first.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generators print files") {
    const auto p = run({"present", "gen", "--n", "1"});
    CHECK(p.code == 0);
    CHECK(p.out == "gens: x t\nrel: txTxtXTXX\nrel: T\n");
    const auto t = run({"tri", "gen", "boundary", "--dim", "2"});
    CHECK(t.code == 0);
    CHECK(t.out == "dim 2\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    CHECK(run({"tower", "eval", "--m", "4", "--format", "text"}).out == "65536\n");
  }

  TEST_CASE("records echo their config and replay byte for byte") {
    const auto s2 = write("s2.tri", run({"tri", "gen", "boundary", "--dim", "2"}).out);
    const std::vector<std::vector<std::string>> commands{
        {"present", "verify-trivial", "--n", "1"},
        {"present", "ac-search", "--n", "1"},
        {"present", "power-check", "--m", "1"},
        {"dehn", "probe", "--word", "txTxtXTXX"},
        {"fill", "length", "--n", "1", "--loop", "t"},
        {"fill", "growth", "--n-list", "1", "--max-len", "8"},
        {"tri", "walk", s2, "--steps", "20", "--seed", "9"},
        {"tri", "bfs", s2, s2},
        {"tri", "validate", s2, "--level", "links"},
        {"tower", "cmp", "E4", "65536"},
    };
    for (const auto& c : commands) {
      CAPTURE(c[0] + " " + c[1]);
      const auto r = run(c);
      CHECK(r.code == 0);
      const auto j = nlohmann::json::parse(r.out);
      CHECK(j["config"]["command"] == c[0] + " " + c[1]);
      CHECK(j["config"]["caps"].size() == 5);
      CHECK(j.contains("result"));
      check_replay(r);
    }
  }

  TEST_CASE("exit codes") {
    CHECK(run({"dehn", "probe", "--wn", "4", "--max-len", "20", "--max-states", "1000"}).code == 2);
    CHECK(run({"dehn", "probe", "--word", "xq"}).code == 1);
    CHECK(run({"present", "gen", "--n", "0"}).code == 1);
    CHECK(run({"present", "gen"}).code == 1);
    CHECK(run({"fill", "length", "--n", "1", "--loop", "x", "--max-len", "4"}).code == 2);
    CHECK(run({"tri", "validate", "/nonexistent/file.tri"}).code == 1);
    CHECK(run({"tri", "apply", write("s.tri", "dim 2\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"), "--move", "0 1 -> 2 3"}).code == 1);
    CHECK(run({"tri", "validate", write("bad.tri", "dim 2\n0 1 2\n0 1 3\n")}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"present", "verify-trivial", "--n", "1", "--max-states", "0"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("environment overrides default caps and flags override both") {
    setenv("BPTK_MAX_LEN", "20", 1);
    const auto env = nlohmann::json::parse(run({"dehn", "probe", "--word", "1"}).out);
    CHECK(env["config"]["caps"]["max_len"] == 20);
    const auto flag = nlohmann::json::parse(run({"dehn", "probe", "--word", "1", "--max-len", "30"}).out);
    CHECK(flag["config"]["caps"]["max_len"] == 30);
    setenv("BPTK_MAX_LEN", "-3", 1);
    CHECK(run({"dehn", "probe", "--word", "1"}).code == 1);
    unsetenv("BPTK_MAX_LEN");
  }

  TEST_CASE("results do not depend on the thread count") {
    const auto one = nlohmann::json::parse(run({"present", "power-check", "--m", "2", "--max-len", "25"}).out);
    const auto two = nlohmann::json::parse(run({"present", "power-check", "--m", "2", "--max-len", "25", "--threads", "2"}).out);
    CHECK(one["result"] == two["result"]);
    CHECK(one["result"]["applications"] == 5);
  }

  TEST_CASE("csv output") {
    const auto r = run({"fill", "growth", "--n-list", "1", "--format", "csv", "--max-len", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,generator,fl_or_bound,states,capped\n", 0) == 0);
    CHECK(run({"tower", "eval", "--m", "3", "--format", "csv"}).code == 1);
  }
}
