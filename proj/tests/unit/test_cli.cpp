#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CLUSEL_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("clusel_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string blobs_csv() {
  std::string s;
  for (int i = 0; i < 40; ++i) {
    const double j = (i % 7) * 0.01;
    s += std::to_string(i < 20 ? 0.1 + j : 0.9 - j) + "," + std::to_string((i % 5) * 0.013) + "\n";
  }
  return s;
}

}  // namespace

TEST_CASE("profile output is deterministic") {
  const auto data = write("blobs.csv", blobs_csv());
  const auto a = run("--format json --seed 3 profile " + data.string());
  const auto b = run("--format json --seed 3 profile " + data.string());
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "profile");
}

TEST_CASE("exit codes") {
  const auto data = write("blobs2.csv", blobs_csv());
  CHECK(run("profile " + data.string() + " --convexity").status == 1);
  CHECK(run("profile").status == 1);
  CHECK(run("no-such-command").status == 1);
  CHECK(run("profile " + write("bad.csv", "1,2\n3,oops\n").string()).status == 2);
  CHECK(run("recommend --filter colour=red").status == 1);
  CHECK(run("recommend --k-known --convex yes").status == 1);
  CHECK(run("--kb " + write("kb.json", "{}").string() + " recommend --filter scalability=high")
            .status == 2);
}

TEST_CASE("validate with one cluster reports undefined indices") {
  const auto data = write("v.csv", "0,0\n1,1\n2,2\n");
  const auto labels = write("v.lbl", "0\n0\n0\n");
  const auto r = run("--format json validate " + data.string() + " " + labels.string());
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  std::size_t seen = 0;
  for (const auto& s : j["scores"]) {
    CHECK(s["value"].is_null());
    ++seen;
  }
  CHECK(seen == 5);
  CHECK(run("validate " + data.string() + " " + write("short.lbl", "0\n").string()).status == 2);
}

TEST_CASE("reproduce table1") {
  const auto r = run("--format json reproduce table1");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["rows"].size() == 7);
  CHECK(j["checks"].size() == 5);
}

TEST_CASE("recommend narrated path") {
  const auto r = run("--format json recommend --k-known --convex yes --size small");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.dump().find("k-means") != std::string::npos);
  CHECK(j.dump().find("PAM") != std::string::npos);
}

TEST_CASE("export-kb matches the bundled file") {
  const auto out = scratch() / "kb_out.json";
  const auto fx = scratch() / "fx.json";
  REQUIRE(run("export-kb " + out.string() + " --parity-fixtures " + fx.string()).status == 0);
  std::ifstream a(out), b(CLUSEL_SEED_KB);
  const std::string sa((std::istreambuf_iterator<char>(a)), {});
  const std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
  std::ifstream f(fx);
  const auto j = json::parse(f);
  CHECK(j["filters"].size() == 20);
}
