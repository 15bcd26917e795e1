#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "cli.hpp"
#include "lfw/generators.hpp"
#include "lfw/graph.hpp"

namespace fs = std::filesystem;
using lfw::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("lfw_cli_" + std::to_string(::getpid()) + "_" + std::to_string(next_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int next_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "";
}

}  // namespace

TEST_CASE("factor command and witness round trip") {
  TempDir dir;
  const auto k4 = dir.write("k4.txt", lfw::to_edge_list(lfw::complete_graph(4)));
  const auto wit = dir.file("k4.wit");
  const auto r = call({"--no-timing", "factor", "--spec", "pair", "--aminus", "1", "--aplus", "2", "--in", k4,
                       "--witness-out", wit});
  REQUIRE(r.code == 0);
  CHECK(field(r.out, "verdict") == "found");
  CHECK(field(r.out, "verify.degrees_in_lists") == "pass");
  CHECK(r.out.rfind("lfw-report v1\n", 0) == 0);
  CHECK(field(r.out, "timing_us").empty());

  const auto again = call({"--no-timing", "factor", "--spec", "pair", "--aminus", "1", "--aplus", "2", "--in", k4,
                           "--witness-out", wit});
  CHECK(again.out == r.out);

  const auto chk = call({"--no-timing", "check", "--witness", wit, "--pred", "factor"});
  CHECK(chk.code == 0);
  CHECK(field(chk.out, "verdict") == "verified");
  CHECK(field(chk.out, "check.byte_identical") == "yes");

  CHECK(call({"check", "--witness", wit, "--pred", "vc"}).code == 2);

  // vertex 0 has degree 3 in K4, so a factor can never reach 7
  std::string text = slurp(wit);
  const auto pos = text.find("list 0 ");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, text.find('\n', pos) - pos, "list 0 7");
  const auto bad = dir.write("bad.wit", text);
  const auto rej = call({"--no-timing", "check", "--witness", bad, "--pred", "factor"});
  CHECK(rej.code == 1);
  CHECK(field(rej.out, "verdict") == "rejected");
  CHECK(rej.out.find("witness.begin") == std::string::npos);
}

TEST_CASE("weight command exit codes") {
  TempDir dir;
  const auto k4 = dir.write("k4.txt", lfw::to_edge_list(lfw::complete_graph(4)));
  const auto c6 = dir.write("c6.txt", lfw::to_edge_list(lfw::cycle_graph(6)));
  const auto k2 = dir.write("k2.txt", "n 2\n0 1\n");

  const auto g4 = call({"weight", "--group", "4", "--in", k4});
  CHECK(g4.code == 0);
  CHECK(field(g4.out, "verify.vertex_coloring") == "pass");
  CHECK_FALSE(field(g4.out, "timing_us").empty());

  const auto g2 = call({"weight", "--group", "2", "--in", c6});
  CHECK(g2.code == 1);
  CHECK(field(g2.out, "verdict") == "obstructed");

  CHECK(call({"weight", "--vc2", "--in", c6}).code == 1);
  CHECK(call({"weight", "--group", "3", "--in", k2}).code == 2);
  CHECK(call({"weight", "--avd2", "--in", k4}).code == 2);
  CHECK(call({"weight", "--group", "3", "--vc2", "--in", k4}).code == 2);

  const auto wit = dir.file("c4.wit");
  const auto c4 = dir.write("c4.txt", lfw::to_edge_list(lfw::cycle_graph(4)));
  REQUIRE(call({"weight", "--vc2", "--in", c4, "--witness-out", wit}).code == 0);
  const auto chk = call({"check", "--witness", wit, "--pred", "vc"});
  CHECK(chk.code == 0);
  CHECK(field(chk.out, "check.byte_identical") == "yes");
}

TEST_CASE("oracle and input errors") {
  TempDir dir;
  const auto c6 = dir.write("c6.txt", lfw::to_edge_list(lfw::cycle_graph(6)));
  const auto none = call({"oracle", "--k", "2", "--pred", "vc", "--in", c6});
  CHECK(none.code == 1);
  CHECK(field(none.out, "oracle.count") == "0");
  const auto some = call({"oracle", "--k", "3", "--pred", "vc", "--in", c6});
  CHECK(some.code == 0);
  CHECK(call({"oracle", "--k", "3", "--pred", "vc", "--budget", "10", "--in", c6}).code == 4);

  const auto lists = dir.write("lists.txt", "0 1\n1 1\n2 1\n3 1\n4 1\n5 1\n");
  const auto lf = call({"oracle", "--lfactor", "generic", "--lists", lists, "--in", c6});
  CHECK(lf.code == 0);
  CHECK(field(lf.out, "oracle.count") == "2");

  const auto junk = dir.write("junk.txt", "0 1 2\n");
  CHECK(call({"weight", "--group", "3", "--in", junk}).code == 2);
  CHECK(call({"weight", "--group", "3", "--in", dir.file("missing.txt")}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check", "--witness", junk, "--pred", "vc"}).code == 2);
}

TEST_CASE("gen output parses back") {
  const auto e = call({"gen", "petersen"});
  REQUIRE(e.code == 0);
  CHECK(lfw::read_graph(e.out) == lfw::petersen_graph());
  const auto g6 = call({"gen", "random", "--n", "9", "--p", "0.4", "--seed", "5", "--format", "graph6"});
  REQUIRE(g6.code == 0);
  const auto g6b = call({"gen", "random", "--n", "9", "--p", "0.4", "--seed", "5", "--format", "graph6"});
  CHECK(g6.out == g6b.out);
  CHECK(lfw::read_graph(g6.out).order() == 9);
}
