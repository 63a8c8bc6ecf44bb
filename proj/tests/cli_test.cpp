#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(ZZLOCAL_TEST_DATA) + "/" + name; }

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + std::string(ZZLOCAL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json points(const Run& r) { return json::parse(r.out).at("points"); }

TEST(Cli, DiagramOfPath) {
  const auto r = run("diagram " + data("path3.json") + " vertex:a");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(points(r), json::parse(R"([{"birth":"0","death":"3","dim":0}])"));
  const auto restricted = run("diagram " + data("path3.json") + " vertex:a --interval 0:2");
  ASSERT_EQ(restricted.code, 0);
  EXPECT_EQ(points(restricted), json::parse(R"([{"birth":"0","death":"2","dim":0}])"));
}

TEST(Cli, DiagramOfLoopFromInteriorPoint) {
  const auto r = run("diagram " + data("loop10.json") + " edge:0@5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(points(r), json::parse(R"([{"birth":"0","death":"5","dim":0},{"birth":"0","death":"5","dim":1}])"));
}

TEST(Cli, InvalidInputExitsWithTwo) {
  EXPECT_EQ(run("diagram " + data("malformed.json") + " vertex:a").code, 2);
  EXPECT_EQ(run("diagram " + data("missing.json") + " vertex:a").code, 2);
  EXPECT_EQ(run("diagram " + data("path3.json") + " vertex:z").code, 2);
  EXPECT_EQ(run("diagram " + data("path3.json") + " vertex:a --interval 3:1").code, 2);
  EXPECT_EQ(run("bottleneck " + data("path3.json") + " " + data("diagram_a.json")).code, 2);
  EXPECT_EQ(run("distortion " + data("path3.json") + " " + data("path5.json") + " --radius x").code, 2);
}

TEST(Cli, UsageErrorsExitWithOne) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("diagram " + data("path3.json")).code, 1);
  EXPECT_EQ(run("bottleneck " + data("diagram_a.json")).code, 1);
  EXPECT_EQ(run("match-distance a b --grid 0").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Bottleneck) {
  EXPECT_EQ(run("bottleneck " + data("diagram_a.json") + " " + data("diagram_a.json")).out, "0\n");
  EXPECT_EQ(run("bottleneck " + data("diagram_a.json") + " " + data("diagram_b.json")).out, "2\n");
  EXPECT_EQ(run("bottleneck " + data("diagram_essential.json") + " " + data("diagram_empty.json")).out, "inf\n");
}

TEST(Cli, Restrict) {
  const auto r = run("restrict " + data("diagram_essential.json") + " --interval 1:3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(points(r), json::parse(R"([{"birth":"1","death":"3","dim":0}])"));
}

TEST(Cli, Distortion) {
  const auto same = run("distortion " + data("path3.json") + " " + data("path3.json"));
  ASSERT_EQ(same.code, 0);
  EXPECT_EQ(json::parse(same.out).at("d_pd"), "0");
  const auto r = run("distortion " + data("path3.json") + " " + data("path5.json") + " --samples 0");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("d_pd"), "2");
  EXPECT_EQ(j.at("epsilon"), "5");
  EXPECT_EQ(j.at("samples_per_edge"), 0);
  EXPECT_TRUE(j.at("radius").is_null());
  const auto zero = run("distortion " + data("path3.json") + " " + data("loop10.json") + " --radius 0");
  EXPECT_EQ(json::parse(zero.out).at("d_pd"), "0");
  EXPECT_EQ(json::parse(zero.out).at("radius"), "0");
}

TEST(Cli, MatchDistance) {
  const auto r = run("match-distance " + data("vertex_origin.json") + " " + data("vertex_one.json"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("matching_distance"), "1");
  EXPECT_EQ(j.at("bound"), "lower");
  EXPECT_EQ(j.at("lines"), 256);
  const auto boxed = run("match-distance " + data("vertex_origin.json") + " " + data("vertex_one.json") +
                         " --box 5:6,5:6 --grid 4");
  ASSERT_EQ(boxed.code, 0);
  EXPECT_EQ(json::parse(boxed.out).at("restricted_matching_distance"), "0");
  EXPECT_EQ(run("match-distance " + data("vertex_origin.json") + " " + data("vertex_one.json") + " --box 1:0,0:1")
                .code,
            2);
}

TEST(Cli, Zigzags) {
  const auto z = run("zigzag " + data("v_shape.json"));
  ASSERT_EQ(z.code, 0);
  EXPECT_EQ(json::parse(z.out).at("intervals"), json::parse(R"([{"birth":1,"death":3}])"));
  const auto u = run("union-zigzag " + data("snapshots.json"));
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(json::parse(u.out).at("intervals"), json::parse(R"([{"birth":1,"death":3}])"));
  EXPECT_EQ(json::parse(u.out).at("dims"), json::parse("[1,1,1]"));
  EXPECT_TRUE(json::parse(run("union-zigzag " + data("snapshots.json") + " --dim 1").out).at("intervals").empty());
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string args : {"distortion " + data("path3.json") + " " + data("loop10.json") + " --samples 3",
                                 "match-distance " + data("vertex_origin.json") + " " + data("vertex_one.json") +
                                     " --box 0:1,0:1"}) {
    const auto first = run(args);
    ASSERT_EQ(first.code, 0);
    EXPECT_EQ(run(args).out, first.out);
    EXPECT_EQ(run(args, "ZZLOCAL_THREADS=1 ").out, first.out);
    EXPECT_EQ(run(args, "ZZLOCAL_THREADS=3 ").out, first.out);
  }
}

}  // namespace
