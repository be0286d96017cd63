// Copyright 2026 The rba Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(RBA_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, Eval) {
  auto r = cli("eval 'lsh([a];[b])'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(a|b) + (b|a) - (a*b|1)\n");
  r = cli("eval 'P([a,b]) - [1,a,b]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0\n");
  r = cli("eval --gens a1,b1,b2 --product qsh --theta 2 'qsh([a1];[b1,b2])'");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "2*(a1*b1|b2)")) << r.out;
}

TEST(Cli, Diagnostics) {
  auto r = cli("eval 'qsh([a];[b,c]'");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "E_PARSE")) << r.out;
  EXPECT_TRUE(contains(r.out, "1:14")) << r.out;
  r = cli("eval 'eps(delta)'");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "E_TYPE")) << r.out;
  r = cli("eval '[zz]'");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "E_UNDECLARED")) << r.out;
  r = cli("check nonsense");
  EXPECT_NE(r.status, 0);
}

TEST(Cli, JsonOutput) {
  auto r = cli("eval --format json 'rsh([a];[b])'");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.is_object());
  r = cli("check td --product lsh --format json --cases 20");
  ASSERT_EQ(r.status, 0) << r.out;
  auto k = nlohmann::json::parse(r.out);
  EXPECT_TRUE(contains(k.dump(), "\"pass\":true"));
}

TEST(Cli, CheckExitCodes) {
  auto r = cli("check td --product lsh");
  EXPECT_EQ(r.status, 0) << r.out;
  r = cli("check rb --product rsh --theta 1");
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_TRUE(contains(r.out, "FAIL")) << r.out;
  EXPECT_TRUE(contains(r.out, "counterexample")) << r.out;
  r = cli("check differential");
  EXPECT_EQ(r.status, 0) << r.out;
}

TEST(Cli, Deterministic) {
  auto a = cli("check nijenhuis --seed 7 --cases 30 --format json");
  auto b = cli("check nijenhuis --seed 7 --cases 30 --format json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OtherCommands) {
  auto r = cli("spitzer --theta 1/3");
  EXPECT_EQ(r.status, 0) << r.out;
  r = cli("primitives --case 2 --gens a --max-len 2");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "(a)")) << r.out;
  r = cli("decompose '[a*b, c, a]'");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "prec(dot([a]; [b]); prec([c]; [a]))")) << r.out;
}
