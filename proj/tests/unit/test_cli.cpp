// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

const std::string data = ET_DATA_DIR;

// Runs the CLI with stderr dropped or folded into stdout.
Run cli(const std::string& args, bool withStderr = false) {
  std::string cmd = std::string("\"") + ET_CLI_PATH + "\" " + args + (withStderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("successful commands exit zero and repeat byte for byte") {
  const char* commands[] = {
      "chi --betti 1,0,0,1",
      "--format structured chi --betti 1,2,1 --max-j 3",
      "chi --betti 1,1 --alt --max-j 2",
      "complex data/times-two.cx",
      "complex data/koszul-cohomological.cx --canonical",
      "simplicial data/torus7.facets",
      "--format structured simplicial data/octahedron.facets",
      "space 'S(3) * T(2)' --torus-order --kervaire 5",
      "sym --betti 1,0,1 --order 4 --verify-euler",
      "k0 data/tensor.k0 --rank g=1,h=2",
      "adams --n 4 --k 6",
      "motivic 'P(1) * C(2)' --measure hodge",
      "motivic 'P(2) - Gm' --measure count",
      "fincat data/two-object-pole.mat --order 2",
      "selfcheck",
  };
  for (const char* c : commands) {
    std::string args = c;
    std::size_t at = args.find("data/");
    if (at != std::string::npos) args.replace(at, 5, data + "/");
    CAPTURE(args);
    auto first = cli(args), second = cli(args);
    CHECK(first.code == 0);
    CHECK(!first.out.empty());
    CHECK(first.out == second.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(cli("").code == 1);
  CHECK(cli("chi").code == 1);
  CHECK(cli("chi --betti 1,x").code == 1);
  CHECK(cli("frobnicate").code == 1);
  CHECK(cli("motivic 'C(1)' --measure count").code == 1);
  CHECK(cli("motivic 'pt' --measure volume").code == 1);
  CHECK(cli("complex /nonexistent/file.cx").code == 1);
  CHECK(cli("space 'S(2) * X(1)'").code == 1);
  CHECK(cli("selfcheck --inject-fault").code == 2);
}

TEST_CASE("errors go to stderr only") {
  auto r = cli("space 'S(2) * X(1)'");
  CHECK(r.out.empty());
  auto e = cli("space 'S(2) * X(1)'", true);
  CHECK(e.out == "euler-tower: position 7: unknown space 'X'\n");
  auto f = cli("selfcheck --inject-fault");
  CHECK(f.out.empty());
}

TEST_CASE("canonical output round trips") {
  auto once = cli("fincat " + data + "/two-object-pole.mat --order 0 --canonical");
  CHECK(once.code == 0);
  CHECK(once.out == "2\n2 1\n4 2\n");
  auto facets = cli("simplicial " + data + "/hollow-triangle.facets --canonical");
  CHECK(facets.code == 0);
  CHECK(!facets.out.empty());
}
