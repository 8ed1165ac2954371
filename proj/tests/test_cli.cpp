#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int rc;
  std::string out;
};

Result run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " + QBSA_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus_file(const std::string& name) { return std::string(QBSA_CORPUS_DIR) + "/" + name + ".qbsa"; }
std::string invalid_file(const std::string& name) { return std::string(QBSA_INVALID_DIR) + "/" + name + ".qbsa"; }

}  // namespace

TEST_CASE("check succeeds on valid input") {
  const auto r = run("check " + corpus_file("commutative_square"));
  CHECK(r.rc == 0);
  CHECK(r.out.starts_with("ok"));
}

TEST_CASE("invalid input exits with 1") {
  CHECK(run("check " + invalid_file("three_out")).rc == 1);
  CHECK(run("check " + invalid_file("free_loop")).rc == 1);
  CHECK(run("check " + invalid_file("syntax")).rc == 1);
  CHECK(run("check /nonexistent.qbsa").rc == 1);
  CHECK(run("analyze --char 4 " + corpus_file("kronecker")).rc == 1);
  CHECK(run("analyze --format xml " + corpus_file("kronecker")).rc == 1);
  CHECK(run("frobnicate").rc == 1);
}

TEST_CASE("bound override") {
  CHECK(run("check " + corpus_file("a4_monomial"), "QBSA_BOUND=1").rc == 1);
  CHECK(run("check " + corpus_file("a4_monomial"), "QBSA_BOUND=2").rc == 0);
  CHECK(run("check " + corpus_file("a4_monomial"), "QBSA_BOUND=x").rc == 1);
}

TEST_CASE("analyze emits json by default") {
  const auto r = run("analyze " + corpus_file("two_loops"));
  REQUIRE(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["chi"] == 2);
  CHECK(j["pi1"]["hom_additive_dim"] == 1);
  const auto r2 = run("analyze --char 2 " + corpus_file("two_loops"));
  CHECK(nlohmann::json::parse(r2.out)["pi1"]["hom_additive_dim"] == 2);
}

TEST_CASE("text format") {
  const auto r = run("analyze --format text " + corpus_file("kronecker"));
  CHECK(r.rc == 0);
  CHECK_FALSE(r.out.starts_with("{"));
}

TEST_CASE("gamma, pi1 and bands subcommands") {
  const auto g = run("gamma --dot " + corpus_file("double_cycle_type3"));
  CHECK(g.rc == 0);
  CHECK(g.out.find("graph gamma") != std::string::npos);
  CHECK(run("gamma " + corpus_file("double_cycle_type3")).out.starts_with("2 vertices, 4 edges"));

  const auto p = run("pi1 " + corpus_file("two_loops"));
  CHECK(p.out == "<a, b | a a b^-1 b^-1>\nabelianization: free rank 1 + Z/2\n");

  CHECK(run("bands " + corpus_file("kronecker")).out == "band: a b^-1\nrepresentation-infinite\n");
  CHECK(run("bands " + corpus_file("ladder_2x4")).out == "no band\nrepresentation-finite\n");
}

TEST_CASE("corpus subcommand") {
  CHECK(run(std::string("corpus ") + QBSA_CORPUS_DIR).rc == 0);
  const auto bad = run(std::string("corpus ") + QBSA_INVALID_DIR);
  CHECK(bad.rc == 1);
  CHECK(bad.out.find("invalid ") != std::string::npos);
}
