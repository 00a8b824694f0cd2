#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "oracles.hpp"
#include "snarkflow/families.hpp"
#include "snarkflow/graph_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SNARKFLOW_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "snarkflow_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, GenGoldbergGraph6) {
  auto r = run("gen --family goldberg --k 1");
  ASSERT_EQ(r.code, 0);
  const auto g = snarkflow::parse_graph6(snarkflow::detail::trim_line(r.out));
  EXPECT_EQ(g.n(), 24);
  EXPECT_EQ(oracle::graph6(g) + "\n", r.out);
}

TEST(Cli, GenReducedIsJsonWithHub) {
  auto r = run("gen --family reduced-goldberg --k 2");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 36);
  EXPECT_EQ(j["labels"].back(), "h");
}

TEST(Cli, GenPetersen) {
  auto r = run("gen --family petersen");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(snarkflow::parse_graph6(snarkflow::detail::trim_line(r.out)).n(), 10);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("gen --family nope").code, 2);
  EXPECT_EQ(run("gen --family goldberg --k 0").code, 2);
  EXPECT_EQ(run("phi --bogus").code, 2);
  EXPECT_EQ(run("proofcheck --suite nothing").code, 2);
  const auto dir = scratch();
  write(dir / "bad.g6", "C\x01\n");
  EXPECT_EQ(run("phi " + (dir / "bad.g6").string()).code, 2);
  write(dir / "path.json", R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
  EXPECT_EQ(run("phi " + (dir / "path.json").string()).code, 2);
}

TEST(Cli, PhiPetersenBothAgree) {
  const auto dir = scratch();
  write(dir / "petersen.g6", oracle::graph6(snarkflow::petersen().graph) + "\n");
  auto r = run("phi " + (dir / "petersen.g6").string() + " --method both");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["phi"], "5/1");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["completed"], true);
}

TEST(Cli, PhiAndVerifyGoldberg) {
  const auto dir = scratch();
  write(dir / "g3.g6", oracle::graph6(snarkflow::goldberg(1).graph) + "\n");
  const auto g = (dir / "g3.g6").string();
  const auto cert = (dir / "g3.cert.json").string();
  auto r = run("phi " + g + " --method flows --certificate " + cert);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["phi"], "9/2");

  EXPECT_EQ(run("verify " + g + " --certificate " + cert).code, 0);

  // No 22/5-flow exists, so some value must fall outside [1, 17/5].
  EXPECT_EQ(run("verify " + g + " --certificate " + cert + " --r 22/5").code, 1);

  auto c = nlohmann::json::parse(std::ifstream(cert));

  c["values"][3] = "0/1";
  write(dir / "zeroed.json", c.dump());
  auto z = run("verify " + g + " --certificate " + (dir / "zeroed.json").string());
  EXPECT_EQ(z.code, 1);
  EXPECT_EQ(nlohmann::json::parse(z.out)["edge"], 3);

  write(dir / "junk.json", "{not json");
  EXPECT_EQ(run("verify " + g + " --certificate " + (dir / "junk.json").string()).code, 2);
}

TEST(Cli, BudgetedPhiIsPartial) {
  auto r = run("phi --family goldberg --k 2 --method valuations --budget-seconds 0.001");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["completed"], false);
}

TEST(Cli, ProofcheckSuites) {
  auto c = run("proofcheck --suite configurations");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["result"]["class_count"], 4);
  auto col = run("proofcheck --suite coloring --k 2");
  EXPECT_EQ(col.code, 0);
  EXPECT_EQ(nlohmann::json::parse(col.out)["result"]["blocks"].size(), 5u);
  EXPECT_EQ(run("proofcheck --suite blocktypes").code, 0);
  EXPECT_EQ(run("proofcheck --suite endtoend --k 1").code, 0);
}

TEST(Cli, CatalogJson) {
  auto r = run("catalog");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["types"].size(), 84u);
  EXPECT_EQ(j["checksum"], "51c9d265bcec3e52");
}
