#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "knotrep_cli/commands.hpp"
#include "knotrep_cli/json_io.hpp"

using namespace knotrep;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "knotrep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, Alexander) {
  const auto tre = run({"alexander", "--fixture", "trefoil"});
  ASSERT_EQ(tre.code, 0) << tre.err;
  EXPECT_EQ(tre.j()["delta"]["text"], "t^2 - t + 1");
  EXPECT_EQ(tre.j()["m"], 6);
  const auto unknot = run({"alexander", "--fixture", "unknot"});
  EXPECT_EQ(unknot.j()["delta"]["text"], "1");
  EXPECT_TRUE(unknot.j()["m"].is_null());
  const auto link = run({"alexander", "--braid", "1 @3"});
  EXPECT_EQ(link.code, 2);
  EXPECT_NE(link.err.find("component"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"alexander"}).code, 2);
  EXPECT_EQ(run({"alexander", "--fixture", "trefoil", "--braid", "1 1 1"}).code, 2);
  EXPECT_EQ(run({"alexander", "--fixture", "nope"}).code, 2);
  EXPECT_EQ(run({"count", "--fixture", "trefoil", "--n-range", "5..2"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"alexander", "--pd", "X(1,4,2,5),X(3,6,4,1),X(5,2,6,7)"}).code, 2);
}

TEST(Cli, Homology) {
  const auto tre = run({"homology", "--fixture", "trefoil", "--n-range", "2..4"}).j()["covers"];
  ASSERT_EQ(tre.size(), 3u);
  EXPECT_EQ(tre[0]["order"], 3);
  EXPECT_EQ(tre[1]["order"], 4);
  EXPECT_EQ(tre[2]["order"], 3);
  for (const auto& c : tre) EXPECT_TRUE(c["agree"].get<bool>());
  for (const auto& c : run({"homology", "--fixture", "unknot", "--n-range", "2..6"}).j()["covers"]) {
    EXPECT_EQ(c["order"], 1);
    EXPECT_TRUE(c["torsion"].empty());
  }
  const auto six = run({"homology", "--fixture", "trefoil", "--n", "6"}).j()["covers"][0];
  EXPECT_EQ(six["rank"], 2);
  EXPECT_EQ(six["order"], "infinite");
  EXPECT_EQ(six["resultant"], 0);
  EXPECT_TRUE(six["agree"].get<bool>());
}

TEST(Cli, Count) {
  const auto fig = run({"count", "--fixture", "figure-eight", "--n", "3"}).j()["reports"][0];
  EXPECT_EQ(fig["direct"], 5);
  EXPECT_EQ(fig["mobius"], 5);
  EXPECT_TRUE(fig["agree"].get<bool>());
  const auto four = run({"count", "--fixture", "trefoil", "--n", "4"}).j()["reports"][0];
  EXPECT_EQ(four["direct"], 0);
  EXPECT_EQ(four["mobius"], 0);
  EXPECT_EQ(run({"count", "--fixture", "trefoil", "--n", "6"}).j()["reports"][0]["verdict"], "POSITIVE_DIMENSIONAL");
}

TEST(Cli, Reps) {
  const auto tre = run({"reps", "--fixture", "trefoil", "--n", "2", "--verify"}).j()["degrees"][0];
  EXPECT_EQ(tre["classes"], 1);
  ASSERT_EQ(tre["reps"].size(), 1u);
  EXPECT_TRUE(tre["reps"][0]["verification"]["all_pass"].get<bool>());
  EXPECT_EQ(run({"reps", "--fixture", "figure-eight", "--n", "2"}).j()["degrees"][0]["classes"], 2);
  EXPECT_TRUE(run({"reps", "--fixture", "unknot", "--n", "2"}).j()["degrees"][0]["reps"].empty());
  const auto numeric = run({"reps", "--fixture", "trefoil", "--n", "2", "--numeric"}).j();
  EXPECT_LT(numeric["faithful_reducible"]["max_relator_residual"].get<double>(), 1e-9);
}

TEST(Cli, RepsRoundTripThroughVerify) {
  const std::string path = temp_path("knotrep_reps.json");
  const auto emitted = run({"reps", "--fixture", "5_2", "--n-range", "2..3", "--emit-matrices", "--json", path});
  ASSERT_EQ(emitted.code, 0) << emitted.err;
  const auto verified = run({"verify", path});
  EXPECT_EQ(verified.code, 0) << verified.err;
  EXPECT_TRUE(verified.j()["all_pass"].get<bool>());
  EXPECT_EQ(verified.j()["results"].size(), 11u);

  // A corrupted document fails with exit code 3.
  json doc = json::parse(std::ifstream(path));
  doc["degrees"][0]["reps"][0]["rep"]["images"][1]["exps"][0] = 1;
  std::ofstream(path) << doc.dump();
  EXPECT_EQ(run({"verify", path}).code, 3);
  std::remove(path.c_str());
}

TEST(Cli, JsonRoundTripPreservesReps) {
  const auto k = cli::resolve_knot({.command = "reps", .fixture = "figure-eight"});
  const auto a = alexander_module(k.presentation);
  const auto c = homology_Ln(a, 3);
  const CharacterGroup g(c);
  for (const auto& chi : enumerate_characters(c)) {
    if (g.order(chi) != 3) continue;
    const auto r = build_sl_rep(k.presentation, c, chi);
    const auto back = cli::rep_from_json(json::parse(cli::to_json(r, true).dump()));
    EXPECT_EQ(back.images, r.images);
    EXPECT_EQ(back.chi, r.chi);
    EXPECT_EQ(back.class_id, r.class_id);
    EXPECT_EQ(back.z_exponent, r.z_exponent);
  }
  const auto w = cli::presentation_from_json(cli::to_json(k.presentation));
  EXPECT_EQ(w.relators, k.presentation.relators);
  EXPECT_EQ(w.longitude, k.presentation.longitude);
}

TEST(Cli, Analyze) {
  const auto r = run({"analyze", "--fixture", "trefoil", "--nmax", "6"}).j()["report"];
  EXPECT_EQ(r["m"], 6);
  EXPECT_TRUE(r["lambda1_periodic"].get<bool>());
  std::vector<std::string> verdicts;
  for (const auto& v : r["verdicts"]) verdicts.push_back(v["verdict"]);
  EXPECT_EQ(verdicts, (std::vector<std::string>{"FINITE", "FINITE", "EMPTY", "EMPTY", "POSITIVE_DIMENSIONAL"}));
}

TEST(Cli, BatchKeepsInputOrder) {
  const std::string path = temp_path("knotrep_batch.txt");
  std::ofstream(path) << "# jobs\ncount --fixture trefoil --n 2\n\nalexander --braid \"1 @3\"\n"
                         "homology --pd \"X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]\" --n 3\n";
  const auto r = run({"batch", path});
  EXPECT_EQ(r.code, 2);
  const auto j = r.j();
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["reports"][0]["direct"], 1);
  EXPECT_EQ(j[1]["exit_code"], 2);
  EXPECT_EQ(j[2]["covers"][0]["order"], 4);
  std::remove(path.c_str());
}

TEST(Cli, FileSources) {
  const std::string braid = temp_path("knotrep_knot.braid");
  std::ofstream(braid) << "# trefoil\n1 1 1 @2\n";
  EXPECT_EQ(run({"alexander", "--file", braid}).j()["delta"]["text"], "t^2 - t + 1");
  const std::string pd = temp_path("knotrep_knot.pd");
  std::ofstream(pd) << "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]\n";
  EXPECT_EQ(run({"alexander", "--pd", pd}).j()["delta"]["text"], "t^2 - t + 1");
  EXPECT_EQ(run({"alexander", "--file", pd}).j()["delta"]["text"], "t^2 - t + 1");
  std::remove(braid.c_str());
  std::remove(pd.c_str());
}
