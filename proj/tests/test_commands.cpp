#include <algorithm>

#include <gtest/gtest.h>

#include "cmpart/commands.hpp"

using namespace cmpart;
using namespace cmpart::cli;

namespace {

JobSpec job(int m, int d, int n) {
  JobSpec j;
  j.m = m;
  j.d = d;
  j.n = n;
  return j;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Commands, Enumerate) {
  JobSpec j;
  j.m = 2;
  j.n = 2;
  j.format = "tsv";
  auto r = cmd_enumerate(j);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(lines(r.out), 5u);
  j.m = 1;
  j.n = 0;
  EXPECT_EQ(cmd_enumerate(j).out, "()\n");
  j.m = 3;
  j.n = 3;
  EXPECT_EQ(lines(cmd_enumerate(j).out), 22u);
  j.format = "json";
  auto parsed = Json::parse(cmd_enumerate(j).out);
  EXPECT_EQ(parsed["count"], 22);
  EXPECT_EQ(parsed["schema"], 1);
  j.m = 10;
  j.n = 10;
  EXPECT_EQ(cmd_enumerate(j).exit_code, 2);
}

TEST(Commands, CmWithClassValues) {
  auto j = job(2, 1, 2);
  j.params = R"({"k":"-1","c":{"1":"1"}})";
  auto r = cmd_cm(j);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["labels"].size(), 5u);
  EXPECT_EQ(parsed["parameter"]["e"], 2);
  EXPECT_EQ(parsed["labels"][0], "(|1,1)");
  std::size_t covered = 0;
  for (const auto& b : parsed["blocks"]) covered += b.size();
  EXPECT_EQ(covered, 5u);
  EXPECT_EQ(parsed["residues"].size(), parsed["blocks"].size());
}

TEST(Commands, CmGeneric) {
  auto j = job(2, 2, 2);
  j.generic = true;
  auto parsed = Json::parse(cmd_cm(j).out);
  EXPECT_EQ(parsed["labels"].size(), 4u);
  EXPECT_EQ(parsed["num_blocks"], 4);
  j.format = "tsv";
  auto tsv = cmd_cm(j).out;
  EXPECT_EQ(lines(tsv), 4u);
  EXPECT_NE(tsv.find("\t({(1|1)},1)\n"), std::string::npos);
}

TEST(Commands, CmErrors) {
  auto j = job(2, 2, 2);
  j.params = R"({"k":"0","c":{"1":"0"}})";
  auto r = cmd_cm(j);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("k must be nonzero"), std::string::npos);
  j.params = R"({"k":"-1","c":{"1":"1"}})";
  r = cmd_cm(j);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("p-cyclic"), std::string::npos);
  auto j3 = job(3, 1, 2);
  j3.params = R"({"c":{"1":"1","2":"0"}})";
  r = cmd_cm(j3);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("irrational"), std::string::npos);
  auto bad = job(2, 1, 2);
  bad.params = R"({"c":{"5":"1"}})";
  EXPECT_EQ(cmd_cm(bad).exit_code, 2);
  bad.params = R"({"q":1})";
  EXPECT_EQ(cmd_cm(bad).exit_code, 2);
  bad.params = "{not json";
  EXPECT_EQ(cmd_cm(bad).exit_code, 2);
  bad.params = "/nonexistent/file.json";
  EXPECT_EQ(cmd_cm(bad).exit_code, 2);
  bad.params.reset();
  EXPECT_EQ(cmd_cm(bad).exit_code, 2);
}

TEST(Commands, ParamsWithGroupInFile) {
  JobSpec j;
  j.params = R"({"m":4,"d":2,"n":2,"H":["1/2","-1/2","1/2","-1/2"]})";
  auto r = cmd_cm(j);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["group"]["m"], 4);
  EXPECT_EQ(parsed["parameter"]["s"], Json::parse("[0,-1,0,-1]"));
  j.m = 6;
  EXPECT_EQ(cmd_cm(j).exit_code, 2);
}

TEST(Commands, ParamsTranslation) {
  JobSpec j;
  j.m = 4;
  j.d = 2;
  j.params = R"({"k":"2","c":{"2":"1"}})";
  auto r = cmd_params(j);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto parsed = Json::parse(r.out);
  EXPECT_TRUE(parsed["p_cyclic"].get<bool>());
  EXPECT_TRUE(parsed["supported_on_multiples_of_d"].get<bool>());
  EXPECT_EQ(parsed["H"], Json::parse(R"(["1/4","-1/4","1/4","-1/4"])"));
  EXPECT_EQ(parsed["e"], 8);
}

TEST(Commands, Residue) {
  auto r = cmd_residue("(3,2,2,1)", {}, 1);
  ASSERT_EQ(r.exit_code, 0);
  auto parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["shifted"], Json::parse(R"({"-3":1,"-2":1,"-1":2,"0":2,"1":1,"2":1})"));
  auto s = Json::parse(cmd_residue("(1|1)", {0, 5}, 2).out);
  EXPECT_EQ(s["shifted"], Json::parse(R"({"0":1,"5":1})"));
  EXPECT_EQ(s["shifted_scaled"], Json::parse(R"({"0":1,"10":1})"));
  EXPECT_EQ(cmd_residue("(1|1)", {0}, 1).exit_code, 2);
}

TEST(Commands, RouquierCompare) {
  auto j = job(4, 2, 2);
  j.params = R"({"H":["1","-1","1","-1"]})";
  auto parsed = Json::parse(cmd_rouquier(j, "cm").out);
  EXPECT_TRUE(parsed["comparison"]["refines"].get<bool>());
  auto g = job(4, 2, 2);
  g.generic = true;
  auto pg = Json::parse(cmd_rouquier(g, "cm").out);
  EXPECT_TRUE(pg["comparison"]["equal"].get<bool>());
  auto gen = job(3, 1, 2);
  gen.params = R"({"H":["-30","10","20"]})";
  auto pw = Json::parse(cmd_rouquier(gen).out);
  EXPECT_EQ(pw["num_blocks"], pw["labels"].size());
  auto c = Json::parse(cmd_compare(j).out);
  EXPECT_TRUE(c["comparison"]["refines"].get<bool>());
  EXPECT_EQ(cmd_rouquier(j, "bogus").exit_code, 2);
}

TEST(Commands, VerifySuites) {
  EXPECT_EQ(cmd_verify("sdorbit", job(4, 2, 3)).exit_code, 0);
  JobSpec chain;
  chain.m = 3;
  chain.n = 3;
  EXPECT_EQ(cmd_verify("chain", chain).exit_code, 0);
  auto r = cmd_verify("classes", job(4, 2, 2));
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("R1"), std::string::npos);
  EXPECT_NE(r.out.find("R2"), std::string::npos);
  for (const char* s : {"counting", "descent", "generic", "refinement"}) EXPECT_EQ(cmd_verify(s, job(2, 2, 3)).exit_code, 0) << s;
  JobSpec ess;
  ess.m = 8;
  EXPECT_EQ(cmd_verify("essential", ess).exit_code, 0);
  EXPECT_EQ(cmd_verify("params", ess).exit_code, 0);
  EXPECT_EQ(cmd_verify("nope", ess).exit_code, 2);
}

TEST(Commands, Oracle) {
  auto r = cmd_oracle(job(3, 3, 2));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["order"], "6");
  EXPECT_EQ(parsed["conjugacy_classes"], 3);
  EXPECT_TRUE(parsed["counts_agree"].get<bool>());
}

TEST(Commands, Deterministic) {
  auto j = job(4, 2, 3);
  j.generic = true;
  EXPECT_EQ(cmd_rouquier(j, "cm").out, cmd_rouquier(j, "cm").out);
  EXPECT_EQ(cmd_verify("descent", job(4, 2, 2)).out, cmd_verify("descent", job(4, 2, 2)).out);
}
