#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "loopnr/commands.hpp"

using namespace loopnr;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "loopnr_test_commands";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

json out(const CommandResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("check") {
  const auto good = scratch("z3.txt", "loop 3\n0 1 2\n1 2 0\n2 0 1\n");
  const auto r = cmd_check(good.string());
  CHECK(r.exit_code == kExitOk);
  CHECK(out(r)["valid"] == true);

  const auto bad = cmd_check(scratch("bad.txt", "loop 2\n0 1\n1 1\n").string());
  CHECK(bad.exit_code == kExitInvalid);
  CHECK(out(bad)["violations"][0]["kind"] == "NotLatinSquare");
  CHECK(out(bad)["violations"][0]["witness"] == json::array({1, 0, 1, 1}));

  CHECK(cmd_check(scratch("junk.txt", "loop two\n").string()).exit_code == kExitParse);
  CHECK(cmd_check("/nonexistent/structure.json").exit_code == kExitParse);

  Limits tight;
  tight.max_n = 2;
  CHECK(cmd_check(good.string(), tight).exit_code == kExitBound);
}

TEST_CASE("analyze") {
  AnalyzeOptions local;
  local.local = true;
  const auto z6 = out(cmd_analyze("cyclic:6", local));
  CHECK(z6["locality"]["local"] == false);
  CHECK(z6["locality"]["maximal"] == json::parse("[[0,3],[0,2,4]]"));
  CHECK_FALSE(z6.contains("radical"));

  AnalyzeOptions radical;
  radical.radical = true;
  const auto z4 = out(cmd_analyze("cyclic:4", radical));
  CHECK(z4["radical"]["members"] == json::array({0, 2}));
  CHECK(z4["radical"]["quotient_size"] == 2);

  CHECK(cmd_analyze("m:cyclic:2", local).exit_code == kExitHypothesis);
  CHECK(cmd_analyze("nonassoc5", radical).exit_code == kExitHypothesis);
  CHECK(cmd_analyze("cyclic:", local).exit_code == kExitParse);
  CHECK(cmd_analyze("opposite:m0:cyclic:3", local).exit_code == kExitInvalid);

  // All sections; the full map near-ring records locality as skipped.
  const auto full = out(cmd_analyze("m:cyclic:2", AnalyzeOptions{}));
  CHECK(full["locality"].contains("skipped"));
  CHECK(full["units"]["count"] == 2);

  AnalyzeOptions text = local;
  text.text = true;
  const auto rendered = cmd_analyze("cyclic:4", text).out;
  CHECK(rendered.find("local: true") != std::string::npos);
}

TEST_CASE("analyze output is deterministic") {
  AnalyzeOptions all;
  Limits one, four;
  four.threads = 4;
  for (const char* spec : {"cyclic:12", "matrix:cyclic:2,2", "m0:latin:4,1", "random:8,3"}) {
    const auto a = cmd_analyze(spec, all, one), b = cmd_analyze(spec, all, four);
    CHECK(a.exit_code == kExitOk);
    CHECK(a.out == b.out);
  }
  AnalyzeOptions timed;
  timed.timing = true;
  const auto t = out(cmd_analyze("cyclic:6", timed));
  CHECK(t.contains("timing"));
  CHECK(t["report_hash"] == out(cmd_analyze("cyclic:6", all))["report_hash"]);
}

TEST_CASE("decompose") {
  const auto z6 = out(cmd_decompose("cyclic:6", {}));
  CHECK(z6["family"] == json::array({3, 4}));
  CHECK(z6["corners"][0]["carrier"] == json::array({0, 3}));
  CHECK(z6["corners"][1]["carrier"] == json::array({0, 2, 4}));

  DecomposeOptions verify;
  verify.verify_uniqueness = true;
  const auto m2 = out(cmd_decompose("matrix:cyclic:2,2", verify));
  CHECK(m2["uniqueness"]["families"] == 3);
  CHECK(m2["uniqueness"]["isomorphism_matched"] == true);
  CHECK(m2["retracts"]["primitive_count"] == 6);

  CHECK(cmd_decompose("m0:cyclic:3", {}).exit_code == kExitHypothesis);
  CHECK(cmd_decompose("nonassoc5", {}).exit_code == kExitHypothesis);
  Limits one, four;
  four.threads = 4;
  CHECK(cmd_decompose("upper:cyclic:3,2", verify, one).out == cmd_decompose("upper:cyclic:3,2", verify, four).out);
}

TEST_CASE("hom") {
  const auto map = scratch("z4_z2.json", "[0, 1, 0, 1]");
  HomOptions transfer;
  transfer.transfer = true;
  const auto r = out(cmd_hom("cyclic:4", "cyclic:2", map.string(), transfer));
  CHECK(r["unit_reflecting"] == true);
  CHECK(r["transfer"]["agree"] == true);
  CHECK(r["kernel"] == json::array({0, 2}));

  const auto z63 = out(cmd_hom("cyclic:6", "cyclic:3", scratch("z6_z3.txt", "0 1 2 0 1 2\n").string(), {}));
  CHECK(z63["unit_reflecting"] == false);
  CHECK(z63["unit_reflecting_witness"] == 2);
  CHECK(cmd_hom("cyclic:6", "cyclic:3", scratch("z6_z3b.txt", "0 1 2 0 1 2\n").string(), transfer).exit_code ==
        kExitHypothesis);

  CHECK(cmd_hom("cyclic:4", "cyclic:2", scratch("nothom.json", "[0,1,1,0]").string(), {}).exit_code == kExitInvalid);
  const auto loops = out(cmd_hom("nonassoc5", "nonassoc5", scratch("id5.json", "[0,1,2,3,4]").string(), {}));
  CHECK(loops["kind"] == "loop");
}

TEST_CASE("generate and catalog") {
  const auto g = cmd_generate("matrix:cyclic:2,2");
  CHECK(g.exit_code == kExitOk);
  const auto path = scratch("m2z2.json", g.out);
  CHECK(cmd_check(path.string()).exit_code == kExitOk);
  CHECK(load_structure(path.string()).ring == generate("matrix:cyclic:2,2").ring);
  CHECK(json::parse(g.out)["meta"]["provenance"] == "generated");
  CHECK(cmd_generate("field:6").exit_code == kExitParse);
  CHECK(cmd_generate("matrix:cyclic:3,3").exit_code == kExitBound);

  const auto c = out(cmd_catalog());
  CHECK(c.is_array() == true);
  CHECK(c.size() == catalog().size());
  CHECK(cmd_catalog(true).out.find("m2z2") != std::string::npos);
}
