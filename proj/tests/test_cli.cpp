#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mvg/case_study.hpp"
#include "mvg/cli.hpp"

using namespace mvg;
using json = nlohmann::ordered_json;

namespace {

const std::string kData = MVG_DATA_DIR;
const std::string kCase = kData + "/casestudy.json";

struct Outcome {
  int code;
  std::string out, err;
};

template <class Fn>
Outcome run(Fn&& fn) {
  std::ostringstream out, err;
  int code = fn(out, err);
  return {code, out.str(), err.str()};
}

std::string schema_error(const json& root, const LoadOptions& opts = {}) {
  try {
    load_frame_json(root, opts);
  } catch (const SchemaError& e) {
    return e.what();
  } catch (const Error& e) {
    return std::string("non-schema: ") + e.what();
  }
  return "no error";
}

json minimal() {
  return json::parse(R"({
    "algebra": {"kind": "lukasiewicz", "size": 3},
    "nodes": ["a", "b"],
    "E": [["1", "0.5"], ["0", "1"]],
    "relations": {"x": {"box": [["1", "0.5"], ["0", "1"]]}},
    "valuations": {"p": [["0", "0"], ["1/2", "1/2"], ["1", "1"]]}
  })");
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mvg_test_" + name);
}

}  // namespace

TEST(FrameFile, LoadsCaseStudy) {
  FrameBundle b = load_frame(kCase);
  EXPECT_EQ(b.frame->graph().nodes()->size(), 3u);
  EXPECT_EQ(b.frame->labels(), (std::vector<std::string>{"A", "M", "H"}));
  EXPECT_EQ(b.tables.size(), 2u);
  EXPECT_EQ(b.table_order, (std::vector<std::string>{"phi", "psi"}));
  EXPECT_FALSE(b.close);
  EXPECT_EQ(b.frame->algebra()->format(b.frame->graph().E()(0, 2)), "0.6");
}

TEST(FrameFile, DataFileMatchesEmbeddedBundle) {
  std::ifstream in(kCase);
  json file = json::parse(in);
  json embedded = json::parse(case_study::kBundleJson);
  EXPECT_EQ(file, embedded);
  EXPECT_EQ(frame_to_json(load_frame_json(file)), frame_to_json(case_study::load_bundle()));
}

TEST(FrameFile, RoundTrip) {
  for (const char* name : {"casestudy.json", "diamond.json", "counterexample.json"}) {
    LoadOptions lo;
    lo.compatibility = Checking::Skip;
    FrameBundle b = load_frame(kData + "/" + name, lo);
    auto path = temp_file(name);
    save_frame(path.string(), b);
    FrameBundle c = load_frame(path.string(), lo);
    EXPECT_EQ(frame_to_json(b), frame_to_json(c)) << name;
    EXPECT_EQ(c.frame->labels(), b.frame->labels());
    for (const auto& l : b.frame->labels()) {
      EXPECT_EQ(c.frame->relations(l).box.has_value(), b.frame->relations(l).box.has_value());
      EXPECT_EQ(c.frame->relations(l).dia.has_value(), b.frame->relations(l).dia.has_value());
    }
    std::filesystem::remove(path);
  }
}

TEST(FrameFile, DiamondDefaultsToConverseAndNullMeansAbsent) {
  LoadOptions lo;
  lo.compatibility = Checking::Skip;
  FrameBundle b = load_frame(kData + "/counterexample.json", lo);
  EXPECT_FALSE(b.frame->relations("bad").dia.has_value());
  EXPECT_EQ(*b.frame->relations("ok").dia, b.frame->box("ok").converse());
  json out = frame_to_json(b);
  EXPECT_TRUE(out["relations"]["bad"]["dia"].is_null());
  EXPECT_FALSE(out["relations"]["ok"].contains("dia"));
}

TEST(FrameFile, SchemaErrorsCarryPointers) {
  json j = minimal();
  EXPECT_EQ(schema_error(j), "no error");

  j = minimal();
  j["E"][1][1] = "1/2";
  EXPECT_EQ(schema_error(j), "/E/1/1: E must be reflexive; diagonal entry (b,b) is 1/2");

  j = minimal();
  j["E"][0].erase(1);
  EXPECT_NE(schema_error(j).find("/E/0"), std::string::npos);

  j = minimal();
  j["algebra"]["kind"] = "product";
  EXPECT_EQ(schema_error(j).rfind("/algebra/kind: ", 0), 0u);

  j = minimal();
  j["algebra"]["size"] = 1;
  EXPECT_EQ(schema_error(j).rfind("/algebra/size: ", 0), 0u);

  j = minimal();
  j["nodes"] = json::array({"a", "a"});
  EXPECT_EQ(schema_error(j).rfind("/nodes/1: ", 0), 0u);

  j = minimal();
  j["valuations"]["p"][1][0] = "0.7";
  EXPECT_EQ(schema_error(j).rfind("/valuations/p/1/0: ", 0), 0u);

  j = minimal();
  j["valuations"]["p"][2][0] = "0";
  EXPECT_EQ(schema_error(j).rfind("/valuations/p: ", 0), 0u) << schema_error(j);

  j = minimal();
  j["valuations"]["p q"] = j["valuations"]["p"];
  EXPECT_EQ(schema_error(j).rfind("/valuations/p q: ", 0), 0u);

  j = minimal();
  j["relations"]["a/b"] = j["relations"]["x"];
  EXPECT_EQ(schema_error(j).rfind("/relations/a~1b: ", 0), 0u);

  j = minimal();
  j["relations"]["y"] = json::object();
  EXPECT_EQ(schema_error(j).rfind("/relations/y: ", 0), 0u);

  j = minimal();
  j.erase("nodes");
  EXPECT_NE(schema_error(j).find("nodes"), std::string::npos);

  EXPECT_EQ(schema_error(json::array()).rfind("(root): frame file must be a JSON object", 0), 0u);
}

TEST(FrameFile, StrictVersusClose) {
  json j = minimal();
  j["valuations"]["p"][2][0] = "0";
  LoadOptions lo;
  lo.mode = ValuationMode::Close;
  FrameBundle b = load_frame_json(j, lo);
  EXPECT_TRUE(b.close);
  Model M = b.model();
  EXPECT_TRUE(subseteq(b.tables.at("p"), M.valuation().at("p").extent()));
  j["close"] = true;
  EXPECT_NO_THROW(load_frame_json(j));
}

TEST(FrameFile, IncompatibleFrameRejectedUnlessSkipped) {
  EXPECT_THROW(load_frame(kData + "/counterexample.json"), CompatibilityError);
  LoadOptions lo;
  lo.compatibility = Checking::Skip;
  EXPECT_NO_THROW(load_frame(kData + "/counterexample.json", lo));
  EXPECT_THROW(load_frame(kData + "/missing.json"), Error);
}

TEST(Render, ExtentAndIntentTables) {
  FrameBundle b = case_study::load_bundle();
  Concept psi = b.model().valuation().at("psi");
  std::string ext = render_extent(psi.extent());
  EXPECT_EQ(ext.substr(0, ext.find('\n')), "beta | z_A z_M z_H");
  EXPECT_NE(ext.find("0.0  | 0.8 0.4 0.8"), std::string::npos) << ext;
  std::string in = render_intent(psi.intent());
  EXPECT_EQ(in.substr(0, in.find('\n')), "z | z_A z_M z_H");
  json cj = concept_to_json(psi);
  EXPECT_EQ(cj["denominator"], 10);
  EXPECT_EQ(cj["extent"][0], json::array({8, 4, 8}));
}

TEST(Commands, EvalTableAndJson) {
  cli::Options o;
  Outcome t = run([&](auto& out, auto& err) { return cli::cmd_eval(kCase, "[]_M psi", o, out, err); });
  EXPECT_EQ(t.code, cli::kOk);
  EXPECT_NE(t.out.find("extent [[[]_M psi]]"), std::string::npos);
  EXPECT_NE(t.out.find("  | 0.6 0.6 0.6"), std::string::npos) << t.out;
  o.format = cli::Format::Json;
  Outcome j = run([&](auto& out, auto& err) { return cli::cmd_eval(kCase, "[]_M psi", o, out, err); });
  ASSERT_EQ(j.code, cli::kOk);
  json parsed = json::parse(j.out);
  EXPECT_EQ(parsed["formula"], "[]_M psi");
  EXPECT_EQ(parsed["intent"], json::array({6, 6, 6}));
  for (std::size_t beta = 0; beta < 11; ++beta)
    for (std::size_t z = 0; z < 3; ++z) EXPECT_EQ(parsed["extent"][beta][z], case_study::kBoxMPsi[beta][z]);
}

TEST(Commands, EvalErrors) {
  cli::Options o;
  Outcome syntax = run([&](auto& out, auto& err) { return cli::cmd_eval(kCase, "[]_", o, out, err); });
  EXPECT_EQ(syntax.code, cli::kError);
  EXPECT_NE(syntax.err.find("position 3"), std::string::npos);
  Outcome atom = run([&](auto& out, auto& err) { return cli::cmd_eval(kCase, "chi", o, out, err); });
  EXPECT_EQ(atom.code, cli::kError);
  EXPECT_NE(atom.err.find("chi"), std::string::npos);
}

TEST(Commands, CheckModelAndFrame) {
  cli::Options o;
  auto check = [&](const std::string& s, const std::string& mode) {
    return run([&](auto& out, auto& err) { return cli::cmd_check(kCase, s, mode, o, out, err); });
  };
  EXPECT_EQ(check("phi |- psi", "model").code, cli::kNegative);
  Outcome t = check("[]_M psi |- phi", "model");
  EXPECT_EQ(t.code, cli::kOk);
  EXPECT_EQ(t.out, "[]_M psi |- phi: true in the model\n");
  Outcome v = check("[]_A p |- p", "frame");
  EXPECT_EQ(v.code, cli::kOk);
  EXPECT_EQ(v.out, "[]_A p |- p: valid on the frame (205 concepts, 205 assignments checked)\n");
  Outcome n = check("p |- []_M p", "frame");
  EXPECT_EQ(n.code, cli::kNegative);
  EXPECT_NE(n.out.find("counterexample intent of p"), std::string::npos);
  EXPECT_EQ(check("p |- q", "both").code, cli::kError);
  o.budget = 1000;
  Outcome over = check("p & q |- p", "frame");
  EXPECT_EQ(over.code, cli::kError);
  EXPECT_NE(over.err.find("budget"), std::string::npos) << over.err;
  o.budget = kDefaultBudget;
  o.format = cli::Format::Json;
  json j = json::parse(check("p |- []_M p", "frame").out);
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["concepts"], 205);
  EXPECT_TRUE(j["counterexample_intents"]["p"].is_array());
}

TEST(Commands, AnalyzeCaseStudyAndCounterexample) {
  cli::Options o;
  Outcome ok = run([&](auto& out, auto& err) { return cli::cmd_analyze(kCase, o, out, err); });
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_NE(ok.out.find("all checks pass"), std::string::npos);
  EXPECT_NE(ok.out.find("792 instances"), std::string::npos);

  Outcome bad = run([&](auto& out, auto& err) { return cli::cmd_analyze(kData + "/counterexample.json", o, out, err); });
  EXPECT_EQ(bad.code, cli::kNegative);
  EXPECT_NE(bad.out.find("bad    E-compatible             FAIL  1 of 18 fail; first: box[0]{b/z} with values (1) at z2, "
                         "closure exceeds it at (0,z1)"),
            std::string::npos)
      << bad.out;
  o.format = cli::Format::Json;
  json j = json::parse(run([&](auto& out, auto& err) {
                         return cli::cmd_analyze(kData + "/counterexample.json", o, out, err);
                       }).out);
  EXPECT_EQ(j["ok"], false);
}

TEST(Commands, AnalyzeFrameWithoutRelations) {
  json j = minimal();
  j.erase("relations");
  auto path = temp_file("norel.json");
  std::ofstream(path) << j.dump();
  cli::Options o;
  Outcome r = run([&](auto& out, auto& err) { return cli::cmd_analyze(path.string(), o, out, err); });
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("E reflexive"), std::string::npos);
  Outcome e = run([&](auto& out, auto& err) { return cli::cmd_eval(path.string(), "[] p", o, out, err); });
  EXPECT_EQ(e.code, cli::kError);
  std::filesystem::remove(path);
}

TEST(Commands, CasestudyAndEmit) {
  auto path = temp_file("emit.json");
  Outcome r = run([&](auto& out, auto& err) { return cli::cmd_casestudy(path.string(), out, err); });
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("4 identities/tables verified, 2 inequalities verified"), std::string::npos);
  EXPECT_EQ(frame_to_json(load_frame(path.string())), frame_to_json(case_study::load_bundle()));
  std::filesystem::remove(path);
}

TEST(Commands, Concepts) {
  cli::Options o;
  Outcome r = run([&](auto& out, auto& err) { return cli::cmd_concepts(kCase, o, out, err); });
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "205 concepts");
  o.budget = 10;
  EXPECT_EQ(run([&](auto& out, auto& err) { return cli::cmd_concepts(kCase, o, out, err); }).code, cli::kError);
}
