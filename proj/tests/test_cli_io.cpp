#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "slcg/cli.hpp"
#include "slcg/io.hpp"

using namespace slcg;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures = SLCG_FIXTURES;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return (kFixtures / name).string(); }

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "slcg_cli_io";
  std::filesystem::create_directories(dir);
  for (const auto& f : {"chain2.json", "chain3.json", "z2.json", "z3.json", "z4.json"}) {
    std::filesystem::copy_file(kFixtures / f, dir / f, std::filesystem::copy_options::overwrite_existing);
  }
  const auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("serialize(parse(x)) is a fixed point") {
  for (const auto& name : {"chain2.json", "chain3.json", "z4.json", "indiscrete_z3.json", "point_z2.json",
                           "crisp_point_z2.json", "crisp_point.json", "subbase_z2.json"}) {
    const auto doc = io::parse(kFixtures / name);
    const auto once = io::serialize(io::canonical(doc));
    const auto again = io::serialize(io::canonical(io::parse_text(once, kFixtures)));
    CHECK_MESSAGE(once == again, name);
  }
}

TEST_CASE("kinds are inferred from fields") {
  CHECK(io::infer_kind(json{{"elements", json::array()}, {"meet", json::array()}}) == "algebra");
  CHECK(io::infer_kind(json{{"kind", "map"}}) == "map");
  CHECK(io::parse(kFixtures / "z2.json").kind == "group");
  CHECK(io::parse(kFixtures / "subbase_z2.json").kind == "subbase");
}

TEST_CASE("validate canonicalizes member order") {
  const auto r = run({"validate", fx("point_z2.json")});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const auto& members = j["structure"]["members"];
  CHECK(members == json::array({json::array({"0", "0"}), json::array({"1", "0"}), json::array({"1", "1"})}));
  CHECK_FALSE(j["group"].contains("kind"));
}

TEST_CASE("a non-distributive lattice is rejected with a witness") {
  const auto r = run({"validate", fx("m3.json")});
  CHECK(r.code == 2);
  const auto j = json::parse(r.out);
  CHECK(j["error"] == "NonDistributive");
  const auto& v = j["witness"]["violations"];
  REQUIRE(v.size() == 1);
  CHECK(v[0]["law"] == "distributivity");
  CHECK(v[0]["witness"] == json::array({1, 2, 3}));
}

TEST_CASE("malformed json reports a position") {
  const auto p = scratch("broken.json", "{\n  \"elements\": [1, 2\n");
  const auto r = run({"validate", p.string()});
  CHECK(r.code == 2);
  const auto j = json::parse(r.out);
  CHECK(j["error"] == "ParseError");
  CHECK(j["witness"].contains("line"));
  try {
    io::parse(p);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "slcg", fx("indiscrete_z3.json")}).code == 0);
  const auto bad = run({"check", "slcg", fx("point_z2.json")});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["holds"] == false);
  CHECK(json::parse(bad.out)["witness"]["map"] == "m");
  CHECK(run({"check", "cg", fx("crisp_point_z2.json")}).code == 1);
  CHECK(run({"validate", fx("does_not_exist.json")}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"check", "slcg"}).code == 2);
  const auto guarded = run({"--max-enum", "4", "construct", "quotient", fx("indiscrete_z4.json"), "--normal", "0,2"});
  CHECK(guarded.code == 3);
  CHECK(json::parse(guarded.out)["error"] == "GuardExceeded");
  CHECK(run({"check", "theorem", "k-char", "--seed", "3", "--cases", "20"}).code == 0);
  CHECK(run({"oracle", "compare", "rho", "--seed", "7"}).code == 0);
}

TEST_CASE("constructions through the cli") {
  const auto q = run({"construct", "quotient", fx("indiscrete_z4.json"), "--normal", "0,2"});
  REQUIRE(q.code == 0);
  const auto qj = json::parse(q.out);
  CHECK(qj["complement_ctc"]["holds"] == true);
  CHECK(run({"construct", "product", fx("indiscrete_z3.json"), fx("indiscrete_z4.json")}).code == 0);
  CHECK(run({"construct", "join", fx("indiscrete_z4.json"), fx("indiscrete_z4.json")}).code == 0);
  CHECK(run({"construct", "subspace", fx("indiscrete_z4.json"), "--subset", "0,2"}).code == 0);
  CHECK(run({"construct", "subspace", fx("indiscrete_z4.json"), "--subset", "0,1"}).code == 2);
  CHECK(run({"construct", "final", "--group", fx("z2.json"), "--hom", fx("reduce_z4_z2.json"), "--source",
             fx("indiscrete_z4.json")})
            .code == 0);
  const auto g = run({"gen", "structure", "--subbase", fx("subbase_z2.json"), "--stratified"});
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["members"].size() >= 5);
}

TEST_CASE("functors through the cli") {
  const auto w = run({"functor", "omega", fx("crisp_point.json"), "--algebra", fx("chain3.json")});
  REQUIRE(w.code == 0);
  CHECK(json::parse(w.out)["members"].size() == 5);
  const auto r = run({"functor", "rho", fx("point_z2.json")});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["members"] == json::array({json::array(), json::array({"0", "1"})}));
}

TEST_CASE("text format and --out") {
  const auto t = run({"--format", "text", "check", "slcg", fx("indiscrete_z3.json")});
  CHECK(t.code == 0);
  CHECK(t.out.find("holds: true") != std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "slcg_cli_io" / "report.json";
  std::filesystem::create_directories(path.parent_path());
  CHECK(run({"--out", path.string(), "check", "slcg", fx("indiscrete_z3.json")}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(json::parse(buf.str())["holds"] == true);
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::vector<std::string>> commands = {
      {"check", "theorem", "odot-char", "--seed", "11", "--cases", "30"},
      {"oracle", "compare", "generate", "--seed", "4", "--cases", "20"},
      {"construct", "quotient", fx("indiscrete_z4.json"), "--normal", "0,2"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("file references resolve relative to the referring document") {
  const auto p = scratch("nested.json", R"({"kind":"convex-group","group":"z2.json",
    "structure":{"carrier":["0","1"],"algebra":"chain2.json","members":[["0","0"],["1","1"]]}})");
  CHECK(run({"check", "slcg", p.string()}).code == 0);
  const auto loop = scratch("loop.json", R"({"kind":"convex-group","group":"loop.json","structure":{}})");
  CHECK(run({"validate", loop.string()}).code == 2);
}
