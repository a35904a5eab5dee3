#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "origami/cli.hpp"
#include "origami/core.hpp"
#include "origami/group.hpp"
#include "origami/perm.hpp"
#include "origami/surface.hpp"
#include "origami/svg.hpp"
#include "origami/text.hpp"
#include "support/generators.hpp"
#include "support/schema_check.hpp"

using origami::FinitePerm;
using origami::Group;
using origami::GroupElem;
using origami::GroupKind;
using origami::Origami;
using origami::SquareId;

#ifndef ORIGAMI_DATA_DIR
#error "ORIGAMI_DATA_DIR must point at the repository data directory"
#endif

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = origami::run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Writes content to a fresh file under a per-process scratch directory.
std::string scratch_file(const std::string& name, const std::string& content) {
  static const std::filesystem::path dir = [] {
    std::filesystem::path d = std::filesystem::temp_directory_path() /
                              ("origami-cli-tests-" +
                               std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  const std::filesystem::path p = dir / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  f.close();
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const nlohmann::json& report_schema() {
  static const nlohmann::json schema = nlohmann::json::parse(
      slurp(std::string(ORIGAMI_DATA_DIR) + "/report.schema.json"));
  return schema;
}

// Parses CLI output as JSON and validates it against the report schema.
nlohmann::json checked_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::string why;
  const bool ok = schemacheck::check(report_schema(), j, why);
  INFO("schema violation: ", why);
  REQUIRE(ok);
  return j;
}

const char* kTorusText = "n: 1\nsigma: (1)\ntau: (1)\n";
const char* kLText = "n: 3\nsigma: (1,2)\ntau: (1,3)\n";

}  // namespace

// ------------------------------------------------------------ text format

TEST_CASE("origami files parse with comments and implied fixed points") {
  const Origami o = origami::parse_origami_text(
      "# a three-square L\n"
      "\n"
      "n: 3\n"
      "sigma: (1,2)   # horizontal gluing\n"
      "tau: (1,3)\n");
  CHECK(o.size() == 3);
  CHECK(o.sigma(1) == 2);
  CHECK(o.sigma(3) == 3);  // fixed point left implicit in the file
  CHECK(o.tau(1) == 3);
  CHECK(o.tau(2) == 2);
}

TEST_CASE("rendering is canonical and parsing inverts it") {
  const Origami o = origami::parse_origami_text(kLText);
  CHECK(origami::render_origami_text(o) ==
        "n: 3\nsigma: (1,2)(3)\ntau: (1,3)(2)\n");

  testgen::Rng rng(0xC11u);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(8));
    const Origami a = testgen::random_connected_origami(rng, n);
    const std::string text = origami::render_origami_text(a);
    const Origami b = origami::parse_origami_text(text);
    REQUIRE(b.size() == a.size());
    for (SquareId i = 1; i <= a.size(); ++i) {
      CHECK(b.sigma(i) == a.sigma(i));
      CHECK(b.tau(i) == a.tau(i));
    }
    // A second render is byte-identical: the format has one canonical form.
    CHECK(origami::render_origami_text(b) == text);
  }
}

TEST_CASE("parse errors carry the offending line and column") {
  try {
    origami::parse_origami_text("n: 3\nsigma: (1,x)\ntau: (1,3)\n");
    FAIL("expected ParseError");
  } catch (const origami::ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  // The n: header must precede the permutation lines.
  CHECK_THROWS_AS(origami::parse_origami_text("sigma: (1,2)\n"),
                  origami::SemanticError);
}

TEST_CASE("semantic errors reject bad indices") {
  CHECK_THROWS_AS(
      origami::parse_origami_text("n: 3\nsigma: (1,1)\ntau: (1,3)\n"),
      origami::SemanticError);
  CHECK_THROWS_AS(
      origami::parse_origami_text("n: 3\nsigma: (1,4)\ntau: (1,3)\n"),
      origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_origami_text("n: 0\nsigma: ()\ntau: ()\n"),
                  origami::Error);
  // Valid permutations that do not act transitively are still rejected.
  CHECK_THROWS_AS(
      origami::parse_origami_text("n: 4\nsigma: (1,2)\ntau: (3,4)\n"),
      origami::NotConnected);
}

TEST_CASE("countable builtins parse under both names") {
  const Origami a =
      origami::parse_origami_text("n: countable staircase\n");
  CHECK_FALSE(a.is_finite());
  CHECK(a.name() == "staircase");

  const Origami b = origami::parse_origami_text("n: countable lemma1\n");
  CHECK(b.name() == "staircase");  // alias normalizes to the canonical name

  CHECK(origami::render_origami_text(a) == "n: countable staircase\n");
  CHECK_THROWS_AS(origami::parse_origami_text("n: countable nonesuch\n"),
                  origami::SemanticError);
}

// ------------------------------------------------------------ group specs

TEST_CASE("group specifications cover all kinds with firm bounds") {
  CHECK(origami::parse_group_spec("Z").kind() == GroupKind::free_abelian);
  CHECK(origami::parse_group_spec("Z").rank() == 1);
  CHECK(origami::parse_group_spec("Z^64").rank() == 64);
  CHECK(origami::parse_group_spec("F_26").kind() == GroupKind::free_group);

  CHECK_THROWS_AS(origami::parse_group_spec("Z^0"), origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_group_spec("Z^65"), origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_group_spec("F_0"), origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_group_spec("F_27"), origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_group_spec("Z/0"), origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_group_spec("what"), origami::ParseError);
  CHECK_THROWS_AS(origami::parse_group_spec(""), origami::ParseError);

  // Z/1 degenerates to the trivial permutation group.
  const Group z1 = origami::parse_group_spec("Z/1");
  CHECK(z1.kind() == GroupKind::finite_perm);
  CHECK(z1.closure()->size() == 1);

  const std::map<std::string, size_t> orders = {
      {"trivial", 1}, {"Z/2", 2},     {"Z/6", 6}, {"S3", 6},
      {"D4", 8},      {"Q8", 8},      {"Z/2xZ/2", 4}};
  for (const auto& [spec, order] : orders) {
    const Group g = origami::parse_group_spec(spec);
    CHECK(g.kind() == GroupKind::finite_perm);
    REQUIRE(g.closure().has_value());
    CHECK(g.closure()->size() == order);
  }

  const Group custom = origami::parse_group_spec("perm: (1,2); (1,3)");
  CHECK(custom.rank() == 3);  // degree inferred from the largest point
  CHECK(custom.generators().size() == 2);
  CHECK(custom.closure()->size() == 6);
}

TEST_CASE("group elements parse in the notation of their group") {
  const Group s3 = origami::parse_group_spec("S3");
  CHECK(origami::parse_group_elem(s3, "(1,2)") ==
        GroupElem::perm_elem(FinitePerm::from_cycles(3, {{1, 2}})));
  CHECK(origami::parse_group_elem(s3, "()").is_identity());
  CHECK_THROWS_AS(origami::parse_group_elem(s3, "(1,4)"),
                  origami::SemanticError);

  const Group z = origami::parse_group_spec("Z");
  CHECK(origami::parse_group_elem(z, "5") == GroupElem::vec_elem({5}));
  CHECK(origami::parse_group_elem(z, "(-2)") == GroupElem::vec_elem({-2}));

  const Group zz = origami::parse_group_spec("Z^2");
  CHECK(origami::parse_group_elem(zz, "(1,0)") ==
        GroupElem::vec_elem({1, 0}));
  CHECK_THROWS_AS(origami::parse_group_elem(zz, "(1)"),
                  origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_group_elem(zz, "(1,0) junk"),
                  origami::ParseError);

  const Group f2 = origami::parse_group_spec("F_2");
  CHECK(origami::parse_group_elem(f2, "aB") ==
        GroupElem::word_elem({1, -2}));
  CHECK(origami::parse_group_elem(f2, "e").is_identity());
  CHECK(origami::parse_group_elem(f2, "aA").is_identity());  // reduction
  CHECK_THROWS_AS(origami::parse_group_elem(f2, "ac"),
                  origami::SemanticError);

  // display() and the parser are mutual inverses on every kind.
  for (const GroupElem& e :
       {origami::parse_group_elem(s3, "(1,2,3)"),
        origami::parse_group_elem(z, "-7"),
        origami::parse_group_elem(zz, "(3,-4)"),
        origami::parse_group_elem(f2, "abAB")}) {
    const Group& g = e.kind() == GroupKind::finite_perm ? s3
                     : e.kind() == GroupKind::free_abelian
                         ? (e.vec().size() == 1 ? z : zz)
                         : f2;
    CHECK(origami::parse_group_elem(g, e.display()) == e);
  }
}

TEST_CASE("voltage files bind elements to edges exactly once") {
  const Group s3 = origami::parse_group_spec("S3");
  const origami::VoltageAssignment va = origami::parse_voltage_file(
      s3,
      "# cover description\n"
      "v 1 (1,2)\n"
      "h 2 (1,3)\n"
      "\n"
      "v 4 ()\n");
  CHECK(va.v(1) == GroupElem::perm_elem(FinitePerm::from_cycles(3, {{1, 2}})));
  CHECK(va.h(2) == GroupElem::perm_elem(FinitePerm::from_cycles(3, {{1, 3}})));
  CHECK(va.v(4).is_identity());
  CHECK(va.h(1).is_identity());

  CHECK_THROWS_AS(
      origami::parse_voltage_file(s3, "v 1 (1,2)\nv 1 (1,3)\n"),
      origami::SemanticError);
  CHECK_THROWS_AS(origami::parse_voltage_file(s3, "x 1 (1,2)\n"),
                  origami::ParseError);
  CHECK_THROWS_AS(origami::parse_voltage_file(s3, "v 0 (1,2)\n"),
                  origami::SemanticError);
}

// ------------------------------------------------------------ svg layout

TEST_CASE("layout walks forward first, then attaches backward neighbors") {
  const Origami o = origami::make_origami(
      FinitePerm::from_cycles(6, {{1, 2}, {3, 4, 5}}),
      FinitePerm::from_cycles(6, {{1, 3}, {2, 6}}));
  const std::map<SquareId, origami::GridCell> cells = origami::layout_cells(o);
  const std::map<SquareId, origami::GridCell> expect = {
      {1, {0, 0}},  {2, {1, 0}}, {3, {0, 1}},
      {4, {-2, 1}}, {5, {-1, 1}}, {6, {1, 1}}};
  CHECK(cells == expect);
}

TEST_CASE("small layouts are the obvious ones") {
  const Origami torus = origami::parse_origami_text(kTorusText);
  CHECK(origami::layout_cells(torus) ==
        std::map<SquareId, origami::GridCell>{{1, {0, 0}}});

  const Origami l = origami::parse_origami_text(kLText);
  CHECK(origami::layout_cells(l) ==
        std::map<SquareId, origami::GridCell>{
            {1, {0, 0}}, {2, {1, 0}}, {3, {0, 1}}});
}

TEST_CASE("svg output matches the checked-in golden drawings byte for byte") {
  const std::string golden_dir = std::string(ORIGAMI_DATA_DIR) + "/golden";

  const Origami torus = origami::parse_origami_text(kTorusText);
  CHECK(origami::render_svg(torus) == slurp(golden_dir + "/torus.svg"));

  const Origami l = origami::parse_origami_text(kLText);
  CHECK(origami::render_svg(l) == slurp(golden_dir + "/l.svg"));

  const Origami stair = origami::staircase_origami();
  const origami::Ball window = origami::ball(stair, 1, 4);
  CHECK(origami::render_svg(stair, window) ==
        slurp(golden_dir + "/staircase-ball4.svg"));

  // Rendering twice produces identical bytes.
  CHECK(origami::render_svg(l) == origami::render_svg(l));
}

// ------------------------------------------------------------ run_command

TEST_CASE("validate reports finite and countable origamis") {
  const std::string torus = scratch_file("torus.origami", kTorusText);
  const RunResult text = run({"validate", torus});
  CHECK(text.code == 0);
  CHECK(text.out.find("valid: yes") != std::string::npos);
  CHECK(text.out.find("kind: finite") != std::string::npos);

  const RunResult js = run({"--json", "validate", torus});
  CHECK(js.code == 0);
  const nlohmann::json j = checked_json(js.out);
  CHECK(j["command"] == "validate");
  CHECK(j["valid"] == true);
  CHECK(j["kind"] == "finite");
  CHECK(j["n"] == 1);

  const std::string stair =
      scratch_file("stair.origami", "n: countable staircase\n");
  const nlohmann::json cj = checked_json(run({"validate", stair, "--json"}).out);
  CHECK(cj["kind"] == "countable");
  CHECK(cj["name"] == "staircase");
  CHECK(cj["connected"] == "unknown");
  CHECK(cj["commutator_finite"] == "unknown");
  CHECK(cj["probed_through"] == 50);
}

TEST_CASE("invalid input exits with code 2 and a diagnostic") {
  const std::string bad =
      scratch_file("bad.origami", "n: 3\nsigma: (1,1)\ntau: (1,3)\n");
  const RunResult text = run({"validate", bad});
  CHECK(text.code == 2);
  CHECK(text.out.empty());
  CHECK(text.err.find("error:") != std::string::npos);

  const RunResult js = run({"--json", "validate", bad});
  CHECK(js.code == 2);
  const nlohmann::json j = checked_json(js.out);
  CHECK(j["command"] == "validate");
  CHECK(j["valid"] == false);
  CHECK(j["error"]["kind"] == "SemanticError");

  // A disconnected pair names a witness square in its message.
  const std::string disc =
      scratch_file("disc.origami", "n: 4\nsigma: (1,2)\ntau: (3,4)\n");
  const nlohmann::json dj = checked_json(run({"--json", "validate", disc}).out);
  CHECK(dj["error"]["kind"] == "NotConnected");

  CHECK(run({"validate", "/nonexistent/origami"}).code == 2);
}

TEST_CASE("usage problems exit with code 64") {
  CHECK(run({}).code == 64);
  CHECK(run({"validate"}).code == 64);          // missing the file argument
  CHECK(run({"frobnicate", "x"}).code == 64);   // unknown subcommand
  CHECK(run({"validate", "--nope", "f"}).code == 64);
  const RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("origami") != std::string::npos);
}

TEST_CASE("info reports the singular geometry of a finite origami") {
  const std::string l = scratch_file("l.origami", kLText);
  const nlohmann::json j = checked_json(run({"--json", "info", l}).out);
  CHECK(j["command"] == "info");
  CHECK(j["n"] == 3);
  CHECK(j["profile"] == nlohmann::json::array({3}));
  CHECK(j["euler_characteristic"] == -2);
  CHECK(j["genus"] == 2);
  REQUIRE(j["singularities"].size() == 1);
  CHECK(j["singularities"][0]["cycle"] == nlohmann::json::array({1, 3, 2}));
  CHECK(j["singularities"][0]["degree"] == 3);

  // Countable input is refused with an explanation.
  const std::string stair =
      scratch_file("stair.origami", "n: countable staircase\n");
  const RunResult r = run({"--json", "info", stair});
  CHECK(r.code == 2);
  CHECK(checked_json(r.out)["error"]["kind"] == "Unsupported");
}

TEST_CASE("aut is exact on finite origamis") {
  const std::string grid = scratch_file(
      "grid.origami", "n: 4\nsigma: (1,2)(3,4)\ntau: (1,3)(2,4)\n");
  const nlohmann::json j = checked_json(run({"--json", "aut", grid}).out);
  CHECK(j["kind"] == "exact");
  CHECK(j["order"] == 4);
  CHECK(j["automorphisms"].size() == 4);
}

TEST_CASE("aut runs a bounded search on the staircase") {
  const std::string stair =
      scratch_file("stair.origami", "n: countable staircase\n");
  const nlohmann::json j = checked_json(
      run({"--json", "aut", stair, "--radius", "6", "--seed-ball", "3"}).out);
  CHECK(j["kind"] == "bounded");
  CHECK(j["base"] == 1);
  CHECK(j["radius"] == 6);
  CHECK(j["seed_ball_radius"] == 3);
  CHECK(j["surviving"] == nlohmann::json::array({1}));
  // Every other seed was refuted at a shallow depth.
  for (const auto& v : j["verdicts"]) {
    if (v["seed"] == 1) {
      CHECK(v["outcome"] == "certified");
      CHECK(v["verified_radius"] == 6);
    } else {
      CHECK(v["outcome"] == "refuted");
      CHECK(v["depth"].get<std::int64_t>() <= 2);
    }
  }
}

TEST_CASE("cover builds the cylinder and reports a genus") {
  const std::string torus = scratch_file("torus.origami", kTorusText);
  const std::string volt = scratch_file("cyl.volt", "v 1 (1,2)\n");
  const nlohmann::json j =
      checked_json(run({"--json", "cover", torus, volt, "Z/2"}).out);
  CHECK(j["group"] == "perm: (1,2)");
  CHECK(j["base"]["kind"] == "finite");
  CHECK(j["flatness"]["flat"] == true);
  CHECK(j["connectivity"]["verdict"] == "connected");
  CHECK(j["cover"]["finite"] == true);
  CHECK(j["cover"]["squares"] == 2);
  CHECK(j["cover"]["profile"] == nlohmann::json::array({1, 1}));
  CHECK(j["cover"]["euler_characteristic"] == 0);
  CHECK(j["cover"]["genus"] == 1);
}

TEST_CASE("a branched cover is reported, not built") {
  const std::string torus = scratch_file("torus.origami", kTorusText);
  const std::string volt =
      scratch_file("branch.volt", "h 1 (1,2)\nv 1 (1,3)\n");
  const RunResult r = run({"--json", "cover", torus, volt, "S3"});
  CHECK(r.code == 2);
  const nlohmann::json j = checked_json(r.out);
  CHECK(j["flatness"]["flat"] == false);
  // The offending corner word is in the report.
  bool found_nonidentity = false;
  for (const auto& w : j["flatness"]["vertex_words"])
    if (w["identity"] == false) found_nonidentity = true;
  CHECK(found_nonidentity);
}

TEST_CASE("a disconnected cover is reported with a witness sheet") {
  const std::string torus = scratch_file("torus.origami", kTorusText);
  const std::string volt = scratch_file("empty.volt", "# nothing\n");
  const RunResult r = run({"--json", "cover", torus, volt, "Z/2"});
  CHECK(r.code == 0);  // a valid cover that happens to be disconnected
  const nlohmann::json j = checked_json(r.out);
  CHECK(j["connectivity"]["verdict"] == "disconnected");
  CHECK(j["connectivity"]["witness"] == 2);
}

TEST_CASE("cover handles a countable base through the holonomy") {
  const std::string stair =
      scratch_file("stair.origami", "n: countable staircase\n");
  const std::string volt = scratch_file("s3.volt", "v 1 (1,2)\nv 4 (1,3)\n");
  const nlohmann::json j =
      checked_json(run({"--json", "cover", stair, volt, "S3"}).out);
  CHECK(j["base"]["kind"] == "countable");
  CHECK(j["flatness"]["flat"] == true);
  CHECK(j["connectivity"]["verdict"] == "connected");
  CHECK(j["cover"]["finite"] == false);
}

TEST_CASE("staircase reports validation, balls and heuristics") {
  const nlohmann::json plain = checked_json(run({"--json", "staircase"}).out);
  CHECK(plain["command"] == "staircase");
  CHECK(plain["name"] == "staircase");
  CHECK(plain["validation"]["probed_through"] == 50);

  const nlohmann::json walled = checked_json(
      run({"--json", "staircase", "--ball", "2", "--heuristics", "2,4,6,8"})
          .out);
  CHECK(walled["ball"]["base"] == 1);
  CHECK(walled["ball"]["radius"] == 2);
  CHECK(walled["ball"]["squares"] == nlohmann::json::array({1, 2, 3, 4}));
  CHECK(walled["heuristics"]["radii"] == nlohmann::json::array({2, 4, 6, 8}));
  CHECK(walled["heuristics"]["counts"] == nlohmann::json::array({0, 1, 2, 3}));

  // The historical alias is accepted and reports the canonical name.
  const nlohmann::json alias = checked_json(run({"--json", "lemma1"}).out);
  CHECK(alias["name"] == "staircase");
}

TEST_CASE("realize emits exact certificates for finite groups") {
  const RunResult r = run({"--json", "realize", "S3"});
  CHECK(r.code == 0);
  const nlohmann::json j = checked_json(r.out);
  CHECK(j["kind"] == "finite");
  CHECK(j["certificate"] == "exact");
  CHECK(j["group_order"] == 6);
  CHECK(j["base_squares"] == 5);
  CHECK(j["cover_squares"] == 30);
  CHECK(j["set_equal"] == true);
  CHECK(j["aut_order"] == 6);
  CHECK(j["automorphisms"].size() == 6);
  CHECK(j["origami"]["n"] == 30);

  // The emitted origami is parseable and has the advertised size.
  const std::string text = "n: " + j["origami"]["n"].dump() + "\nsigma: " +
                           j["origami"]["sigma"].get<std::string>() +
                           "\ntau: " +
                           j["origami"]["tau"].get<std::string>() + "\n";
  CHECK(origami::parse_origami_text(text).size() == 30);
}

TEST_CASE("realize emits bounded certificates for countable groups") {
  const RunResult r = run({"--json", "realize", "Z^2", "--radius", "5"});
  CHECK(r.code == 0);
  const nlohmann::json j = checked_json(r.out);
  CHECK(j["kind"] == "countable");
  CHECK(j["certificate"] == "bounded");
  CHECK(j["radius"] == 5);
  CHECK(j["seeds_examined"] == 11);
  CHECK(j["refuted_seeds"] == 8);
  CHECK(j["max_refutation_depth"] == 2);
  CHECK(j["verified_deck_elems"] == 2);
  REQUIRE(j["scheme"].size() == 2);
  CHECK(j["scheme"][0]["edge"] == "v");
  CHECK(j["scheme"][0]["square"] == 1);
  CHECK(j["scheme"][0]["element"] == "(1,0)");
  CHECK(j["scheme"][1]["square"] == 4);
  CHECK(j["scheme"][1]["element"] == "(0,1)");
}

TEST_CASE("render writes files, streams to stdout and guards countables") {
  const std::string l = scratch_file("l.origami", kLText);
  const std::string out_path = scratch_file("l.svg", "");

  const RunResult to_file = run({"render", l, "-o", out_path});
  CHECK(to_file.code == 0);
  const std::string written = slurp(out_path);
  CHECK(written ==
        slurp(std::string(ORIGAMI_DATA_DIR) + "/golden/l.svg"));

  const RunResult to_stdout = run({"render", l, "-o", "-"});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out == written);

  const nlohmann::json j =
      checked_json(run({"--json", "render", l, "-o", out_path}).out);
  CHECK(j["command"] == "render");
  CHECK(j["squares"] == 3);
  CHECK(j["bytes"] == static_cast<std::int64_t>(written.size()));

  // A countable origami needs an explicit window.
  const std::string stair =
      scratch_file("stair.origami", "n: countable staircase\n");
  CHECK(run({"render", stair, "-o", out_path}).code == 64);
  CHECK(run({"render", stair, "-o", out_path, "--ball", "4"}).code == 0);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::string stair =
      scratch_file("stair.origami", "n: countable staircase\n");
  const std::vector<std::vector<std::string>> invocations = {
      {"--json", "realize", "Z", "--radius", "4"},
      {"--json", "staircase", "--heuristics", "2,4,6"},
      {"--json", "aut", stair, "--radius", "4"},
      {"--json", "validate", stair},
  };
  for (const auto& args : invocations) {
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
