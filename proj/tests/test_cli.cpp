#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaw/cli.hpp"
#include "qaw/json_io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

/// Self-cleaning directory of algebra description files for CLI runs.
struct SpecDir {
  fs::path dir;
  SpecDir() {
    dir = fs::temp_directory_path() / ("qaw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~SpecDir() { fs::remove_all(dir); }

  std::string write(const std::string& name, const json& spec) {
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << spec.dump(2);
    return p.string();
  }
  std::string write_raw(const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << text;
    return p.string();
  }
};

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = qaw::run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

json weyl2() {
  return json{{"family", "homogenized_weyl"},
              {"n", 2},
              {"gamma", json::array({"2", "3"})},
              {"p", json::array({json::array({"1", "5"}), json::array({"1/5", "1"})})}};
}

json plane(const std::string& q) {
  json inv = "1/" + q;
  if (q.find('/') != std::string::npos) inv = q.substr(q.find('/') + 1) + "/" + q.substr(0, q.find('/'));
  return json{{"family", "quantum_affine"},
              {"n", 2},
              {"p", json::array({json::array({"1", q}), json::array({inv.get<std::string>(), "1"})})}};
}

/// A deliberately non-confluent custom system: overlap cba resolves two ways.
json broken_custom() {
  const auto rule = [](const char* hi, const char* lo, json rhs) {
    return json{{"lhs", json::array({hi, lo})}, {"rhs", std::move(rhs)}};
  };
  return json{
      {"family", "custom"},
      {"generators", json::array({"a", "b", "c"})},
      {"rules",
       json::array({rule("b", "a", json::array({{{"coeff", "2"}, {"word", json::array({"a", "b"})}}})),
                    rule("c", "a", json::array({{{"coeff", "3"}, {"word", json::array({"a", "c"})}}})),
                    rule("c", "b",
                         json::array({{{"coeff", "1"}, {"word", json::array({"b", "c"})}},
                                      {{"coeff", "1"}, {"word", json::array({"a", "a"})}}}))})}};
}

}  // namespace

TEST_CASE("nf subcommand prints exact normal forms") {
  SpecDir specs;
  const std::string h2 = specs.write("h2.json", weyl2());
  const std::string pl = specs.write("plane.json", plane("2"));

  RunResult r = run({"nf", "--algebra", pl, "--word", "x2 x1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1/2*x1 x2\n");

  r = run({"nf", "--algebra", h2, "--word", "x1 y1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "z z + 2*y1 x1\n");

  // Unknown generator name is an input error.
  r = run({"nf", "--algebra", pl, "--word", "bogus"});
  CHECK(r.rc == 2);
  CHECK(r.out.empty());
  CHECK(!r.err.empty());

  // Unreadable algebra file is an input error.
  r = run({"nf", "--algebra", (specs.dir / "missing.json").string(), "--word", "x1"});
  CHECK(r.rc == 2);
}

TEST_CASE("iso subcommand: exit codes and witness JSON") {
  SpecDir specs;
  const std::string a = specs.write("a.json", plane("2"));
  const std::string b = specs.write("b.json", plane("1/2"));
  const std::string c = specs.write("c.json", plane("3"));

  RunResult r = run({"iso", "--left", a, "--right", b, "--witness"});
  CHECK(r.rc == 0);
  const json cert = json::parse(r.out);
  CHECK(cert.at("isomorphic") == true);
  CHECK(cert.at("witness").at("kind") == "permutation");
  CHECK(cert.at("witness").at("sigma") == json::array({2, 1}));
  CHECK(cert.at("witness").contains("matrix"));
  CHECK(cert.at("witness").contains("inverse_matrix"));

  r = run({"iso", "--left", a, "--right", c});
  CHECK(r.rc == 1);
  const json neg = json::parse(r.out);
  CHECK(neg.at("isomorphic") == false);
  CHECK(!neg.at("obstructions").empty());

  // Cross-family comparison is an input error, not a NO.
  const std::string h2 = specs.write("h2.json", weyl2());
  r = run({"iso", "--left", a, "--right", h2});
  CHECK(r.rc == 2);
}

TEST_CASE("normal subcommand: finder, chain, falsifier") {
  SpecDir specs;
  const std::string h2 = specs.write("h2.json", weyl2());

  RunResult r = run({"normal", "--algebra", h2});
  CHECK(r.rc == 0);
  json found = json::parse(r.out);
  CHECK(found.at("normal_elements") == json::array({"z"}));

  r = run({"normal", "--algebra", h2, "--chain"});
  CHECK(r.rc == 0);
  json chain = json::parse(r.out).at("chain");
  REQUIRE(chain.at("steps").size() == 3);
  CHECK(chain.at("steps").at(0).at("killed") == json::array({"z"}));
  CHECK(chain.at("steps").at(1).at("killed") == json::array({"y1", "x1"}));
  CHECK(chain.at("steps").at(2).at("killed") == json::array({"y2", "x2"}));
  CHECK(chain.at("final").at("generators") == json::array());
  CHECK(!chain.at("final").contains("plane_parameter"));

  r = run({"normal", "--algebra", h2, "--chain", "--max-steps", "2"});
  CHECK(r.rc == 0);
  chain = json::parse(r.out).at("chain");
  CHECK(chain.at("steps").size() == 2);
  CHECK(chain.at("final").at("generators") == json::array({"y2", "x2"}));
  CHECK(chain.at("final").at("plane_parameter") == "3");
  CHECK(chain.at("final").at("plane_parameter_equals_first_gamma") == false);
  CHECK(chain.at("final").at("plane_parameter_equals_last_gamma") == true);

  r = run({"normal", "--algebra", h2, "--falsify", "100"});
  CHECK(r.rc == 0);
  json fal = json::parse(r.out).at("falsification");
  CHECK(fal.at("trials") == 100);
  CHECK(fal.at("seed") == 0);
  CHECK(fal.at("counterexamples") == json::array());
  CHECK(r.err.find("seed: 0") != std::string::npos);

  // Seeds echo and change the run deterministically.
  RunResult r7 = run({"normal", "--algebra", h2, "--falsify", "50", "--seed", "7"});
  CHECK(r7.rc == 0);
  CHECK(r7.err.find("seed: 7") != std::string::npos);
  RunResult r7b = run({"normal", "--algebra", h2, "--falsify", "50", "--seed", "7"});
  CHECK(r7b.out == r7.out);
}

TEST_CASE("hilbert subcommand: dimensions and the confluence precondition") {
  SpecDir specs;
  const std::string pl = specs.write("plane.json", plane("2"));

  RunResult r = run({"hilbert", "--algebra", pl, "--max-degree", "4"});
  CHECK(r.rc == 0);
  const json h = json::parse(r.out);
  REQUIRE(h.at("dims").size() == 5);
  for (int d = 0; d <= 4; ++d) {
    CHECK(h.at("dims").at(d).at("degree") == d);
    CHECK(h.at("dims").at(d).at("dim") == std::to_string(d + 1));
  }
  CHECK(h.at("growth_exponent") == 2);
  // Low positive degrees carry an independent brute-force confirmation marker.
  CHECK(h.at("dims").at(1).at("brute_checked") == true);
  CHECK(h.at("dims").at(3).at("brute_checked") == true);

  const std::string bad = specs.write("bad.json", broken_custom());
  r = run({"hilbert", "--algebra", bad, "--max-degree", "3"});
  CHECK(r.rc == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("confluence subcommand reports overlap resolution") {
  SpecDir specs;
  const std::string h2 = specs.write("h2.json", weyl2());
  RunResult r = run({"confluence", "--algebra", h2});
  CHECK(r.rc == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("confluent") == true);
  CHECK(rep.at("overlaps") == 10);
  CHECK(rep.at("unresolved") == json::array());

  const std::string bad = specs.write("bad.json", broken_custom());
  r = run({"confluence", "--algebra", bad});
  CHECK(r.rc == 1);
  rep = json::parse(r.out);
  CHECK(rep.at("confluent") == false);
  REQUIRE(rep.at("unresolved").size() == 1);
  CHECK(rep.at("unresolved").at(0).at("word") == "c b a");
  CHECK(rep.at("unresolved").at(0).contains("leftmost"));
  CHECK(rep.at("unresolved").at(0).contains("rightmost"));
}

TEST_CASE("validate subcommand: acceptance, rejection, and diagnostics") {
  SpecDir specs;

  RunResult r = run({"validate", "--algebra", specs.write("h2.json", weyl2())});
  CHECK(r.rc == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("valid") == true);
  CHECK(rep.at("confluent") == true);

  // Valid but non-confluent custom input still validates.
  r = run({"validate", "--algebra", specs.write("bad.json", broken_custom())});
  CHECK(r.rc == 0);
  rep = json::parse(r.out);
  CHECK(rep.at("valid") == true);
  CHECK(rep.at("confluent") == false);

  // Degenerate quantum-matrix scalar: rejected with a pointer to the right family.
  json degenerate = {{"family", "quantum_matrix"},
                     {"n", 2},
                     {"lambda", "1"},
                     {"p", json::array({json::array({"1", "3"}), json::array({"1/3", "1"})})}};
  r = run({"validate", "--algebra", specs.write("deg.json", degenerate)});
  CHECK(r.rc == 1);
  rep = json::parse(r.out);
  CHECK(rep.at("valid") == false);
  REQUIRE(!rep.at("diagnostics").empty());
  const std::string joined = rep.at("diagnostics").dump();
  CHECK(joined.find("quantum affine") != std::string::npos);

  // Unknown fields are named in the rejection.
  json extra = weyl2();
  extra["color"] = "blue";
  r = run({"validate", "--algebra", specs.write("extra.json", extra)});
  CHECK(r.rc == 1);
  rep = json::parse(r.out);
  CHECK(rep.at("diagnostics").dump().find("color") != std::string::npos);

  // Garbage and missing files are I/O errors, not schema rejections.
  CHECK(run({"validate", "--algebra", specs.write_raw("junk.json", "not json {")}).rc == 2);
  CHECK(run({"validate", "--algebra", (specs.dir / "nope.json").string()}).rc == 2);
}

TEST_CASE("top-level argument handling") {
  CHECK(run({"--help"}).rc == 0);
  CHECK(run({}).rc == 2);
  CHECK(run({"frobnicate"}).rc == 2);

  SpecDir specs;
  // Round trip: parse, re-emit, re-parse gives an identical description.
  const std::string h2 = specs.write("h2.json", weyl2());
  const qaw::Presentation p1 = qaw::load_presentation(h2);
  const std::string again = specs.write("h2b.json", qaw::presentation_to_json(p1));
  const qaw::Presentation p2 = qaw::load_presentation(again);
  CHECK(qaw::presentation_to_json(p1) == qaw::presentation_to_json(p2));
}
