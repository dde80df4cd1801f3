#include "qaw/cli.hpp"

#include "qaw/iso.hpp"
#include "qaw/json_io.hpp"
#include "qaw/normal.hpp"
#include "qaw/presentation.hpp"
#include "qaw/rewrite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace qaw {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

json poly_list(const Presentation& pres, const std::vector<NCPoly>& polys) {
  json arr = json::array();
  for (const NCPoly& f : polys) arr.push_back(poly_to_string(pres, f));
  return arr;
}

int cmd_nf(const std::string& algebra_path, const std::string& word_text, std::ostream& out) {
  const Presentation pres = load_presentation(algebra_path);
  const Word w = parse_word(pres, word_text);
  out << poly_to_string(pres, normal_form(pres, poly_monomial(w))) << "\n";
  return 0;
}

int cmd_iso(const std::string& left_path, const std::string& right_path, bool witness,
            std::ostream& out) {
  const Presentation left = load_presentation(left_path);
  const Presentation right = load_presentation(right_path);
  const IsoCertificate cert = decide_isomorphism(left, right, witness);
  emit(out, certificate_to_json(cert));
  return cert.isomorphic ? 0 : 1;
}

int cmd_normal(const std::string& algebra_path, bool chain, int falsify_trials, int max_steps,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const Presentation pres = load_presentation(algebra_path);
  const std::vector<NCPoly> normals = find_normal_degree_one(pres);
  json doc;
  doc["normal_elements"] = poly_list(pres, normals);
  int code = 0;
  if (chain) {
    doc["chain"] = chain_to_json(pres, iterative_chain(pres, max_steps));
  }
  if (falsify_trials >= 0) {
    const FalsificationReport report =
        falsify_completeness(pres, normals, falsify_trials, seed);
    doc["falsification"] = falsification_to_json(pres, report);
    err << "seed: " << seed << "\n";
    if (!report.counterexamples.empty()) code = 1;
  }
  emit(out, doc);
  return code;
}

int cmd_hilbert(const std::string& algebra_path, int max_degree, std::ostream& out) {
  const Presentation pres = load_presentation(algebra_path);
  const std::vector<Int> dims = hilbert_dims(pres, max_degree);
  json doc;
  json rows = json::array();
  for (int d = 0; d <= max_degree; ++d) {
    json row;
    row["degree"] = d;
    row["dim"] = dims[d].str();
    row["brute_checked"] = hilbert_brute_checkable(pres.generator_count(), d);
    rows.push_back(std::move(row));
  }
  doc["dims"] = std::move(rows);
  doc["growth_exponent"] = growth_exponent(pres);
  emit(out, doc);
  return 0;
}

int cmd_confluence(const std::string& algebra_path, std::ostream& out) {
  const Presentation pres = load_presentation(algebra_path);
  const ConfluenceReport report = check_confluence(pres);
  emit(out, confluence_to_json(pres, report));
  return report.all_resolved() ? 0 : 1;
}

int cmd_validate(const std::string& algebra_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(algebra_path);
  if (!in) {
    err << "cannot open spec file: " << algebra_path << "\n";
    return 2;
  }
  json raw;
  try {
    in >> raw;
  } catch (const std::exception& e) {
    err << "not valid JSON: " << e.what() << "\n";
    return 2;
  }
  json doc;
  try {
    const Presentation pres = presentation_from_json(raw);
    doc["valid"] = true;
    doc["diagnostics"] = json::array();
    doc["confluent"] = check_confluence(pres).all_resolved();
    emit(out, doc);
    return 0;
  } catch (const std::exception& e) {
    doc["valid"] = false;
    doc["diagnostics"] = json::array({e.what()});
    emit(out, doc);
    return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for quadratic graded algebras: normal forms, "
               "confluence, dimensions, normal elements, isomorphism certificates."};
  app.require_subcommand(1);

  std::string algebra_path, left_path, right_path, word_text;
  bool witness = false;
  bool chain = false;
  int falsify_trials = -1;
  int max_degree = 6;
  int max_steps = 64;
  std::uint64_t seed = 0;

  CLI::App* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("--algebra", algebra_path, "algebra spec file")->required();
  nf->add_option("--word", word_text, "space-separated generator names (\"\" = unit)")
      ->required();

  CLI::App* iso = app.add_subcommand("iso", "Decide isomorphism of two algebras");
  iso->add_option("--left", left_path, "left algebra spec file")->required();
  iso->add_option("--right", right_path, "right algebra spec file")->required();
  iso->add_flag("--witness", witness, "include the verified witness matrix");
  iso->add_option("--seed", seed, "unused; accepted for interface uniformity");

  CLI::App* normal = app.add_subcommand("normal", "Degree-1 normal elements");
  normal->add_option("--algebra", algebra_path, "algebra spec file")->required();
  normal->add_flag("--chain", chain, "iterate quotients by the normal elements found");
  normal->add_option("--falsify", falsify_trials, "sample this many random off-span elements");
  normal->add_option("--seed", seed, "sampling seed (default 0, printed when sampling)");
  normal->add_option("--max-steps", max_steps, "chain step limit (default 64)");

  CLI::App* hilbert = app.add_subcommand("hilbert", "Graded dimension table");
  hilbert->add_option("--algebra", algebra_path, "algebra spec file")->required();
  hilbert->add_option("--max-degree", max_degree, "largest degree to report (default 6)");

  CLI::App* confluence = app.add_subcommand("confluence", "Overlap resolution report");
  confluence->add_option("--algebra", algebra_path, "algebra spec file")->required();

  CLI::App* validate = app.add_subcommand("validate", "Check a spec file");
  validate->add_option("--algebra", algebra_path, "algebra spec file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(nf)) return cmd_nf(algebra_path, word_text, out);
    if (app.got_subcommand(iso)) return cmd_iso(left_path, right_path, witness, out);
    if (app.got_subcommand(normal)) {
      return cmd_normal(algebra_path, chain, falsify_trials, max_steps, seed, out, err);
    }
    if (app.got_subcommand(hilbert)) return cmd_hilbert(algebra_path, max_degree, out);
    if (app.got_subcommand(confluence)) return cmd_confluence(algebra_path, out);
    if (app.got_subcommand(validate)) return cmd_validate(algebra_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace qaw
