#include "qaw/json_io.hpp"

#include "qaw/rational.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaw {

namespace {

using nlohmann::json;

void require_fields(const json& doc, const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
  if (!doc.is_object()) throw std::invalid_argument("spec: document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!required.count(key) && !optional.count(key)) {
      throw std::invalid_argument("spec: unknown field \"" + key + "\"");
    }
  }
  for (const std::string& key : required) {
    if (!doc.contains(key)) throw std::invalid_argument("spec: missing field \"" + key + "\"");
  }
}

Rational rational_field(const json& value, const std::string& where) {
  if (!value.is_string()) {
    throw std::invalid_argument("spec: " + where + " must be a rational string");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::exception& e) {
    throw std::invalid_argument("spec: " + where + ": " + e.what());
  }
}

int int_field(const json& doc, const std::string& key) {
  if (!doc.at(key).is_number_integer()) {
    throw std::invalid_argument("spec: \"" + key + "\" must be an integer");
  }
  return doc.at(key).get<int>();
}

ParamMatrix param_matrix_field(const json& doc, int n) {
  const json& rows = doc.at("p");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("spec: \"p\" must be an array of " + std::to_string(n) + " rows");
  }
  ParamMatrix p;
  p.n = n;
  p.entries.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("spec: \"p\" row " + std::to_string(i + 1) + " must have " +
                                  std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      p.entries[i][j] = rational_field(rows[i][j], "\"p\"[" + std::to_string(i + 1) + "][" +
                                                       std::to_string(j + 1) + "]");
    }
  }
  return p;
}

GammaVector gamma_field(const json& doc, int n) {
  const json& arr = doc.at("gamma");
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    throw std::invalid_argument("spec: \"gamma\" must be an array of " + std::to_string(n) +
                                " rational strings");
  }
  GammaVector g;
  g.n = n;
  g.entries.resize(n);
  for (int i = 0; i < n; ++i) {
    g.entries[i] = rational_field(arr[i], "\"gamma\"[" + std::to_string(i + 1) + "]");
  }
  return g;
}

Presentation custom_from_json(const json& doc) {
  require_fields(doc, {"family", "generators", "rules"}, {});
  const json& gens = doc.at("generators");
  if (!gens.is_array() || gens.empty()) {
    throw std::invalid_argument("spec: \"generators\" must be a non-empty array of names");
  }
  std::vector<std::string> names;
  for (const json& g : gens) {
    if (!g.is_string()) throw std::invalid_argument("spec: generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  const auto rank_of = [&names](const json& value, const std::string& where) {
    if (value.is_string()) {
      for (size_t k = 0; k < names.size(); ++k) {
        if (names[k] == value.get<std::string>()) return static_cast<int>(k);
      }
    }
    throw std::invalid_argument("spec: " + where + " must name a declared generator");
  };

  std::vector<Rule> rules;
  for (const json& r : doc.at("rules")) {
    require_fields(r, {"lhs", "rhs"}, {});
    const json& lhs = r.at("lhs");
    if (!lhs.is_array() || lhs.size() != 2) {
      throw std::invalid_argument("spec: rule \"lhs\" must be a pair of generator names");
    }
    Rule rule;
    rule.lhs_hi = rank_of(lhs[0], "rule lhs[0]");
    rule.lhs_lo = rank_of(lhs[1], "rule lhs[1]");
    for (const json& term : r.at("rhs")) {
      require_fields(term, {"coeff", "word"}, {});
      Word w;
      for (const json& letter : term.at("word")) w.push_back(rank_of(letter, "rhs word letter"));
      rule.rhs.add_term(w, rational_field(term.at("coeff"), "rule rhs coeff"));
    }
    rules.push_back(std::move(rule));
  }
  return make_custom(std::move(names), std::move(rules));
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& entry : row) r.push_back(rational_to_string(entry));
    rows.push_back(std::move(r));
  }
  return rows;
}

json poly_strings(const Presentation& pres, const std::vector<NCPoly>& polys) {
  json arr = json::array();
  for (const NCPoly& f : polys) arr.push_back(poly_to_string(pres, f));
  return arr;
}

}  // namespace

Presentation presentation_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("family") || !doc.at("family").is_string()) {
    throw std::invalid_argument("spec: required string field \"family\" is missing");
  }
  const std::string family = doc.at("family").get<std::string>();
  if (family == "custom") return custom_from_json(doc);

  if (family == "quantum_affine") {
    require_fields(doc, {"family", "n", "p"}, {});
    return make_quantum_affine(param_matrix_field(doc, int_field(doc, "n")));
  }
  if (family == "homogenized_weyl") {
    require_fields(doc, {"family", "n", "p", "gamma"}, {});
    const int n = int_field(doc, "n");
    return make_homogenized_weyl(param_matrix_field(doc, n), gamma_field(doc, n));
  }
  if (family == "quantum_matrix") {
    require_fields(doc, {"family", "n", "p", "lambda"}, {});
    const int n = int_field(doc, "n");
    return make_quantum_matrix(rational_field(doc.at("lambda"), "\"lambda\""),
                               param_matrix_field(doc, n));
  }
  throw std::invalid_argument("spec: unknown family \"" + family + "\"");
}

json presentation_to_json(const Presentation& pres) {
  json doc;
  doc["family"] = family_name(pres.family);
  if (pres.family == Family::Custom) {
    doc["generators"] = pres.generator_names;
    json rules = json::array();
    for (const Rule& rule : pres.rules) {
      json r;
      r["lhs"] = {pres.generator_names[rule.lhs_hi], pres.generator_names[rule.lhs_lo]};
      json rhs = json::array();
      for (const auto& [w, c] : rule.rhs.terms) {
        json term;
        term["coeff"] = rational_to_string(c);
        json word = json::array();
        for (int rank : w) word.push_back(pres.generator_names[rank]);
        term["word"] = std::move(word);
        rhs.push_back(std::move(term));
      }
      r["rhs"] = std::move(rhs);
      rules.push_back(std::move(r));
    }
    doc["rules"] = std::move(rules);
    return doc;
  }
  doc["n"] = pres.family_n;
  if (pres.p) {
    json rows = json::array();
    for (int i = 1; i <= pres.p->n; ++i) {
      json row = json::array();
      for (int j = 1; j <= pres.p->n; ++j) row.push_back(rational_to_string(pres.p->at(i, j)));
      rows.push_back(std::move(row));
    }
    doc["p"] = std::move(rows);
  }
  if (pres.gamma) {
    json arr = json::array();
    for (int i = 1; i <= pres.gamma->n; ++i) arr.push_back(rational_to_string(pres.gamma->at(i)));
    doc["gamma"] = std::move(arr);
  }
  if (pres.lambda) doc["lambda"] = rational_to_string(*pres.lambda);
  return doc;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("spec: " + path + ": " + e.what());
  }
  return presentation_from_json(doc);
}

json certificate_to_json(const IsoCertificate& cert) {
  json doc;
  doc["isomorphic"] = cert.isomorphic;
  if (cert.isomorphic) {
    json witness;
    witness["kind"] = cert.witness_kind;
    if (cert.sigma) {
      json arr = json::array();
      for (int v : *cert.sigma) arr.push_back(v + 1);  // 1-based in files
      witness["sigma"] = std::move(arr);
    }
    if (cert.epsilon) witness["epsilon"] = *cert.epsilon;
    if (cert.qma_case) witness["case"] = *cert.qma_case;
    if (cert.scalars) {
      json arr = json::array();
      for (const Rational& s : *cert.scalars) arr.push_back(rational_to_string(s));
      witness["scalars"] = std::move(arr);
    }
    if (cert.map) witness["matrix"] = matrix_to_json(cert.map->matrix);
    if (cert.inverse_matrix) witness["inverse_matrix"] = matrix_to_json(*cert.inverse_matrix);
    doc["witness"] = std::move(witness);
  }
  json obstructions = json::array();
  for (const auto& item : cert.obstructions.items) {
    obstructions.push_back({{"kind", item.kind}, {"detail", item.detail}});
  }
  doc["obstructions"] = std::move(obstructions);
  if (cert.note) doc["note"] = *cert.note;
  return doc;
}

json chain_to_json(const Presentation& start, const ChainReport& report) {
  json doc;
  json steps = json::array();
  const Presentation* current = &start;
  for (const ChainStep& step : report.steps) {
    json s;
    s["step"] = step.index;
    s["killed"] = poly_strings(*current, step.killed);
    s["quotient_generators"] = step.quotient.generator_names;
    steps.push_back(std::move(s));
    current = &step.quotient;
  }
  doc["steps"] = std::move(steps);
  json final_info;
  final_info["generators"] = current->generator_names;
  if (report.plane_parameter) {
    final_info["plane_parameter"] = rational_to_string(*report.plane_parameter);
  }
  if (report.plane_parameter_equals_first_gamma) {
    final_info["plane_parameter_equals_first_gamma"] = *report.plane_parameter_equals_first_gamma;
  }
  if (report.plane_parameter_equals_last_gamma) {
    final_info["plane_parameter_equals_last_gamma"] = *report.plane_parameter_equals_last_gamma;
  }
  doc["final"] = std::move(final_info);
  return doc;
}

json falsification_to_json(const Presentation& pres, const FalsificationReport& report) {
  json doc;
  doc["trials"] = report.trials;
  doc["seed"] = report.seed;
  doc["counterexamples"] = poly_strings(pres, report.counterexamples);
  return doc;
}

json confluence_to_json(const Presentation& pres, const ConfluenceReport& report) {
  json doc;
  doc["confluent"] = report.all_resolved();
  doc["overlaps"] = report.overlaps.size();
  doc["resolved"] = report.resolved_count();
  json unresolved = json::array();
  for (const OverlapResult& overlap : report.overlaps) {
    if (overlap.resolved) continue;
    json o;
    o["word"] = word_to_string(pres, {overlap.c, overlap.b, overlap.a});
    o["leftmost"] = poly_to_string(pres, overlap.leftmost_nf);
    o["rightmost"] = poly_to_string(pres, overlap.rightmost_nf);
    unresolved.push_back(std::move(o));
  }
  doc["unresolved"] = std::move(unresolved);
  return doc;
}

}  // namespace qaw
