// Command-line front end: validate model files, evaluate formulas,
// run the model transformations, check and compute bisimulations,
// search for countermodels, and generate example or random models.
//
// Exit codes: 0 success, 1 semantic failure (invalid model, no
// bisimulation, countermodel search exhausted), 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gentop/bisim.hpp"
#include "gentop/generate.hpp"
#include "gentop/gtff.hpp"
#include "gentop/gtn.hpp"
#include "gentop/ifs.hpp"
#include "gentop/json_io.hpp"
#include "gentop/search.hpp"

using nlohmann::json;
using namespace gentop;

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputError = 2;

std::vector<std::string> letter_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    if (n <= 26)
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      out.push_back("w" + std::to_string(i));
  }
  return out;
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << to_canonical_text(doc);
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << to_canonical_text(doc);
  }
}

std::vector<std::string> split_vars(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int lookup_world(const ModelFile& m, const std::string& name) {
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    if (m.worlds[i] == name) return static_cast<int>(i);
  throw InputError("unknown world name '" + name + "'");
}

json set_names(const WorldSet& s, const ModelFile& m) {
  json out = json::array();
  s.for_each(
      [&](int w) { out.push_back(m.worlds[static_cast<std::size_t>(w)]); });
  return out;
}

// Truth set of a formula in whatever model the file holds. SGT files
// are read through their in-fact-strong lift, which also interprets
// the bullet.
WorldSet eval_in_model(const ModelFile& m, const FormulaPtr& f) {
  switch (m.kind) {
    case ModelKind::Gtf:
      return truth_set(m.gtf(), f);
    case ModelKind::Gtn:
      return truth_set_gtn(m.gtn(), f);
    case ModelKind::Gtff:
    case ModelKind::Gtfi:
      return truth_set_gtff(m.gtff(), f);
    case ModelKind::Sgt: {
      GTFModel lifted = strong_to_ifs(m.sgt());
      return truth_set(lifted, f);
    }
  }
  throw InputError("unsupported model kind");
}

int require_valid(const ModelFile& m) {
  ValidationReport report = validate_model(m);
  if (!report.valid()) {
    std::cerr << "model is invalid:\n" << report.to_string();
    return kSemanticFailure;
  }
  return kOk;
}

int run_validate(const std::string& path, bool as_json) {
  ModelFile m = load_model_file(path);
  ValidationReport report = validate_model(m);
  if (as_json) {
    json doc = report_to_json(report);
    doc["kind"] = kind_name(m.kind);
    if (m.kind == ModelKind::Gtn)
      doc["closure_added_sets"] = m.gtn_info.closure_added_sets;
    std::cout << to_canonical_text(doc);
  } else {
    if (report.valid())
      std::cout << "valid " << kind_name(m.kind) << " model\n";
    else
      std::cout << report.to_string();
    if (m.kind == ModelKind::Gtn && m.gtn_info.closure_added_sets)
      std::cout << "note: superset closure added neighbourhoods on load\n";
  }
  return report.valid() ? kOk : kSemanticFailure;
}

int run_eval(const std::string& path, const std::string& formula_text,
             const std::string& world, bool as_json) {
  ModelFile m = load_model_file(path);
  if (int rc = require_valid(m)) return rc;
  FormulaPtr f = parse_formula(formula_text);
  WorldSet t = eval_in_model(m, f);
  if (!world.empty()) {
    bool holds = t.test(lookup_world(m, world));
    if (as_json) {
      json doc = {
          {"formula", to_text(f)}, {"world", world}, {"forces", holds}};
      std::cout << to_canonical_text(doc);
    } else {
      std::cout << (holds ? "true" : "false") << "\n";
    }
  } else {
    if (as_json) {
      json doc = {{"formula", to_text(f)}, {"truth_set", set_names(t, m)}};
      std::cout << to_canonical_text(doc);
    } else {
      std::cout << m.names().set(t) << "\n";
    }
  }
  return kOk;
}

// Per-world pointwise-equivalence certificate: each world passes when
// no enumerated formula distinguishes the two readings there.
struct Certificate {
  long formulas_checked = 0;
  std::vector<std::string> worlds;          // display names
  std::vector<bool> world_pass;
  std::vector<std::string> first_mismatch;  // per failing world

  bool pass() const {
    for (bool ok : world_pass)
      if (!ok) return false;
    return true;
  }
};

json certificate_to_json(const Certificate& c, int max_nodes) {
  json worlds = json::object();
  for (std::size_t i = 0; i < c.worlds.size(); ++i) {
    if (c.world_pass[i])
      worlds[c.worlds[i]] = "pass";
    else
      worlds[c.worlds[i]] = {{"status", "fail"},
                             {"formula", c.first_mismatch[i]}};
  }
  return {{"equivalent", c.pass()},
          {"formulas_checked", c.formulas_checked},
          {"max_nodes", max_nodes},
          {"worlds", worlds}};
}

// Pointwise agreement of two truth-set oracles over an enumeration.
template <class EvalA, class EvalB>
Certificate compare_pointwise(const ModelFile& names, int universe,
                              const std::vector<std::string>& vars,
                              int max_nodes, unsigned ops, EvalA eval_a,
                              EvalB eval_b) {
  Certificate cert;
  cert.worlds = names.worlds;
  cert.world_pass.assign(static_cast<std::size_t>(universe), true);
  cert.first_mismatch.assign(static_cast<std::size_t>(universe), "");
  FormulaEnumerator en(vars, max_nodes, ops);
  while (auto f = en.next()) {
    ++cert.formulas_checked;
    WorldSet a = eval_a(*f);
    WorldSet b = eval_b(*f);
    if (a == b) continue;
    WorldSet diff = (a - b) | (b - a);
    diff.for_each([&](int w) {
      auto i = static_cast<std::size_t>(w);
      if (cert.world_pass[i]) {
        cert.world_pass[i] = false;
        cert.first_mismatch[i] = to_text(*f);
      }
    });
  }
  return cert;
}

int run_transform(const std::string& path, const std::string& target,
                  const std::string& out_path,
                  const std::vector<std::string>& vars, int max_nodes,
                  bool as_json) {
  ModelFile m = load_model_file(path);
  if (int rc = require_valid(m)) return rc;
  ModelFile out;
  out.worlds = m.worlds;
  Certificate cert;
  if (target == "gtf") {
    if (m.kind != ModelKind::Gtn)
      throw InputError("transform --to gtf expects a gtn model");
    GTFModel g = gtn_to_gtf(m.gtn());
    GTFEvaluator eg(g);
    GTNEvaluator en(m.gtn());
    cert = compare_pointwise(
        m, m.universe_size(), vars, max_nodes, kOpBox,
        [&](const FormulaPtr& f) { return en.truth_set(f); },
        [&](const FormulaPtr& f) { return eg.truth_set(f); });
    out.kind = ModelKind::Gtf;
    out.payload = std::move(g);
  } else if (target == "gtn") {
    if (m.kind != ModelKind::Gtf)
      throw InputError("transform --to gtn expects a gtf model");
    GTNModel g = gtf_to_gtn(m.gtf());
    GTFEvaluator em(m.gtf());
    GTNEvaluator eg(g);
    cert = compare_pointwise(
        m, m.universe_size(), vars, max_nodes, kOpBox,
        [&](const FormulaPtr& f) { return em.truth_set(f); },
        [&](const FormulaPtr& f) { return eg.truth_set(f); });
    out.kind = ModelKind::Gtn;
    out.payload = std::move(g);
  } else if (target == "strong") {
    if (m.kind != ModelKind::Gtf)
      throw InputError("transform --to strong expects a gtf model "
                       "(read with the bullet modality)");
    StrongModel s = ifs_to_strong(m.gtf());
    GTFModel lifted = strong_to_ifs(s);
    GTFEvaluator em(m.gtf());
    GTFEvaluator es(lifted);
    cert = compare_pointwise(
        m, m.universe_size(), vars, max_nodes, kOpBullet,
        [&](const FormulaPtr& f) { return em.truth_set(f); },
        [&](const FormulaPtr& f) {
          return es.truth_set(swap_modality(f, Conn::Bullet, Conn::Box));
        });
    out.kind = ModelKind::Sgt;
    out.payload = std::move(s);
  } else if (target == "ifs") {
    if (m.kind != ModelKind::Sgt)
      throw InputError("transform --to ifs expects an sgt model");
    GTFModel g = strong_to_ifs(m.sgt());
    GTFModel box_side = g;  // same structure, read with the plain box
    GTFEvaluator em(box_side);
    GTFEvaluator eg(g);
    cert = compare_pointwise(
        m, m.universe_size(), vars, max_nodes, kOpBullet,
        [&](const FormulaPtr& f) {
          return em.truth_set(swap_modality(f, Conn::Bullet, Conn::Box));
        },
        [&](const FormulaPtr& f) { return eg.truth_set(f); });
    out.kind = ModelKind::Gtf;
    out.payload = std::move(g);
  } else {
    throw InputError("unknown transform target '" + target + "'");
  }

  if (!out_path.empty()) emit(model_to_json(out), out_path);
  if (as_json) {
    json doc = {{"target", target},
                {"certificate", certificate_to_json(cert, max_nodes)}};
    if (out_path.empty()) doc["model"] = model_to_json(out);
    std::cout << to_canonical_text(doc);
  } else {
    if (out_path.empty()) std::cout << to_canonical_text(model_to_json(out));
    std::cout << "certificate: "
              << (cert.pass() ? "pointwise equivalent" : "MISMATCH")
              << " over " << cert.formulas_checked << " formulas (max nodes "
              << max_nodes << ")\n";
    for (std::size_t i = 0; i < cert.worlds.size(); ++i)
      if (!cert.world_pass[i])
        std::cout << "  " << cert.worlds[i] << ": fails on "
                  << cert.first_mismatch[i] << "\n";
  }
  return cert.pass() ? kOk : kSemanticFailure;
}

int run_bisim(const std::string& path1, const std::string& path2, int kind,
              const std::string& relation_path, bool largest,
              const std::string& map_path, bool equiv,
              const std::vector<std::string>& vars, int max_nodes,
              const std::string& out_path, bool as_json) {
  ModelFile mf1 = load_model_file(path1);
  ModelFile mf2 = load_model_file(path2);
  if (mf1.kind != ModelKind::Gtf || mf2.kind != ModelKind::Gtf)
    throw InputError("bisim expects two gtf models");
  if (int rc = require_valid(mf1)) return rc;
  if (int rc = require_valid(mf2)) return rc;
  const GTFModel& m1 = mf1.gtf();
  const GTFModel& m2 = mf2.gtf();

  json doc = json::object();
  doc["kind"] = kind;
  int rc = kOk;
  std::optional<WorldRelation> rel;

  if (!map_path.empty()) {
    std::ifstream in(map_path);
    if (!in) throw InputError("cannot open '" + map_path + "'");
    json jm;
    try {
      in >> jm;
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed JSON map: ") + e.what());
    }
    ModelMap f = parse_map(jm, mf1, mf2);
    MapProperties props = map_properties(f, m1.frame(), m2.frame());
    doc["map_properties"] = {{"continuous", props.continuous},
                             {"open", props.open},
                             {"F_continuous", props.f_continuous},
                             {"F_open", props.f_open}};
    auto [pulled, graph] = bisim_from_map(kind, f, m1.frame(), m2);
    ValidationReport check = is_bisimulation(kind, pulled, m2, graph,
                                             mf1.names(), mf2.names());
    doc["relation"] = relation_to_json(graph, mf1, mf2);
    doc["bisimulation"] = report_to_json(check);
    rel = graph;
    if (!check.valid()) rc = kSemanticFailure;
  } else if (largest) {
    rel = largest_bisimulation(kind, m1, m2);
    if (!rel) {
      if (as_json) {
        doc["relation"] = nullptr;
        std::cout << to_canonical_text(doc);
      } else {
        std::cout << "none\n";
      }
      return kSemanticFailure;
    }
    doc["relation"] = relation_to_json(*rel, mf1, mf2);
  } else {
    if (relation_path.empty())
      throw InputError("bisim needs --relation, --largest or --map");
    std::ifstream in(relation_path);
    if (!in) throw InputError("cannot open '" + relation_path + "'");
    json jr;
    try {
      in >> jr;
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed JSON relation: ") + e.what());
    }
    rel = parse_relation(jr, mf1, mf2);
    ValidationReport check =
        is_bisimulation(kind, m1, m2, *rel, mf1.names(), mf2.names());
    doc["bisimulation"] = report_to_json(check);
    if (!check.valid()) rc = kSemanticFailure;
  }

  if (equiv && rel) {
    if (kind >= 1 && (!is_consistent(m1) || !is_consistent(m2))) {
      doc["warning"] =
          "equivalence theorems assume consistent models (no empty set in "
          "any family); hypothesis unmet";
    }
    ModalLanguage lang =
        kind == 2 ? ModalLanguage::Bullet : ModalLanguage::Box;
    json pairs = json::array();
    bool all_equivalent = true;
    for (auto [w, v] : rel->pairs) {
      EquivalenceReport rep =
          modal_equivalence(m1, w, m2, v, vars, max_nodes, lang);
      json entry = {{"left", mf1.worlds[static_cast<std::size_t>(w)]},
                    {"right", mf2.worlds[static_cast<std::size_t>(v)]},
                    {"equivalent", rep.equivalent}};
      if (!rep.equivalent) {
        entry["distinguishing"] = to_text(rep.distinguishing);
        all_equivalent = false;
      }
      pairs.push_back(entry);
    }
    doc["equivalence"] = pairs;
    if (!all_equivalent) rc = kSemanticFailure;
  }

  if (!out_path.empty() && rel) emit(relation_to_json(*rel, mf1, mf2), out_path);
  if (as_json) {
    std::cout << to_canonical_text(doc);
  } else {
    if (doc.contains("map_properties"))
      std::cout << "map properties: " << doc["map_properties"].dump() << "\n";
    if (rel) {
      std::cout << "relation: " << relation_to_json(*rel, mf1, mf2).dump()
                << "\n";
    }
    if (doc.contains("bisimulation")) {
      std::cout << "bisimulation check: "
                << (doc["bisimulation"]["valid"].get<bool>() ? "pass" : "FAIL")
                << "\n";
      for (const auto& viol : doc["bisimulation"]["violations"])
        std::cout << "  " << viol["rule"].get<std::string>() << ": "
                  << viol["witness"].get<std::string>() << "\n";
    }
    if (doc.contains("warning"))
      std::cout << "warning: " << doc["warning"].get<std::string>() << "\n";
    if (doc.contains("equivalence"))
      for (const auto& e : doc["equivalence"])
        std::cout << "equivalence " << e["left"].get<std::string>() << " ~ "
                  << e["right"].get<std::string>() << ": "
                  << (e["equivalent"].get<bool>() ? "pass" : "FAIL") << "\n";
  }
  return rc;
}

int run_search(const std::string& schema_str, const std::string& class_str,
               const SearchConfig& cfg, const std::string& out_path,
               bool as_json) {
  auto schema = schema_from_name(schema_str);
  if (!schema) throw InputError("unknown schema '" + schema_str + "'");
  auto cls = frame_class_from_name(class_str);
  if (!cls) throw InputError("unknown frame class '" + class_str + "'");
  auto result = search_countermodel(*schema, *cls, cfg);
  if (!result) {
    if (as_json) {
      json doc = {{"schema", schema_str},
                  {"class", class_str},
                  {"found", false},
                  {"budget", cfg.budget}};
      std::cout << to_canonical_text(doc);
    } else {
      std::cout << "no counterexample found\n";
    }
    return kSemanticFailure;
  }
  json model = model_to_json(result->model);
  if (!out_path.empty()) emit(model, out_path);
  json doc = {{"schema", schema_str},
              {"class", class_str},
              {"found", true},
              {"instance", to_text(result->instance)},
              {"world",
               result->model.worlds[static_cast<std::size_t>(result->world)]},
              {"iteration", result->iteration}};
  if (out_path.empty()) doc["model"] = model;
  if (as_json) {
    std::cout << to_canonical_text(doc);
  } else {
    std::cout << "countermodel found: " << to_text(result->instance)
              << " fails at "
              << result->model.worlds[static_cast<std::size_t>(result->world)]
              << (result->iteration < 0
                      ? std::string(" (exhaustive sweep)")
                      : " (iteration " + std::to_string(result->iteration) +
                            ")")
              << "\n";
    if (out_path.empty()) std::cout << to_canonical_text(model);
  }
  return kOk;
}

ModelFile wrap_gtf(GTFModel g, std::vector<std::string> names) {
  ModelFile out;
  out.kind = ModelKind::Gtf;
  out.worlds = std::move(names);
  out.payload = std::move(g);
  return out;
}

int run_generate(const std::string& id, int worlds, int length,
                 const std::string& forbidden, const std::string& kind_str,
                 const SearchConfig& cfg, const std::string& out_path) {
  ModelFile out;
  if (id == "ex1") {
    out = wrap_gtf(make_gtf_model(example_1(), {}, {}), letter_names(3));
  } else if (id == "ex2") {
    out = wrap_gtf(make_gtf_model(example_2(), {}, {}), letter_names(3));
  } else if (id == "ex4") {
    auto names = letter_names(worlds);
    WorldSet x(worlds);
    for (const auto& name : split_vars(forbidden)) {
      bool ok = false;
      for (int i = 0; i < worlds; ++i)
        if (names[static_cast<std::size_t>(i)] == name) {
          x.set(i);
          ok = true;
        }
      if (!ok) throw InputError("unknown forbidden world '" + name + "'");
    }
    out = wrap_gtf(make_gtf_model(forbidden_space(worlds, x), {}, {}), names);
  } else if (id == "ex5") {
    GenTopology chain = chain_space(length);
    std::vector<std::string> names;
    for (int i = 0; i < chain.universe_size; ++i)
      names.push_back("w" + std::to_string(i));
    out = wrap_gtf(make_gtf_model(chain, {}, {}), names);
  } else if (id == "random") {
    Rng rng(cfg.seed);
    if (kind_str == "gtf" || kind_str == "gtf-consistent") {
      GTFModel g = random_gtf(rng, cfg, kind_str == "gtf-consistent");
      out = wrap_gtf(std::move(g), {});
    } else if (kind_str == "ifs") {
      out = wrap_gtf(random_ifs(rng, cfg), {});
    } else if (kind_str == "gtn") {
      GTNModel g = random_gtn(rng, cfg);
      out.kind = ModelKind::Gtn;
      out.worlds = letter_names(g.universe_size);
      out.payload = std::move(g);
    } else if (kind_str == "gtff" || kind_str == "gtfi") {
      GTFFModel g = random_gtff(rng, cfg, kind_str == "gtfi");
      out.kind = kind_str == "gtff" ? ModelKind::Gtff : ModelKind::Gtfi;
      out.worlds = letter_names(g.topology.universe_size);
      out.payload = std::move(g);
    } else if (kind_str == "sgt") {
      StrongModel g = random_strong(rng, cfg);
      out.kind = ModelKind::Sgt;
      out.worlds = letter_names(g.topology.universe_size);
      out.payload = std::move(g);
    } else {
      throw InputError("unknown random kind '" + kind_str + "'");
    }
    if (out.worlds.empty())
      out.worlds = letter_names(std::get<GTFModel>(out.payload)
                                    .topology.universe_size);
  } else {
    throw InputError("unknown example id '" + id + "'");
  }
  emit(model_to_json(out), out_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for modal logics over generalized "
               "topological spaces"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON reports");

  std::string vars_spec = "p,q";
  int max_nodes = 5;
  app.add_option("--vars", vars_spec, "comma-separated variable names");
  app.add_option("--max-nodes", max_nodes, "formula size bound for "
                                           "certificates and reports");

  SearchConfig cfg;
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--budget", cfg.budget, "search iteration budget");
  app.add_option("--max-worlds", cfg.max_worlds, "world bound for random "
                                                 "models");
  app.add_option("--max-opens", cfg.max_opens, "open-set bound for random "
                                               "models");
  app.add_option("--var-count", cfg.var_count,
                 "number of variables in random valuations");

  auto* v = app.add_subcommand("validate", "validate a model file");
  v->fallthrough();
  std::string v_file;
  v->add_option("file", v_file)->required();

  auto* e = app.add_subcommand("eval", "evaluate a formula in a model");
  e->fallthrough();
  std::string e_file, e_formula, e_world;
  e->add_option("file", e_file)->required();
  e->add_option("formula", e_formula)->required();
  e->add_option("--world", e_world, "report the verdict at one world");

  auto* t = app.add_subcommand("transform",
                               "translate a model into another class");
  t->fallthrough();
  std::string t_file, t_target, t_out;
  t->add_option("file", t_file)->required();
  t->add_option("--to", t_target, "gtf | gtn | strong | ifs")->required();
  t->add_option("-o,--output", t_out, "write the transformed model here");

  auto* b = app.add_subcommand("bisim", "check or compute bisimulations");
  b->fallthrough();
  std::string b_file1, b_file2, b_rel, b_map, b_out;
  int b_kind = 0;
  bool b_largest = false, b_equiv = false;
  b->add_option("file1", b_file1)->required();
  b->add_option("file2", b_file2)->required();
  b->add_option("--kind", b_kind, "0, 1 or 2")->required();
  b->add_option("--relation", b_rel, "relation file to check");
  b->add_flag("--largest", b_largest, "compute the largest bisimulation");
  b->add_option("--map", b_map, "build the relation from a map file");
  b->add_flag("--equiv", b_equiv, "check modal equivalence of related "
                                  "pairs");
  b->add_option("-o,--output", b_out, "write the relation here");

  auto* s = app.add_subcommand("search", "look for a countermodel");
  s->fallthrough();
  std::string s_schema, s_class = "gtf", s_out;
  s->add_option("schema", s_schema,
                "M C T D K 4 N bullet-T GJ M-black")->required();
  s->add_option("--class", s_class,
                "gtf | gtf-consistent | strong | gtff | gtfi");
  s->add_option("-o,--output", s_out, "write the countermodel here");

  auto* g = app.add_subcommand("generate", "emit an example or random model");
  g->fallthrough();
  std::string g_id, g_forbidden, g_kind = "gtf", g_out;
  int g_worlds = 3, g_length = 3;
  g->add_option("id", g_id, "ex1 | ex2 | ex4 | ex5 | random")->required();
  g->add_option("--worlds", g_worlds, "universe size for ex4");
  g->add_option("--length", g_length, "chain length for ex5");
  g->add_option("--forbidden", g_forbidden,
                "forbidden worlds for ex4 (comma-separated)");
  g->add_option("--kind", g_kind,
                "random kind: gtf | gtf-consistent | gtn | gtff | gtfi | "
                "sgt | ifs");
  g->add_option("-o,--output", g_out, "write the model here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kInputError;
  }

  try {
    std::vector<std::string> vars = split_vars(vars_spec);
    if (v->parsed()) return run_validate(v_file, as_json);
    if (e->parsed()) return run_eval(e_file, e_formula, e_world, as_json);
    if (t->parsed())
      return run_transform(t_file, t_target, t_out, vars, max_nodes, as_json);
    if (b->parsed())
      return run_bisim(b_file1, b_file2, b_kind, b_rel, b_largest, b_map,
                       b_equiv, vars, max_nodes, b_out, as_json);
    if (s->parsed()) return run_search(s_schema, s_class, cfg, s_out, as_json);
    if (g->parsed())
      return run_generate(g_id, g_worlds, g_length, g_forbidden, g_kind, cfg,
                          g_out);
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  } catch (const FormulaParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  } catch (const UnsupportedOperator& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  }
  return kOk;
}
