#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gentop/gtf.hpp"
#include "gentop/gtff.hpp"
#include "gentop/gtn.hpp"
#include "gentop/ifs.hpp"
#include "gentop/bisim.hpp"

namespace gentop {

// Malformed or ill-typed input (unparseable files, unknown world
// names, wrong shapes). Distinct from semantic invalidity, which is a
// ValidationReport matter.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ModelKind { Gtf, Gtn, Gtff, Gtfi, Sgt };

std::string kind_name(ModelKind k);

struct ModelFile {
  ModelKind kind = ModelKind::Gtf;
  std::string name;  // optional
  std::vector<std::string> worlds;
  std::variant<GTFModel, GTNModel, GTFFModel, StrongModel> payload;
  GTNLoadInfo gtn_info;  // meaningful for GTN files

  const GTFModel& gtf() const { return std::get<GTFModel>(payload); }
  const GTNModel& gtn() const { return std::get<GTNModel>(payload); }
  const GTFFModel& gtff() const { return std::get<GTFFModel>(payload); }
  const StrongModel& sgt() const { return std::get<StrongModel>(payload); }

  NameTable names() const { return NameTable{&worlds}; }
  int universe_size() const { return static_cast<int>(worlds.size()); }
};

// Throws InputError on malformed input. The GTF loader materializes
// determined families for worlds of ⋃μ when they are omitted; present
// entries are kept as written and judged by the validator. The GTN
// loader superset-closes families within ⋃N and records whether that
// added sets.
ModelFile parse_model(const nlohmann::json& j);
ModelFile load_model_file(const std::string& path);

nlohmann::json model_to_json(const ModelFile& m);
// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string to_canonical_text(const nlohmann::json& j);
void save_model_file(const ModelFile& m, const std::string& path);

ValidationReport validate_model(const ModelFile& m);

// Relation as [["a","x"],...], map as {"a":"x",...}, with world names
// resolved against the two model files.
WorldRelation parse_relation(const nlohmann::json& j, const ModelFile& left,
                             const ModelFile& right);
nlohmann::json relation_to_json(const WorldRelation& rel,
                                const ModelFile& left, const ModelFile& right);
ModelMap parse_map(const nlohmann::json& j, const ModelFile& left,
                   const ModelFile& right);

// Formula helpers shared by reports.
nlohmann::json report_to_json(const ValidationReport& r);

}  // namespace gentop
