#include "gentop/search.hpp"

#include <algorithm>

namespace gentop {

namespace {

struct Stop {};  // early exit from the exhaustive drivers

std::vector<std::string> default_world_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

bool uses(const FormulaPtr& f, Conn k) {
  if (f->kind == k) return true;
  if (f->left && uses(f->left, k)) return true;
  if (f->right && uses(f->right, k)) return true;
  return false;
}

int first_missing(const WorldSet& t) {
  return t.complement().members().front();
}

}  // namespace

std::optional<FrameClass> frame_class_from_name(const std::string& name) {
  if (name == "gtf") return FrameClass::Gtf;
  if (name == "gtf-consistent") return FrameClass::GtfConsistent;
  if (name == "strong") return FrameClass::Strong;
  if (name == "gtff") return FrameClass::Gtff;
  if (name == "gtfi") return FrameClass::Gtfi;
  return std::nullopt;
}

std::string frame_class_name(FrameClass c) {
  switch (c) {
    case FrameClass::Gtf: return "gtf";
    case FrameClass::GtfConsistent: return "gtf-consistent";
    case FrameClass::Strong: return "strong";
    case FrameClass::Gtff: return "gtff";
    case FrameClass::Gtfi: return "gtfi";
  }
  return "?";
}

std::optional<Countermodel> search_countermodel(SchemaId schema,
                                                FrameClass frame_class,
                                                const SearchConfig& cfg) {
  if (cfg.budget < 0 || cfg.max_worlds < 1 || cfg.max_opens < 1 ||
      cfg.var_count < 0 || cfg.max_nodes < 1)
    throw InputError("search: bounds must be positive");
  const AxiomSchema& sch = axiom_schema(schema);
  std::map<std::string, FormulaPtr> subst;
  std::vector<std::string> vars;
  if (!sch.metavars.empty()) {
    subst["phi"] = Formula::var("p");
    vars.push_back("p");
  }
  if (sch.metavars.size() > 1) {
    subst["psi"] = Formula::var("q");
    vars.push_back("q");
  }
  FormulaPtr instance = instantiate(sch, subst);

  bool gtff_class =
      frame_class == FrameClass::Gtff || frame_class == FrameClass::Gtfi;
  FormulaPtr core = expanded(instance);
  if (uses(core, Conn::BlackBox) && !gtff_class)
    throw InputError("schema " + schema_name(schema) +
                     " needs the two-modality models (class gtff or gtfi)");
  if (uses(core, Conn::Bullet) && gtff_class)
    throw InputError("schema " + schema_name(schema) +
                     " is not interpretable in the two-modality models");

  std::optional<Countermodel> found;

  auto record_gtf = [&](const GTFModel& m, long iteration) {
    WorldSet t = truth_set(m, instance);
    if (t == WorldSet::full(m.topology.universe_size)) return false;
    ModelFile file;
    file.kind = frame_class == FrameClass::Strong ? ModelKind::Sgt
                                                  : ModelKind::Gtf;
    file.worlds = default_world_names(m.topology.universe_size);
    if (frame_class == FrameClass::Strong)
      file.payload = StrongModel{m.topology, m.valuation};
    else
      file.payload = m;
    found = Countermodel{std::move(file), instance, first_missing(t),
                         iteration};
    return true;
  };
  auto record_gtff = [&](const GTFFModel& m, long iteration) {
    WorldSet t = truth_set_gtff(m, instance);
    if (t == WorldSet::full(m.topology.universe_size)) return false;
    ModelFile file;
    file.kind = frame_class == FrameClass::Gtfi ? ModelKind::Gtfi
                                                : ModelKind::Gtff;
    file.worlds = default_world_names(m.topology.universe_size);
    file.payload = m;
    found = Countermodel{std::move(file), instance, first_missing(t),
                         iteration};
    return true;
  };

  // Exhaustive sweep over small models first, so a hit is minimal.
  try {
    switch (frame_class) {
      case FrameClass::Gtf:
      case FrameClass::GtfConsistent:
        for_each_gtf_model(3, 8, 2, vars, [&](const GTFModel& m) {
          if (frame_class == FrameClass::GtfConsistent && !is_consistent(m))
            return;
          if (record_gtf(m, -1)) throw Stop{};
        });
        break;
      case FrameClass::Strong:
        for (int n = 1; n <= 3; ++n)
          for (const auto& topo : enumerate_topologies(n))
            if (is_strong(topo)) {
              GTFModel base = strong_to_ifs(StrongModel{topo, {}});
              std::uint64_t per = std::uint64_t{1} << n;
              std::uint64_t total = 1;
              for (std::size_t i = 0; i < vars.size(); ++i) total *= per;
              for (std::uint64_t combo = 0; combo < total; ++combo) {
                GTFModel m = base;
                std::uint64_t c = combo;
                for (const auto& var : vars) {
                  m.valuation[var] = WorldSet::from_bits(n, c % per);
                  c /= per;
                }
                if (record_gtf(m, -1)) throw Stop{};
              }
            }
        break;
      case FrameClass::Gtff:
      case FrameClass::Gtfi:
        for_each_gtff_model(2, 6, 1, vars, frame_class == FrameClass::Gtfi,
                            [&](const GTFFModel& m) {
                              if (record_gtff(m, -1)) throw Stop{};
                            });
        break;
    }
  } catch (const Stop&) {
    return found;
  }

  // Seeded random phase.
  Rng rng(cfg.seed);
  for (long it = 0; it < cfg.budget; ++it) {
    switch (frame_class) {
      case FrameClass::Gtf:
        if (record_gtf(random_gtf(rng, cfg, false), it)) return found;
        break;
      case FrameClass::GtfConsistent:
        if (record_gtf(random_gtf(rng, cfg, true), it)) return found;
        break;
      case FrameClass::Strong: {
        StrongModel s = random_strong(rng, cfg);
        if (record_gtf(strong_to_ifs(s), it)) return found;
        break;
      }
      case FrameClass::Gtff:
        if (record_gtff(random_gtff(rng, cfg, false), it)) return found;
        break;
      case FrameClass::Gtfi:
        if (record_gtff(random_gtff(rng, cfg, true), it)) return found;
        break;
    }
  }
  return std::nullopt;
}

}  // namespace gentop
