#include "gentop/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace gentop {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw InputError(msg); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

struct WorldIndex {
  std::map<std::string, int> by_name;
  int n = 0;

  explicit WorldIndex(const std::vector<std::string>& worlds) {
    n = static_cast<int>(worlds.size());
    for (int i = 0; i < n; ++i) {
      if (!by_name.emplace(worlds[static_cast<std::size_t>(i)], i).second)
        bad("duplicate world name '" + worlds[static_cast<std::size_t>(i)] +
            "'");
    }
  }

  int operator[](const std::string& name) const {
    auto it = by_name.find(name);
    if (it == by_name.end()) bad("unknown world name '" + name + "'");
    return it->second;
  }
};

std::vector<std::string> parse_worlds(const json& j) {
  if (!j.is_array() || j.empty()) bad("'worlds' must be a nonempty array");
  std::vector<std::string> out;
  for (const auto& w : j) {
    if (!w.is_string()) bad("world names must be strings");
    out.push_back(w.get<std::string>());
  }
  if (out.size() > WorldSet::kMaxWorlds) bad("too many worlds (max 64)");
  return out;
}

WorldSet parse_set(const json& j, const WorldIndex& idx) {
  if (!j.is_array()) bad("a world set must be an array of names");
  WorldSet s(idx.n);
  for (const auto& w : j) {
    if (!w.is_string()) bad("world names must be strings");
    s.set(idx[w.get<std::string>()]);
  }
  return s;
}

std::vector<WorldSet> parse_family(const json& j, const WorldIndex& idx) {
  if (!j.is_array()) bad("a set family must be an array of sets");
  std::vector<WorldSet> out;
  for (const auto& s : j) out.push_back(parse_set(s, idx));
  return out;
}

GenTopology parse_topology_object(const json& j,
                                  std::vector<std::string>& worlds_out) {
  worlds_out = parse_worlds(field(j, "worlds"));
  WorldIndex idx(worlds_out);
  auto fam = parse_family(field(j, "opens"), idx);
  fam.push_back(WorldSet(idx.n));  // ∅ may be omitted on input
  return GenTopology{idx.n, canonical_family(fam)};
}

Valuation parse_valuation(const json& j, const WorldIndex& idx) {
  if (!j.is_object()) bad("'valuation' must map variables to world arrays");
  Valuation v;
  for (const auto& [key, val] : j.items()) v[key] = parse_set(val, idx);
  return v;
}

json set_to_json(const WorldSet& s, const std::vector<std::string>& worlds) {
  json out = json::array();
  s.for_each(
      [&](int w) { out.push_back(worlds[static_cast<std::size_t>(w)]); });
  return out;
}

json family_to_json(const std::vector<WorldSet>& fam,
                    const std::vector<std::string>& worlds) {
  json out = json::array();
  for (const auto& s : canonical_family(fam))
    out.push_back(set_to_json(s, worlds));
  return out;
}

json valuation_to_json(const Valuation& v,
                       const std::vector<std::string>& worlds) {
  json out = json::object();
  for (const auto& [key, set] : v) out[key] = set_to_json(set, worlds);
  return out;
}

json topology_to_json(const GenTopology& t,
                      const std::vector<std::string>& worlds) {
  json out = json::object();
  out["worlds"] = worlds;
  out["opens"] = family_to_json(t.opens, worlds);
  return out;
}

GTFModel parse_gtf_payload(const json& j, std::vector<std::string>& worlds) {
  GenTopology topo = parse_topology_object(field(j, "topology"), worlds);
  WorldIndex idx(worlds);
  WorldSet covered = topo.union_of_opens();
  std::vector<std::vector<WorldSet>> F(worlds.size());
  // Determined families are materialized; explicit entries are kept as
  // written so the validator can judge them.
  for (int w = 0; w < idx.n; ++w)
    if (covered.test(w))
      F[static_cast<std::size_t>(w)] = determined_family(topo, w);
  if (j.contains("F")) {
    const json& jf = field(j, "F");
    if (!jf.is_object()) bad("'F' must map worlds to families of opens");
    for (const auto& [name, fam] : jf.items()) {
      int w = idx[name];
      F[static_cast<std::size_t>(w)] = canonical_family(parse_family(fam, idx));
    }
  }
  Valuation v;
  if (j.contains("valuation")) v = parse_valuation(field(j, "valuation"), idx);
  return GTFModel{std::move(topo), std::move(F), std::move(v)};
}

GTNModel parse_gtn_payload(const json& j, std::vector<std::string>& worlds,
                           GTNLoadInfo* info) {
  worlds = parse_worlds(field(j, "worlds"));
  WorldIndex idx(worlds);
  std::vector<std::vector<WorldSet>> families(worlds.size());
  if (j.contains("N")) {
    const json& jn = field(j, "N");
    if (!jn.is_object()) bad("'N' must map worlds to set families");
    for (const auto& [name, fam] : jn.items())
      families[static_cast<std::size_t>(idx[name])] = parse_family(fam, idx);
  }
  Valuation v;
  if (j.contains("valuation")) v = parse_valuation(field(j, "valuation"), idx);
  return make_gtn_model(idx.n, families, std::move(v), info);
}

GTFFModel parse_gtff_payload(const json& j, std::vector<std::string>& worlds) {
  GenTopology topo = parse_topology_object(field(j, "topology"), worlds);
  WorldIndex idx(worlds);
  GTFFModel m;
  m.topology = std::move(topo);
  m.y1 = parse_set(field(j, "Y1"), idx);
  m.y2 = j.contains("Y2") ? parse_set(j.at("Y2"), idx) : m.y1.complement();
  m.link.assign(worlds.size(), -1);
  if (j.contains("f")) {
    const json& jf = field(j, "f");
    if (!jf.is_object()) bad("'f' must map worlds to worlds");
    for (const auto& [from, to] : jf.items()) {
      if (!to.is_string()) bad("'f' targets must be world names");
      m.link[static_cast<std::size_t>(idx[from])] = idx[to.get<std::string>()];
    }
  }
  m.n_domain = WorldSet(idx.n);
  m.N.assign(worlds.size(), {});
  if (j.contains("N")) {
    const json& jn = field(j, "N");
    if (!jn.is_object()) bad("'N' must map worlds to set families");
    for (const auto& [name, fam] : jn.items()) {
      int w = idx[name];
      m.n_domain.set(w);
      m.N[static_cast<std::size_t>(w)] =
          canonical_family(parse_family(fam, idx));
    }
  }
  if (j.contains("valuation"))
    m.valuation = parse_valuation(field(j, "valuation"), idx);
  return m;
}

StrongModel parse_sgt_payload(const json& j, std::vector<std::string>& worlds) {
  GenTopology topo = parse_topology_object(field(j, "topology"), worlds);
  WorldIndex idx(worlds);
  Valuation v;
  if (j.contains("valuation")) v = parse_valuation(field(j, "valuation"), idx);
  return StrongModel{std::move(topo), std::move(v)};
}

}  // namespace

std::string kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Gtf: return "gtf";
    case ModelKind::Gtn: return "gtn";
    case ModelKind::Gtff: return "gtff";
    case ModelKind::Gtfi: return "gtfi";
    case ModelKind::Sgt: return "sgt";
  }
  return "?";
}

ModelFile parse_model(const nlohmann::json& j) {
  if (!j.is_object()) bad("a model file must be a JSON object");
  std::string kind = field(j, "kind").get<std::string>();
  ModelFile m;
  if (j.contains("name")) m.name = j.at("name").get<std::string>();
  if (kind == "gtf") {
    m.kind = ModelKind::Gtf;
    m.payload = parse_gtf_payload(j, m.worlds);
  } else if (kind == "gtn") {
    m.kind = ModelKind::Gtn;
    m.payload = parse_gtn_payload(j, m.worlds, &m.gtn_info);
  } else if (kind == "gtff" || kind == "gtfi") {
    m.kind = kind == "gtff" ? ModelKind::Gtff : ModelKind::Gtfi;
    m.payload = parse_gtff_payload(j, m.worlds);
  } else if (kind == "sgt") {
    m.kind = ModelKind::Sgt;
    m.payload = parse_sgt_payload(j, m.worlds);
  } else {
    bad("unknown model kind '" + kind + "'");
  }
  return m;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_model(j);
}

nlohmann::json model_to_json(const ModelFile& m) {
  json out = json::object();
  out["kind"] = kind_name(m.kind);
  if (!m.name.empty()) out["name"] = m.name;
  switch (m.kind) {
    case ModelKind::Gtf: {
      const auto& g = m.gtf();
      out["topology"] = topology_to_json(g.topology, m.worlds);
      WorldSet covered = g.topology.union_of_opens();
      json jf = json::object();
      for (int w = 0; w < g.topology.universe_size; ++w)
        if (!covered.test(w))
          jf[m.worlds[static_cast<std::size_t>(w)]] =
              family_to_json(g.F[static_cast<std::size_t>(w)], m.worlds);
      out["F"] = jf;
      out["valuation"] = valuation_to_json(g.valuation, m.worlds);
      break;
    }
    case ModelKind::Gtn: {
      const auto& g = m.gtn();
      out["worlds"] = m.worlds;
      json jn = json::object();
      for (int w = 0; w < g.universe_size; ++w) {
        // The minimal members plus ⋃N (itself always a member of a
        // nonempty closed family) pin the family exactly on reload.
        auto fam = g.minimal[static_cast<std::size_t>(w)];
        if (!fam.empty()) fam.push_back(g.union_of_n());
        jn[m.worlds[static_cast<std::size_t>(w)]] =
            family_to_json(fam, m.worlds);
      }
      out["N"] = jn;
      out["valuation"] = valuation_to_json(g.valuation, m.worlds);
      break;
    }
    case ModelKind::Gtff:
    case ModelKind::Gtfi: {
      const auto& g = m.gtff();
      out["topology"] = topology_to_json(g.topology, m.worlds);
      out["Y1"] = set_to_json(g.y1, m.worlds);
      out["Y2"] = set_to_json(g.y2, m.worlds);
      json jf = json::object();
      g.y1.for_each([&](int w) {
        int v = g.link[static_cast<std::size_t>(w)];
        if (v >= 0)
          jf[m.worlds[static_cast<std::size_t>(w)]] =
              m.worlds[static_cast<std::size_t>(v)];
      });
      out["f"] = jf;
      json jn = json::object();
      g.n_domain.for_each([&](int w) {
        jn[m.worlds[static_cast<std::size_t>(w)]] =
            family_to_json(g.N[static_cast<std::size_t>(w)], m.worlds);
      });
      out["N"] = jn;
      out["valuation"] = valuation_to_json(g.valuation, m.worlds);
      break;
    }
    case ModelKind::Sgt: {
      const auto& g = m.sgt();
      out["topology"] = topology_to_json(g.topology, m.worlds);
      out["valuation"] = valuation_to_json(g.valuation, m.worlds);
      break;
    }
  }
  return out;
}

std::string to_canonical_text(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

void save_model_file(const ModelFile& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) bad("cannot write '" + path + "'");
  out << to_canonical_text(model_to_json(m));
}

ValidationReport validate_model(const ModelFile& m) {
  NameTable names = m.names();
  switch (m.kind) {
    case ModelKind::Gtf: {
      const auto& g = m.gtf();
      ValidationReport r =
          validate_topology(g.topology.universe_size, g.topology.opens, names);
      if (!r.valid()) return r;
      return validate_gtf(g, names);
    }
    case ModelKind::Gtn:
      return validate_gtn(m.gtn(), names);
    case ModelKind::Gtff:
    case ModelKind::Gtfi: {
      const auto& g = m.gtff();
      ValidationReport r =
          validate_topology(g.topology.universe_size, g.topology.opens, names);
      if (!r.valid()) return r;
      return m.kind == ModelKind::Gtff ? validate_gtff(g, names)
                                       : validate_gtfi(g, names);
    }
    case ModelKind::Sgt: {
      const auto& g = m.sgt();
      ValidationReport r =
          validate_topology(g.topology.universe_size, g.topology.opens, names);
      if (!r.valid()) return r;
      if (!is_strong(g.topology))
        r.add("strong", "the whole universe is not open");
      for (const auto& [var, set] : g.valuation)
        if (set.universe_size() != g.topology.universe_size)
          r.add("valuation",
                "valuation of '" + var + "' does not fit the universe");
      return r;
    }
  }
  return {};
}

WorldRelation parse_relation(const nlohmann::json& j, const ModelFile& left,
                             const ModelFile& right) {
  if (!j.is_array()) bad("a relation must be an array of [left,right] pairs");
  WorldIndex li(left.worlds);
  WorldIndex ri(right.worlds);
  WorldRelation rel;
  rel.left_universe = li.n;
  rel.right_universe = ri.n;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) bad("relation pairs must have size 2");
    rel.insert(li[p[0].get<std::string>()], ri[p[1].get<std::string>()]);
  }
  return rel;
}

nlohmann::json relation_to_json(const WorldRelation& rel,
                                const ModelFile& left,
                                const ModelFile& right) {
  json out = json::array();
  for (auto [w, v] : rel.pairs)
    out.push_back(json::array({left.worlds[static_cast<std::size_t>(w)],
                               right.worlds[static_cast<std::size_t>(v)]}));
  return out;
}

ModelMap parse_map(const nlohmann::json& j, const ModelFile& left,
                   const ModelFile& right) {
  if (!j.is_object()) bad("a map must be an object of name -> name");
  WorldIndex li(left.worlds);
  WorldIndex ri(right.worlds);
  ModelMap f;
  f.to.assign(left.worlds.size(), -1);
  for (const auto& [from, to] : j.items()) {
    if (!to.is_string()) bad("map targets must be world names");
    f.to[static_cast<std::size_t>(li[from])] = ri[to.get<std::string>()];
  }
  for (std::size_t w = 0; w < f.to.size(); ++w)
    if (f.to[w] < 0)
      bad("map is not total: no entry for '" + left.worlds[w] + "'");
  return f;
}

nlohmann::json report_to_json(const ValidationReport& r) {
  json out = json::object();
  out["valid"] = r.valid();
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back({{"rule", viol.rule}, {"witness", viol.witness}});
  out["violations"] = v;
  return out;
}

}  // namespace gentop
