#include "gentop/bisim.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentop {

bool WorldRelation::contains(int w, int v) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{w, v});
}

void WorldRelation::insert(int w, int v) {
  auto p = std::pair{w, v};
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) pairs.insert(it, p);
}

namespace {

// Side tables for one direction of the relation.
struct RelSides {
  int left_n;
  int right_n;
  std::vector<WorldSet> right_of;  // per left world: related right worlds
  std::vector<WorldSet> left_of;   // per right world: related left worlds

  RelSides(const WorldRelation& rel)
      : left_n(rel.left_universe), right_n(rel.right_universe) {
    right_of.assign(static_cast<std::size_t>(left_n), WorldSet(right_n));
    left_of.assign(static_cast<std::size_t>(right_n), WorldSet(left_n));
    for (auto [w, v] : rel.pairs) {
      right_of[static_cast<std::size_t>(w)].set(v);
      left_of[static_cast<std::size_t>(v)].set(w);
    }
  }

  // {v' : some v ∈ a is related to v'}
  WorldSet cover_right(const WorldSet& a) const {
    WorldSet out(right_n);
    a.for_each([&](int v) { out = out | right_of[static_cast<std::size_t>(v)]; });
    return out;
  }

  WorldSet cover_left(const WorldSet& b) const {
    WorldSet out(left_n);
    b.for_each([&](int v) { out = out | left_of[static_cast<std::size_t>(v)]; });
    return out;
  }
};

struct BisimContext {
  const GTFModel& m1;
  const GTFModel& m2;
  std::vector<WorldSet> inv1;  // aligned with m1 opens
  std::vector<WorldSet> inv2;

  BisimContext(const GTFModel& a, const GTFModel& b) : m1(a), m2(b) {
    for (const auto& o : m1.topology.opens) inv1.push_back(inverse(m1, o));
    for (const auto& o : m2.topology.opens) inv2.push_back(inverse(m2, o));
  }

  bool in_family(const GTFModel& m, int w, const WorldSet& o) const {
    const auto& fam = m.F[static_cast<std::size_t>(w)];
    return std::find(fam.begin(), fam.end(), o) != fam.end();
  }

  // Forth/back conditions of the three bisimulation kinds for one pair.
  // Returns an explanatory witness through `why` on failure.
  bool pair_ok(int kind, int w, int v, const RelSides& sides,
               std::string* why, NameTable ln, NameTable rn) const {
    auto fail = [&](const std::string& side, const WorldSet& trigger,
                    NameTable names) {
      if (why)
        *why = side + " condition has no witness for the open " +
               names.set(trigger);
      return false;
    };
    if (kind == 0) {
      for (const auto& o : m1.topology.opens) {
        if (!o.test(w)) continue;
        bool ok = false;
        for (const auto& o2 : m2.topology.opens) {
          if (!o2.test(v)) continue;
          if (o2.subset_of(sides.cover_right(o))) {
            ok = true;
            break;
          }
        }
        if (!ok) return fail("forth", o, ln);
      }
      for (const auto& o2 : m2.topology.opens) {
        if (!o2.test(v)) continue;
        bool ok = false;
        for (const auto& o : m1.topology.opens) {
          if (!o.test(w)) continue;
          if (o.subset_of(sides.cover_left(o2))) {
            ok = true;
            break;
          }
        }
        if (!ok) return fail("back", o2, rn);
      }
      return true;
    }
    // Kinds 1 and 2 share the trigger: a nonempty open of the world's
    // own family. They differ in which sets get matched.
    for (std::size_t i = 0; i < m1.topology.opens.size(); ++i) {
      const auto& o = m1.topology.opens[i];
      if (o.empty() || !in_family(m1, w, o)) continue;
      WorldSet matched = kind == 1 ? sides.cover_right(o)
                                   : sides.cover_right(inv1[i]);
      bool ok = false;
      for (std::size_t j = 0; j < m2.topology.opens.size(); ++j) {
        const auto& o2 = m2.topology.opens[j];
        if (!in_family(m2, v, o2)) continue;
        const WorldSet& target = kind == 1 ? o2 : inv2[j];
        if (target.subset_of(matched)) {
          ok = true;
          break;
        }
      }
      if (!ok) return fail("forth", o, ln);
    }
    for (std::size_t j = 0; j < m2.topology.opens.size(); ++j) {
      const auto& o2 = m2.topology.opens[j];
      if (o2.empty() || !in_family(m2, v, o2)) continue;
      WorldSet matched = kind == 1 ? sides.cover_left(o2)
                                   : sides.cover_left(inv2[j]);
      bool ok = false;
      for (std::size_t i = 0; i < m1.topology.opens.size(); ++i) {
        const auto& o = m1.topology.opens[i];
        if (!in_family(m1, w, o)) continue;
        const WorldSet& target = kind == 1 ? o : inv1[i];
        if (target.subset_of(matched)) {
          ok = true;
          break;
        }
      }
      if (!ok) return fail("back", o2, rn);
    }
    return true;
  }
};

std::vector<std::string> shared_variables(const GTFModel& m1,
                                          const GTFModel& m2) {
  std::vector<std::string> vars;
  for (const auto& [q, s] : m1.valuation) {
    vars.push_back(q);
    (void)s;
  }
  for (const auto& [q, s] : m2.valuation) {
    vars.push_back(q);
    (void)s;
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool atoms_agree(const GTFModel& m1, const GTFModel& m2,
                 const std::vector<std::string>& vars, int w, int v,
                 std::string* which = nullptr) {
  for (const auto& q : vars) {
    auto i1 = m1.valuation.find(q);
    auto i2 = m2.valuation.find(q);
    bool a = i1 != m1.valuation.end() && i1->second.test(w);
    bool b = i2 != m2.valuation.end() && i2->second.test(v);
    if (a != b) {
      if (which) *which = q;
      return false;
    }
  }
  return true;
}

void check_rel_fits(const WorldRelation& rel, const GTFModel& m1,
                    const GTFModel& m2) {
  if (rel.left_universe != m1.topology.universe_size ||
      rel.right_universe != m2.topology.universe_size)
    throw std::invalid_argument("relation universes do not match the models");
  for (auto [w, v] : rel.pairs)
    if (w < 0 || w >= rel.left_universe || v < 0 || v >= rel.right_universe)
      throw std::invalid_argument("relation contains out-of-range worlds");
}

}  // namespace

ValidationReport is_bisimulation(int kind, const GTFModel& m1,
                                 const GTFModel& m2, const WorldRelation& rel,
                                 NameTable left_names, NameTable right_names) {
  if (kind < 0 || kind > 2)
    throw std::invalid_argument("bisimulation kind must be 0, 1 or 2");
  check_rel_fits(rel, m1, m2);
  ValidationReport report;
  if (rel.pairs.empty()) {
    report.add("nonempty", "a bisimulation must be a non-empty relation");
    return report;
  }
  BisimContext ctx(m1, m2);
  RelSides sides(rel);
  auto vars = shared_variables(m1, m2);
  for (auto [w, v] : rel.pairs) {
    std::string var;
    if (!atoms_agree(m1, m2, vars, w, v, &var)) {
      report.add("atomic-harmony", left_names.world(w) + " and " +
                                       right_names.world(v) +
                                       " disagree on '" + var + "'");
      continue;
    }
    std::string why;
    if (!ctx.pair_ok(kind, w, v, sides, &why, left_names, right_names))
      report.add("kind-" + std::to_string(kind),
                 "pair (" + left_names.world(w) + "," + right_names.world(v) +
                     "): " + why);
  }
  return report;
}

std::optional<WorldRelation> largest_bisimulation(int kind, const GTFModel& m1,
                                                  const GTFModel& m2) {
  if (kind < 0 || kind > 2)
    throw std::invalid_argument("bisimulation kind must be 0, 1 or 2");
  WorldRelation rel;
  rel.left_universe = m1.topology.universe_size;
  rel.right_universe = m2.topology.universe_size;
  auto vars = shared_variables(m1, m2);
  for (int w = 0; w < rel.left_universe; ++w)
    for (int v = 0; v < rel.right_universe; ++v)
      if (atoms_agree(m1, m2, vars, w, v)) rel.insert(w, v);

  BisimContext ctx(m1, m2);
  bool changed = true;
  while (changed && !rel.pairs.empty()) {
    changed = false;
    RelSides sides(rel);
    std::vector<std::pair<int, int>> keep;
    keep.reserve(rel.pairs.size());
    for (auto [w, v] : rel.pairs) {
      if (ctx.pair_ok(kind, w, v, sides, nullptr, {}, {}))
        keep.push_back({w, v});
      else
        changed = true;
    }
    rel.pairs = std::move(keep);
  }
  if (rel.pairs.empty()) return std::nullopt;
  return rel;
}

MapProperties map_properties(const ModelMap& f, const GTFFrame& left,
                             const GTFFrame& right) {
  int nl = left.topology.universe_size;
  int nr = right.topology.universe_size;
  if (f.left_universe() != nl)
    throw std::invalid_argument("map is not total on the left universe");
  for (int w = 0; w < nl; ++w)
    if (f(w) < 0 || f(w) >= nr)
      throw std::invalid_argument("map target out of range");

  auto preimage = [&](const WorldSet& b) {
    WorldSet out(nl);
    for (int w = 0; w < nl; ++w)
      if (b.test(f(w))) out.set(w);
    return out;
  };
  auto image = [&](const WorldSet& a) {
    WorldSet out(nr);
    a.for_each([&](int w) { out.set(f(w)); });
    return out;
  };
  auto in_family = [](const std::vector<std::vector<WorldSet>>& F, int w,
                      const WorldSet& s) {
    const auto& fam = F[static_cast<std::size_t>(w)];
    return std::find(fam.begin(), fam.end(), s) != fam.end();
  };

  MapProperties props;
  props.continuous = true;
  for (const auto& g2 : right.topology.opens)
    props.continuous &= left.topology.contains(preimage(g2));
  props.open = true;
  for (const auto& g : left.topology.opens)
    props.open &= right.topology.contains(image(g));
  props.f_continuous = true;
  props.f_open = true;
  for (int w = 0; w < nl; ++w) {
    int v = f(w);
    for (const auto& g2 : right.F[static_cast<std::size_t>(v)])
      props.f_continuous &= in_family(left.F, w, preimage(g2));
    for (const auto& g : left.F[static_cast<std::size_t>(w)])
      props.f_open &= in_family(right.F, v, image(g));
  }
  return props;
}

std::pair<GTFModel, WorldRelation> bisim_from_map(int kind, const ModelMap& f,
                                                  const GTFFrame& left,
                                                  const GTFModel& right) {
  if (kind != 0 && kind != 1)
    throw std::invalid_argument("bisim_from_map supports kinds 0 and 1");
  MapProperties props = map_properties(f, left, right.frame());
  if (kind == 0) {
    if (!props.continuous)
      throw std::invalid_argument("bisim_from_map: map is not continuous");
    if (!props.open)
      throw std::invalid_argument("bisim_from_map: map is not open");
  } else {
    if (!props.f_continuous)
      throw std::invalid_argument("bisim_from_map: map is not F-continuous");
    if (!props.f_open)
      throw std::invalid_argument("bisim_from_map: map is not F-open");
  }
  int nl = left.topology.universe_size;
  Valuation pulled;
  for (const auto& [q, set] : right.valuation) {
    WorldSet v(nl);
    for (int w = 0; w < nl; ++w)
      if (set.test(f(w))) v.set(w);
    pulled[q] = v;
  }
  GTFModel m1 = model_on_frame(left, std::move(pulled));
  WorldRelation rel;
  rel.left_universe = nl;
  rel.right_universe = right.topology.universe_size;
  for (int w = 0; w < nl; ++w) rel.insert(w, f(w));
  return {std::move(m1), std::move(rel)};
}

EquivalenceReport modal_equivalence(const GTFModel& m1, int w,
                                    const GTFModel& m2, int v,
                                    const std::vector<std::string>& vars,
                                    int max_nodes, ModalLanguage language) {
  unsigned ops = language == ModalLanguage::Box ? kOpBox : kOpBullet;
  GTFEvaluator e1(m1);
  GTFEvaluator e2(m2);
  EquivalenceReport report;
  FormulaEnumerator en(vars, max_nodes, ops);
  while (auto f = en.next()) {
    ++report.formulas_checked;
    if (e1.truth_set(*f).test(w) != e2.truth_set(*f).test(v)) {
      report.equivalent = false;
      report.distinguishing = *f;
      return report;
    }
  }
  return report;
}

}  // namespace gentop
