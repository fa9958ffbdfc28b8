#include "gentop/gtn.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentop {

bool GTNModel::in_family(int w, const WorldSet& x) const {
  if (!x.subset_of(union_of_n())) return false;
  for (const auto& s : minimal[static_cast<std::size_t>(w)])
    if (s.subset_of(x)) return true;
  return false;
}

std::vector<WorldSet> GTNModel::family_members(int w) const {
  WorldSet host = union_of_n();
  if (host.count() > 22)
    throw std::invalid_argument("family_members: ⋃N too large to expand");
  std::vector<WorldSet> out;
  std::uint64_t mask = host.bits();
  std::uint64_t sub = mask;
  while (true) {
    WorldSet x = WorldSet::from_bits(universe_size, sub);
    if (in_family(w, x)) out.push_back(x);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  return canonical_family(out);
}

namespace {

std::vector<WorldSet> antichain_of(std::vector<WorldSet> sets) {
  sets = canonical_family(sets);
  std::vector<WorldSet> out;
  for (const auto& s : sets) {
    bool minimal = true;
    for (const auto& t : sets)
      if (t != s && t.subset_of(s)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace

GTNModel make_gtn_model(int universe_size,
                        const std::vector<std::vector<WorldSet>>& families,
                        Valuation valuation, GTNLoadInfo* info) {
  if (static_cast<int>(families.size()) != universe_size)
    throw std::invalid_argument(
        "make_gtn_model: one family per world required");
  GTNModel m;
  m.universe_size = universe_size;
  m.n_union = WorldSet(universe_size);
  m.valuation = std::move(valuation);
  m.minimal.reserve(families.size());
  for (const auto& fam : families) {
    for (const auto& s : fam) {
      if (s.universe_size() != universe_size)
        throw std::invalid_argument(
            "make_gtn_model: neighbourhood does not fit the universe");
      m.n_union = m.n_union | s;
    }
    m.minimal.push_back(antichain_of(fam));
  }
  if (info) {
    info->closure_added_sets = false;
    WorldSet host = m.union_of_n();
    for (int w = 0; w < universe_size && !info->closure_added_sets; ++w) {
      auto given = canonical_family(families[static_cast<std::size_t>(w)]);
      // Count the members of the closed family; if it exceeds the
      // explicit input, closure added sets.
      std::uint64_t mask = host.bits();
      std::uint64_t sub = mask;
      std::size_t closed = 0;
      while (true) {
        if (m.in_family(w, WorldSet::from_bits(universe_size, sub))) ++closed;
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      if (closed != given.size()) info->closure_added_sets = true;
    }
  }
  return m;
}

WorldSet w1_worlds(const GTNModel& m) {
  WorldSet out(m.universe_size);
  for (int w = 0; w < m.universe_size; ++w) {
    const auto& fam = m.minimal[static_cast<std::size_t>(w)];
    if (fam.empty()) continue;  // empty intersection is read as empty
    bool in_all = true;
    for (const auto& s : fam) in_all &= s.test(w);
    if (in_all) out.set(w);
  }
  return out;
}

WorldSet w2_worlds(const GTNModel& m) {
  return m.union_of_n().complement();
}

ValidationReport validate_gtn(const GTNModel& m, NameTable names) {
  ValidationReport report;
  WorldSet host = m.union_of_n();
  // Representation coherence: the stored ⋃N bounds every family, and
  // it can only be inhabited by actual members.
  bool any_member = false;
  for (int w = 0; w < m.universe_size; ++w) {
    for (const auto& s : m.minimal[static_cast<std::size_t>(w)]) {
      any_member = true;
      if (!s.subset_of(host))
        report.add("union-of-neighbourhoods",
                   "member " + names.set(s) + " of " + names.world(w) +
                       "'s family leaves the stored ⋃N " + names.set(host));
    }
  }
  if (!any_member && !host.empty())
    report.add("union-of-neighbourhoods",
               "stored ⋃N is nonempty although no family has members");
  if (!report.valid()) return report;
  WorldSet w1 = w1_worlds(m);
  WorldSet w2 = w2_worlds(m);
  WorldSet both = w1 | w2;
  if (both != WorldSet::full(m.universe_size)) {
    (both.complement()).for_each([&](int w) {
      report.add("world-split",
                 names.world(w) +
                     " lies in some neighbourhood but not in each of its own");
    });
  }
  // Superset closure within ⋃N holds by representation; condition 4 is
  // checked on minimal members, which covers their supersets.
  for (int w = 0; w < m.universe_size; ++w) {
    for (const auto& x : m.minimal[static_cast<std::size_t>(w)]) {
      WorldSet core(m.universe_size);
      w1.for_each([&](int z) {
        if (m.in_family(z, x)) core.set(z);
      });
      if (!m.in_family(w, core))
        report.add("core-set",
                   "family of " + names.world(w) + " lacks " +
                       names.set(core) + ", the core of " + names.set(x));
    }
  }
  return report;
}

WorldSet GTNEvaluator::eval(const FormulaPtr& f) {
  auto it = memo_.find(f.get());
  if (it != memo_.end()) return it->second;
  int n = m_.universe_size;
  WorldSet out(n);
  switch (f->kind) {
    case Conn::Var: {
      auto v = m_.valuation.find(f->name);
      if (v != m_.valuation.end()) out = v->second;
      break;
    }
    case Conn::Bottom:
      break;
    case Conn::Top:
      out = WorldSet::full(n);
      break;
    case Conn::Not:
      out = eval(f->left).complement();
      break;
    case Conn::And:
      out = eval(f->left) & eval(f->right);
      break;
    case Conn::Or:
      out = eval(f->left) | eval(f->right);
      break;
    case Conn::Implies:
      out = eval(f->left).complement() | eval(f->right);
      break;
    case Conn::Iff: {
      WorldSet a = eval(f->left);
      WorldSet b = eval(f->right);
      out = (a & b) | (a.complement() & b.complement());
      break;
    }
    case Conn::Box: {
      // Some neighbourhood inside the truth set; on antichain storage
      // it suffices to test the minimal members.
      WorldSet t = eval(f->left);
      for (int w = 0; w < n; ++w)
        for (const auto& s : m_.minimal[static_cast<std::size_t>(w)])
          if (s.subset_of(t)) {
            out.set(w);
            break;
          }
      break;
    }
    case Conn::Diamond: {
      WorldSet nt = eval(f->left).complement();
      for (int w = 0; w < n; ++w) {
        bool boxed_neg = false;
        for (const auto& s : m_.minimal[static_cast<std::size_t>(w)])
          if (s.subset_of(nt)) {
            boxed_neg = true;
            break;
          }
        if (!boxed_neg) out.set(w);
      }
      break;
    }
    case Conn::Bullet:
    case Conn::BlackBox:
    case Conn::BlackDiamond:
      throw UnsupportedOperator(
          "GTN-models interpret only the plain box and diamond");
  }
  memo_.emplace(f.get(), out);
  return out;
}

WorldSet GTNEvaluator::truth_set(const FormulaPtr& f) {
  pinned_.push_back(f);
  return eval(f);
}

bool GTNEvaluator::forces(int w, const FormulaPtr& f) {
  return truth_set(f).test(w);
}

WorldSet truth_set_gtn(const GTNModel& m, const FormulaPtr& f) {
  GTNEvaluator ev(m);
  return ev.truth_set(f);
}

bool forces_gtn(const GTNModel& m, int w, const FormulaPtr& f) {
  return truth_set_gtn(m, f).test(w);
}

GenTopology induced_topology(const GTNModel& m) {
  WorldSet host = m.union_of_n();
  if (host.count() > 22)
    throw std::invalid_argument("induced_topology: ⋃N too large");
  std::vector<WorldSet> opens;
  std::uint64_t mask = host.bits();
  std::uint64_t sub = mask;
  while (true) {
    WorldSet x = WorldSet::from_bits(m.universe_size, sub);
    bool open = true;
    x.for_each([&](int w) { open = open && m.in_family(w, x); });
    if (open) opens.push_back(x);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  return GenTopology{m.universe_size, canonical_family(opens)};
}

GTFModel gtn_to_gtf(const GTNModel& m) {
  auto report = validate_gtn(m);
  if (!report.valid())
    throw std::invalid_argument("gtn_to_gtf: input is not a valid GTN-model: " +
                                report.to_string());
  GenTopology mu = induced_topology(m);
  int n = m.universe_size;
  std::vector<std::vector<WorldSet>> F(static_cast<std::size_t>(n));
  // Families carry over restricted to induced opens. Inside ⋃μ this is
  // exactly the determined family; on orphans it keeps every open
  // member, and the open core of any dropped member survives, which is
  // what preserves the forcing relation.
  for (int w = 0; w < n; ++w)
    for (const auto& o : mu.opens)
      if (m.in_family(w, o)) F[static_cast<std::size_t>(w)].push_back(o);
  return GTFModel{std::move(mu), std::move(F), m.valuation};
}

GTNModel gtf_to_gtn(const GTFModel& m) {
  GTNModel out;
  out.universe_size = m.topology.universe_size;
  out.valuation = m.valuation;
  out.minimal.reserve(m.F.size());
  bool any_family = false;
  for (const auto& fam : m.F) {
    any_family |= !fam.empty();
    out.minimal.push_back(antichain_of(fam));
  }
  // Generalized neighbourhoods are the subsets of ⋃μ above some family
  // member, so ⋃μ itself is one whenever any family is inhabited.
  out.n_union = any_family ? m.topology.union_of_opens()
                           : WorldSet(out.universe_size);
  return out;
}

}  // namespace gentop
