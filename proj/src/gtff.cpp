#include "gentop/gtff.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentop {

ValidationReport validate_gtff(const GTFFModel& m, NameTable names) {
  ValidationReport report;
  int n = m.topology.universe_size;
  if (m.y1.universe_size() != n || m.y2.universe_size() != n) {
    report.add("partition", "Y1/Y2 do not fit the universe");
    return report;
  }
  if (m.y1.intersects(m.y2))
    report.add("partition", "Y1 and Y2 overlap on " + names.set(m.y1 & m.y2));
  if ((m.y1 | m.y2) != WorldSet::full(n))
    report.add("partition", "Y1 and Y2 miss " +
                                names.set((m.y1 | m.y2).complement()));
  WorldSet covered = m.topology.union_of_opens();
  if (static_cast<int>(m.link.size()) != n) {
    report.add("link", "link table must cover every world");
    return report;
  }
  m.y1.for_each([&](int w) {
    int v = m.link[static_cast<std::size_t>(w)];
    if (v < 0 || v >= n)
      report.add("link", "no link target for " + names.world(w));
    else if (!covered.test(v))
      report.add("link", "link of " + names.world(w) + " leaves ⋃μ: " +
                             names.world(v));
  });
  if (static_cast<int>(m.N.size()) != n) {
    report.add("families", "family table must cover every world");
    return report;
  }
  m.y2.for_each([&](int w) {
    if (!m.n_domain.test(w))
      report.add("families", "no neighbourhood family for " + names.world(w));
  });
  (m.n_domain - m.y2).for_each([&](int w) {
    report.add("families",
               "neighbourhood family given outside Y2: " + names.world(w));
  });
  for (int w = 0; w < n; ++w)
    for (const auto& s : m.N[static_cast<std::size_t>(w)])
      if (s.universe_size() != n) {
        report.add("families", "family of " + names.world(w) +
                                   " has a set of the wrong universe");
        return report;
      }
  for (const auto& [var, set] : m.valuation)
    if (set.universe_size() != n)
      report.add("valuation",
                 "valuation of '" + var + "' does not fit the universe");
  return report;
}

ValidationReport validate_gtfi(const GTFFModel& m, NameTable names) {
  ValidationReport report = validate_gtff(m, names);
  WorldSet covered = m.topology.union_of_opens();
  if (!covered.subset_of(m.y1))
    report.add("gtfi-cover", "⋃μ is not contained in Y1: " +
                                 names.set(covered - m.y1));
  covered.for_each([&](int w) {
    if (m.y1.test(w) && m.link[static_cast<std::size_t>(w)] != w)
      report.add("gtfi-identity",
                 "link is not the identity at " + names.world(w));
  });
  return report;
}

WorldSet GTFFEvaluator::eval(const FormulaPtr& f) {
  auto it = memo_.find(f.get());
  if (it != memo_.end()) return it->second;
  int n = m_.topology.universe_size;
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
    case Conn::Box:
    case Conn::Diamond: {
      // Membership-witnessed topological box; diamond by duality.
      WorldSet t = eval(f->left);
      if (f->kind == Conn::Diamond) t = t.complement();
      WorldSet boxed(n);
      for (const auto& o : m_.topology.opens)
        if (o.subset_of(t)) boxed = boxed | o;
      out = f->kind == Conn::Box ? boxed : boxed.complement();
      break;
    }
    case Conn::BlackBox:
    case Conn::BlackDiamond: {
      WorldSet t = eval(f->left);
      if (f->kind == Conn::BlackDiamond) t = t.complement();
      WorldSet blacked(n);
      // Y1 worlds look at their link target's box; Y2 worlds test the
      // truth set for family membership.
      WorldSet linked_box(n);
      for (const auto& o : m_.topology.opens)
        if (o.subset_of(t)) linked_box = linked_box | o;
      m_.y1.for_each([&](int w) {
        int v = m_.link[static_cast<std::size_t>(w)];
        if (v >= 0 && linked_box.test(v)) blacked.set(w);
      });
      m_.y2.for_each([&](int w) {
        const auto& fam = m_.N[static_cast<std::size_t>(w)];
        if (std::find(fam.begin(), fam.end(), t) != fam.end()) blacked.set(w);
      });
      out = f->kind == Conn::BlackBox ? blacked : blacked.complement();
      break;
    }
    case Conn::Bullet:
      throw UnsupportedOperator("GTFF-models do not interpret the bullet");
  }
  memo_.emplace(f.get(), out);
  return out;
}

WorldSet GTFFEvaluator::truth_set(const FormulaPtr& f) {
  pinned_.push_back(f);
  return eval(f);
}

bool GTFFEvaluator::forces(int w, const FormulaPtr& f) {
  return truth_set(f).test(w);
}

WorldSet truth_set_gtff(const GTFFModel& m, const FormulaPtr& f) {
  GTFFEvaluator ev(m);
  return ev.truth_set(f);
}

bool forces_gtff(const GTFFModel& m, int w, const FormulaPtr& f) {
  return truth_set_gtff(m, f).test(w);
}

AxiomReport axiom_report(const GTFFModel& m, std::span<const SchemaId> schemas,
                         const std::vector<std::string>& vars, int max_nodes) {
  AxiomReport report;
  auto formulas = enumerate_all(vars, max_nodes, kOpBox | kOpBlackBox);
  GTFFEvaluator ev(m);
  WorldSet full = WorldSet::full(m.topology.universe_size);
  for (SchemaId id : schemas) {
    const AxiomSchema& schema = axiom_schema(id);
    SchemaResult res;
    res.id = id;
    auto check = [&](const std::map<std::string, FormulaPtr>& subst) {
      if (!res.valid) return;
      FormulaPtr inst = instantiate(schema, subst);
      ++res.instances_checked;
      WorldSet t = ev.truth_set(inst);
      if (t != full) {
        res.valid = false;
        res.failing_instance = inst;
        res.counter_world = (t.complement()).members().front();
      }
    };
    if (schema.metavars.empty()) {
      check({});
    } else if (schema.metavars.size() == 1) {
      for (const auto& phi : formulas) check({{"phi", phi}});
    } else {
      for (const auto& phi : formulas)
        for (const auto& psi : formulas) {
          check({{"phi", phi}, {"psi", psi}});
          if (!res.valid) break;
        }
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

RuleReport rule_admissibility(const GTFFModel& m, ExtRule rule,
                              const std::vector<std::string>& vars,
                              int max_nodes) {
  RuleReport report;
  report.rule = rule;
  auto formulas = enumerate_all(vars, max_nodes, kOpBox | kOpBlackBox);
  GTFFEvaluator ev(m);
  auto wrap = [&](const FormulaPtr& f) {
    return rule == ExtRule::REBox ? Formula::box(f) : Formula::black_box(f);
  };
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    WorldSet ti = ev.truth_set(formulas[i]);
    for (std::size_t j = i + 1; j < formulas.size(); ++j) {
      if (ti != ev.truth_set(formulas[j])) continue;
      ++report.pairs_checked;
      if (ev.truth_set(wrap(formulas[i])) != ev.truth_set(wrap(formulas[j]))) {
        report.admissible = false;
        report.phi = formulas[i];
        report.psi = formulas[j];
        return report;
      }
    }
  }
  return report;
}

Section5Report section5_properties(const GTFFModel& m,
                                   const std::vector<std::string>& vars,
                                   int max_nodes) {
  Section5Report report;
  GTFFEvaluator ev(m);
  WorldSet covered = m.topology.union_of_opens();
  WorldSet y1_orphans = m.y1 - covered;
  FormulaEnumerator en(vars, max_nodes, kOpBox | kOpBlackBox);
  while (auto f = en.next()) {
    ++report.formulas_checked;
    WorldSet black = ev.truth_set(Formula::black_box(*f));
    WorldSet box = ev.truth_set(Formula::box(*f));
    WorldSet bdia = ev.truth_set(Formula::black_diamond(*f));
    WorldSet dia = ev.truth_set(Formula::diamond(*f));
    covered.for_each([&](int w) {
      if (black.test(w) && !box.test(w))
        report.black_to_box_failures.push_back({w, *f});
    });
    m.y1.for_each([&](int w) {
      if (black.test(w) && !bdia.test(w))
        report.black_to_bdia_failures.push_back({w, *f});
    });
    y1_orphans.for_each([&](int w) {
      if (black.test(w) && !dia.test(w))
        report.black_to_dia_witnesses.push_back({w, *f});
    });
    m.y2.for_each([&](int w) {
      if (black.test(w) && !bdia.test(w))
        report.y2_black_to_bdia_witnesses.push_back({w, *f});
    });
  }
  return report;
}

}  // namespace gentop
