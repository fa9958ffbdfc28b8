#include "gentop/gtf.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentop {

std::vector<WorldSet> determined_family(const GenTopology& t, int w) {
  std::vector<WorldSet> out;
  for (const auto& o : t.opens)
    if (o.test(w)) out.push_back(o);
  return out;
}

GTFModel make_gtf_model(GenTopology topology,
                        const std::map<int, std::vector<WorldSet>>& orphan_F,
                        Valuation valuation) {
  int n = topology.universe_size;
  WorldSet covered = topology.union_of_opens();
  std::vector<std::vector<WorldSet>> F(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) {
    if (covered.test(w)) {
      F[static_cast<std::size_t>(w)] = determined_family(topology, w);
    } else if (auto it = orphan_F.find(w); it != orphan_F.end()) {
      F[static_cast<std::size_t>(w)] = canonical_family(it->second);
    }
  }
  for (const auto& [w, fam] : orphan_F) {
    if (w < 0 || w >= n)
      throw std::invalid_argument("make_gtf_model: world index out of range");
    if (covered.test(w))
      throw std::invalid_argument(
          "make_gtf_model: family given for a world of ⋃μ");
    (void)fam;
  }
  return GTFModel{std::move(topology), std::move(F), std::move(valuation)};
}

GTFModel model_on_frame(GTFFrame frame, Valuation valuation) {
  return GTFModel{std::move(frame.topology), std::move(frame.F),
                  std::move(valuation)};
}

ValidationReport validate_gtf(const GTFModel& m, NameTable names) {
  ValidationReport report;
  const auto& t = m.topology;
  int n = t.universe_size;
  if (static_cast<int>(m.F.size()) != n) {
    report.add("F-domain", "family map must cover every world");
    return report;
  }
  WorldSet covered = t.union_of_opens();
  for (int w = 0; w < n; ++w) {
    const auto& fam = m.F[static_cast<std::size_t>(w)];
    for (const auto& x : fam) {
      if (x.universe_size() != n) {
        report.add("F-universe", "family of " + names.world(w) +
                                     " has a set of the wrong universe");
        return report;
      }
      if (!t.contains(x))
        report.add("F-open", "family of " + names.world(w) +
                                 " contains the non-open " + names.set(x));
    }
    if (covered.test(w)) {
      auto want = determined_family(t, w);
      auto got = canonical_family(fam);
      for (const auto& x : want)
        if (!std::binary_search(got.begin(), got.end(), x))
          report.add("F-determined",
                     "family of " + names.world(w) + " is missing the open " +
                         names.set(x));
      for (const auto& x : got)
        if (!std::binary_search(want.begin(), want.end(), x))
          report.add("F-determined",
                     "family of " + names.world(w) +
                         " contains the extraneous " + names.set(x));
    }
  }
  for (const auto& [var, set] : m.valuation) {
    if (set.universe_size() != n)
      report.add("valuation",
                 "valuation of '" + var + "' does not fit the universe");
  }
  return report;
}

WorldSet inverse(const GTFModel& m, const WorldSet& a) {
  if (!m.topology.contains(a))
    throw std::invalid_argument("inverse: argument is not an open set");
  int n = m.topology.universe_size;
  WorldSet out(n);
  for (int w = 0; w < n; ++w) {
    const auto& fam = m.F[static_cast<std::size_t>(w)];
    if (std::find(fam.begin(), fam.end(), a) != fam.end()) out.set(w);
  }
  return out;
}

GTFEvaluator::GTFEvaluator(const GTFModel& m) : m_(m) {
  open_inverse_.reserve(m.topology.opens.size());
  for (const auto& o : m.topology.opens) open_inverse_.push_back(inverse(m, o));
}

WorldSet GTFEvaluator::eval(const FormulaPtr& f) {
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
      out = ((a & b) | (a.complement() & b.complement()));
      break;
    }
    case Conn::Box: {
      WorldSet t = eval(f->left);
      for (int w = 0; w < n; ++w) {
        for (const auto& o : m_.F[static_cast<std::size_t>(w)])
          if (o.subset_of(t)) {
            out.set(w);
            break;
          }
      }
      break;
    }
    case Conn::Diamond: {
      // ¬□¬: fails only where some member of F_w avoids the truth set.
      WorldSet t = eval(f->left);
      WorldSet nt = t.complement();
      for (int w = 0; w < n; ++w) {
        bool boxed_neg = false;
        for (const auto& o : m_.F[static_cast<std::size_t>(w)])
          if (o.subset_of(nt)) {
            boxed_neg = true;
            break;
          }
        if (!boxed_neg) out.set(w);
      }
      break;
    }
    case Conn::Bullet: {
      WorldSet t = eval(f->left);
      for (int w = 0; w < n; ++w) {
        const auto& fam = m_.F[static_cast<std::size_t>(w)];
        for (const auto& o : fam) {
          auto it = std::lower_bound(m_.topology.opens.begin(),
                                     m_.topology.opens.end(), o);
          if (it == m_.topology.opens.end() || *it != o)
            throw std::invalid_argument(
                "truth_set: family contains a non-open set");
          auto idx = it - m_.topology.opens.begin();
          if (open_inverse_[static_cast<std::size_t>(idx)].subset_of(t)) {
            out.set(w);
            break;
          }
        }
      }
      break;
    }
    case Conn::BlackBox:
    case Conn::BlackDiamond:
      throw UnsupportedOperator(
          "GTF-models do not interpret the black modalities");
  }
  memo_.emplace(f.get(), out);
  return out;
}

WorldSet GTFEvaluator::truth_set(const FormulaPtr& f) {
  pinned_.push_back(f);
  return eval(f);
}

bool GTFEvaluator::forces(int w, const FormulaPtr& f) {
  return truth_set(f).test(w);
}

WorldSet truth_set(const GTFModel& m, const FormulaPtr& f) {
  GTFEvaluator ev(m);
  return ev.truth_set(f);
}

bool forces(const GTFModel& m, int w, const FormulaPtr& f) {
  return truth_set(m, f).test(w);
}

std::vector<WorldSet> neighbourhoods(const GTFModel& m, int w) {
  WorldSet covered = m.topology.union_of_opens();
  if (covered.count() > 24)
    throw std::invalid_argument("neighbourhoods: ⋃μ too large to enumerate");
  const auto& fam = m.F[static_cast<std::size_t>(w)];
  std::vector<WorldSet> out;
  std::uint64_t mask = covered.bits();
  std::uint64_t sub = mask;
  int n = m.topology.universe_size;
  while (true) {
    WorldSet x = WorldSet::from_bits(n, sub);
    for (const auto& o : fam)
      if (o.subset_of(x)) {
        out.push_back(x);
        break;
      }
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  return canonical_family(out);
}

bool is_consistent(const GTFModel& m) {
  WorldSet empty(m.topology.universe_size);
  for (const auto& fam : m.F)
    if (std::find(fam.begin(), fam.end(), empty) != fam.end()) return false;
  return true;
}

ValidationReport check_regularities(const GTFModel& m,
                                    const std::vector<std::string>& vars,
                                    int max_nodes, NameTable names) {
  ValidationReport report;
  int n = m.topology.universe_size;
  WorldSet covered = m.topology.union_of_opens();
  WorldSet empty(n);
  WorldSet orphans = covered.complement();

  bool all_nonempty = true;
  for (const auto& fam : m.F) all_nonempty &= !fam.empty();

  GTFEvaluator ev(m);
  FormulaEnumerator en(vars, max_nodes, kOpBox);
  while (auto f = en.next()) {
    WorldSet t = ev.truth_set(*f);
    bool universal = covered.subset_of(t);
    if (universal) {
      WorldSet dia = ev.truth_set(Formula::diamond(*f));
      WorldSet boxed = ev.truth_set(Formula::box(*f));
      orphans.for_each([&](int v) {
        const auto& fam = m.F[static_cast<std::size_t>(v)];
        bool has_empty =
            std::find(fam.begin(), fam.end(), empty) != fam.end();
        if (!has_empty && !dia.test(v))
          report.add("orphan-diamond", names.world(v) + " fails ◇(" +
                                           to_text(*f) + ")");
        if (!fam.empty() && !boxed.test(v))
          report.add("orphan-box",
                     names.world(v) + " fails □(" + to_text(*f) + ")");
      });
      if (all_nonempty && boxed != WorldSet::full(n))
        report.add("global-box", "□(" + to_text(*f) +
                                     ") is not universal although every "
                                     "family is nonempty");
    }
  }

  // Worlds with equal families agree on the box-rooted fragment.
  std::vector<std::pair<int, int>> equal_family_pairs;
  orphans.for_each([&](int v) {
    covered.for_each([&](int w) {
      if (m.F[static_cast<std::size_t>(v)] == m.F[static_cast<std::size_t>(w)])
        equal_family_pairs.push_back({v, w});
    });
  });
  if (!equal_family_pairs.empty()) {
    FormulaEnumerator en2(vars, max_nodes, kOpBox);
    while (auto f = en2.next()) {
      if (!is_mod_shape(*f)) continue;
      WorldSet t = ev.truth_set(*f);
      for (auto [v, w] : equal_family_pairs)
        if (t.test(v) != t.test(w))
          report.add("equal-family-agreement",
                     names.world(v) + " and " + names.world(w) +
                         " disagree on " + to_text(*f));
    }
  }
  return report;
}

}  // namespace gentop
