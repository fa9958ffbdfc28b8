#include "gentop/generate.hpp"

#include <stdexcept>

namespace gentop {

std::vector<std::string> default_variables(int count) {
  static const char* pool[] = {"p", "q", "r", "s"};
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) {
    if (i < 4)
      out.push_back(pool[i]);
    else
      out.push_back("v" + std::to_string(i));
  }
  return out;
}

std::vector<GenTopology> enumerate_topologies(int n, int max_opens) {
  if (n < 1 || n > 4)
    throw std::invalid_argument(
        "enumerate_topologies: exhaustive scan supports 1..4 worlds");
  int subsets = (1 << n) - 1;  // nonempty subsets of the universe
  std::vector<GenTopology> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
    std::vector<WorldSet> fam = {WorldSet(n)};
    for (int i = 0; i < subsets; ++i)
      if (pick & (std::uint64_t{1} << i))
        fam.push_back(WorldSet::from_bits(n, static_cast<std::uint64_t>(i + 1)));
    if (max_opens >= 0 && static_cast<int>(fam.size()) > max_opens) continue;
    if (!validate_topology(n, fam).valid()) continue;
    out.push_back(GenTopology{n, canonical_family(fam)});
  }
  return out;
}

std::vector<std::vector<WorldSet>> enumerate_subfamilies(const GenTopology& t,
                                                         int max_size) {
  std::size_t k = t.opens.size();
  if (k > 20)
    throw std::invalid_argument("enumerate_subfamilies: too many opens");
  std::vector<std::vector<WorldSet>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    if (max_size >= 0 && std::popcount(pick) > max_size) continue;
    std::vector<WorldSet> fam;
    for (std::size_t i = 0; i < k; ++i)
      if (pick & (std::uint64_t{1} << i)) fam.push_back(t.opens[i]);
    out.push_back(std::move(fam));
  }
  return out;
}

namespace {

// Iterates all valuations of `vars` over n worlds.
void for_each_valuation(int n, const std::vector<std::string>& vars,
                        const std::function<void(const Valuation&)>& fn) {
  std::uint64_t per = std::uint64_t{1} << n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= per;
  for (std::uint64_t combo = 0; combo < total; ++combo) {
    Valuation v;
    std::uint64_t c = combo;
    for (const auto& var : vars) {
      v[var] = WorldSet::from_bits(n, c % per);
      c /= per;
    }
    fn(v);
  }
}

}  // namespace

void for_each_gtf_model(int max_worlds, int max_opens, int orphan_max,
                        const std::vector<std::string>& vars,
                        const std::function<void(const GTFModel&)>& fn) {
  for (int n = 1; n <= max_worlds; ++n) {
    for (const auto& topo : enumerate_topologies(n, max_opens)) {
      WorldSet covered = topo.union_of_opens();
      std::vector<int> orphans = covered.complement().members();
      auto families = enumerate_subfamilies(topo, orphan_max);
      // Cross product of family choices over the orphans.
      std::vector<std::size_t> choice(orphans.size(), 0);
      while (true) {
        std::map<int, std::vector<WorldSet>> orphan_F;
        for (std::size_t i = 0; i < orphans.size(); ++i)
          orphan_F[orphans[i]] = families[choice[i]];
        GTFModel base = make_gtf_model(topo, orphan_F, {});
        for_each_valuation(n, vars, [&](const Valuation& v) {
          GTFModel m = base;
          m.valuation = v;
          fn(m);
        });
        // Advance the mixed-radix counter.
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
          if (++choice[i] < families.size()) break;
          choice[i] = 0;
        }
        if (i == choice.size()) break;
      }
    }
  }
}

void for_each_gtff_model(int max_worlds, int max_opens, int family_max,
                         const std::vector<std::string>& vars, bool gtfi_only,
                         const std::function<void(const GTFFModel&)>& fn) {
  for (int n = 1; n <= max_worlds; ++n) {
    std::vector<WorldSet> all_subsets;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
      all_subsets.push_back(WorldSet::from_bits(n, b));
    // Candidate families for one Y2 world: at most family_max members.
    std::vector<std::vector<WorldSet>> families;
    GenTopology powerset{n, all_subsets};
    families = enumerate_subfamilies(powerset, family_max);

    for (const auto& topo : enumerate_topologies(n, max_opens)) {
      WorldSet covered = topo.union_of_opens();
      std::vector<int> cov = covered.members();
      for (std::uint64_t y1bits = 0; y1bits < (std::uint64_t{1} << n);
           ++y1bits) {
        WorldSet y1 = WorldSet::from_bits(n, y1bits);
        if (gtfi_only && !covered.subset_of(y1)) continue;
        if (!y1.empty() && cov.empty()) continue;  // no valid link target
        WorldSet y2 = y1.complement();
        std::vector<int> y1v = y1.members();
        std::vector<int> y2v = y2.members();
        // Link assignments: identity is forced on ⋃μ for GTFI models.
        std::vector<int> free_targets;
        for (int w : y1v)
          if (!(gtfi_only && covered.test(w))) free_targets.push_back(w);
        std::size_t link_combos = 1;
        for (std::size_t i = 0; i < free_targets.size(); ++i)
          link_combos *= cov.size();
        for (std::size_t lc = 0; lc < link_combos; ++lc) {
          std::vector<int> link(static_cast<std::size_t>(n), -1);
          if (gtfi_only)
            for (int w : y1v)
              if (covered.test(w)) link[static_cast<std::size_t>(w)] = w;
          std::size_t c = lc;
          for (int w : free_targets) {
            link[static_cast<std::size_t>(w)] =
                cov[c % cov.size()];
            c /= cov.size();
          }
          // Family assignments over Y2 worlds.
          std::vector<std::size_t> choice(y2v.size(), 0);
          while (true) {
            GTFFModel base;
            base.topology = topo;
            base.y1 = y1;
            base.y2 = y2;
            base.link = link;
            base.n_domain = y2;
            base.N.assign(static_cast<std::size_t>(n), {});
            for (std::size_t i = 0; i < y2v.size(); ++i)
              base.N[static_cast<std::size_t>(y2v[i])] = families[choice[i]];
            for_each_valuation(n, vars, [&](const Valuation& v) {
              GTFFModel m = base;
              m.valuation = v;
              fn(m);
            });
            std::size_t i = 0;
            for (; i < choice.size(); ++i) {
              if (++choice[i] < families.size()) break;
              choice[i] = 0;
            }
            if (i == choice.size()) break;
          }
        }
      }
    }
  }
}

GenTopology random_topology(Rng& rng, int max_worlds, int max_base) {
  int n = 1 + rng.below(max_worlds);
  int k = rng.below(max_base + 1);
  std::vector<WorldSet> base;
  for (int i = 0; i < k; ++i) base.push_back(rng.subset(n));
  return close_under_unions(n, base);
}

GTFModel random_gtf(Rng& rng, const SearchConfig& cfg, bool consistent) {
  GenTopology topo = random_topology(rng, cfg.max_worlds, cfg.max_opens / 2);
  int n = topo.universe_size;
  WorldSet covered = topo.union_of_opens();
  std::map<int, std::vector<WorldSet>> orphan_F;
  for (int w = 0; w < n; ++w) {
    if (covered.test(w)) continue;
    int size = rng.below(3);
    std::vector<WorldSet> fam;
    for (int i = 0; i < size; ++i) {
      const WorldSet& pick =
          topo.opens[static_cast<std::size_t>(rng.below(
              static_cast<int>(topo.opens.size())))];
      if (consistent && pick.empty()) continue;
      fam.push_back(pick);
    }
    orphan_F[w] = canonical_family(fam);
  }
  Valuation v;
  for (const auto& var : default_variables(cfg.var_count))
    v[var] = rng.subset(n);
  return make_gtf_model(std::move(topo), orphan_F, std::move(v));
}

StrongModel random_strong(Rng& rng, const SearchConfig& cfg) {
  GenTopology topo = random_topology(rng, cfg.max_worlds, cfg.max_opens / 2);
  int n = topo.universe_size;
  std::vector<WorldSet> with_top = topo.opens;
  with_top.push_back(WorldSet::full(n));
  GenTopology strong = close_under_unions(n, with_top);
  Valuation v;
  for (const auto& var : default_variables(cfg.var_count))
    v[var] = rng.subset(n);
  return StrongModel{std::move(strong), std::move(v)};
}

GTNModel random_gtn(Rng& rng, const SearchConfig& cfg) {
  // Valid neighbourhood models are exactly the generalized
  // neighbourhoods of GTF-models, so sampling goes through that map.
  return gtf_to_gtn(random_gtf(rng, cfg, false));
}

GTFFModel random_gtff(Rng& rng, const SearchConfig& cfg, bool gtfi) {
  GenTopology topo = random_topology(rng, cfg.max_worlds, cfg.max_opens / 2);
  int n = topo.universe_size;
  WorldSet covered = topo.union_of_opens();
  GTFFModel m;
  m.topology = std::move(topo);
  WorldSet y1 = rng.subset(n);
  if (gtfi) y1 = y1 | covered;
  if (covered.empty()) y1 = WorldSet(n);
  m.y1 = y1;
  m.y2 = y1.complement();
  m.link.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> cov = covered.members();
  m.y1.for_each([&](int w) {
    if (gtfi && covered.test(w))
      m.link[static_cast<std::size_t>(w)] = w;
    else
      m.link[static_cast<std::size_t>(w)] =
          cov[static_cast<std::size_t>(rng.below(static_cast<int>(cov.size())))];
  });
  m.n_domain = m.y2;
  m.N.assign(static_cast<std::size_t>(n), {});
  m.y2.for_each([&](int w) {
    int size = rng.below(4);
    std::vector<WorldSet> fam;
    for (int i = 0; i < size; ++i) fam.push_back(rng.subset(n));
    m.N[static_cast<std::size_t>(w)] = canonical_family(fam);
  });
  for (const auto& var : default_variables(cfg.var_count))
    m.valuation[var] = rng.subset(n);
  return m;
}

GTFModel random_ifs(Rng& rng, const SearchConfig& cfg) {
  GenTopology topo = random_topology(rng, cfg.max_worlds, cfg.max_opens / 2);
  int n = topo.universe_size;
  WorldSet covered = topo.union_of_opens();
  // An in-fact-strong model needs a nonempty family on every orphan,
  // which requires a nonempty open somewhere.
  if (covered.empty()) {
    std::vector<WorldSet> base = {rng.subset(n)};
    while (base.back().empty()) base.back().set(rng.below(n));
    topo = close_under_unions(n, base);
    covered = topo.union_of_opens();
  }
  std::map<int, std::vector<WorldSet>> orphan_F;
  std::vector<int> cov = covered.members();
  for (int w = 0; w < n; ++w) {
    if (covered.test(w)) continue;
    // Pick a nonempty pivot set P ⊆ ⋃μ and take every open meeting it.
    WorldSet pivot(n);
    int picks = 1 + rng.below(static_cast<int>(cov.size()));
    for (int i = 0; i < picks; ++i)
      pivot.set(cov[static_cast<std::size_t>(
          rng.below(static_cast<int>(cov.size())))]);
    std::vector<WorldSet> fam;
    for (const auto& o : topo.opens)
      if (o.intersects(pivot)) fam.push_back(o);
    orphan_F[w] = fam;
  }
  Valuation v;
  for (const auto& var : default_variables(cfg.var_count))
    v[var] = rng.subset(n);
  return make_gtf_model(std::move(topo), orphan_F, std::move(v));
}

}  // namespace gentop
