#include "gentop/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gentop {

std::string NameTable::world(int w) const {
  if (names && w >= 0 && w < static_cast<int>(names->size()))
    return (*names)[static_cast<std::size_t>(w)];
  return "w" + std::to_string(w);
}

std::string NameTable::set(const WorldSet& ws) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  ws.for_each([&](int w) {
    if (!first) out << ',';
    first = false;
    out << world(w);
  });
  out << '}';
  return out.str();
}

std::string ValidationReport::to_string() const {
  if (valid()) return "valid";
  std::ostringstream out;
  for (const auto& v : violations)
    out << v.rule << ": " << v.witness << '\n';
  return out.str();
}

bool GenTopology::contains(const WorldSet& x) const {
  return std::binary_search(opens.begin(), opens.end(), x);
}

WorldSet GenTopology::union_of_opens() const {
  WorldSet u(universe_size);
  for (const auto& o : opens) u = u | o;
  return u;
}

std::vector<WorldSet> canonical_family(std::span<const WorldSet> family) {
  std::vector<WorldSet> out(family.begin(), family.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_fits(int universe_size, std::span<const WorldSet> family) {
  for (const auto& s : family)
    if (s.universe_size() != universe_size)
      throw std::invalid_argument(
          "set family: member universe size does not match the space");
}

}  // namespace

ValidationReport validate_topology(int universe_size,
                                   std::span<const WorldSet> family,
                                   NameTable names) {
  check_fits(universe_size, family);
  ValidationReport report;
  auto fam = canonical_family(family);
  WorldSet empty(universe_size);
  if (!std::binary_search(fam.begin(), fam.end(), empty))
    report.add("empty-set", "the empty set is not a member");
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      WorldSet u = fam[i] | fam[j];
      if (!std::binary_search(fam.begin(), fam.end(), u)) {
        report.add("union-closure", names.set(fam[i]) + " ∪ " +
                                        names.set(fam[j]) + " = " +
                                        names.set(u) + " is not a member");
      }
    }
  }
  return report;
}

GenTopology close_under_unions(int universe_size,
                               std::span<const WorldSet> base) {
  check_fits(universe_size, base);
  std::vector<WorldSet> fam(base.begin(), base.end());
  fam.push_back(WorldSet(universe_size));
  fam = canonical_family(fam);
  // Fixpoint of pairwise unions; for finite families this yields
  // closure under arbitrary nonempty unions.
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = fam.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        WorldSet u = fam[i] | fam[j];
        if (!std::binary_search(fam.begin(), fam.end(), u)) {
          fam.insert(std::lower_bound(fam.begin(), fam.end(), u), u);
          grew = true;
        }
      }
    }
  }
  return GenTopology{universe_size, std::move(fam)};
}

bool is_strong(const GenTopology& t) {
  return t.contains(WorldSet::full(t.universe_size));
}

WorldSet interior(const GenTopology& t, const WorldSet& x) {
  if (x.universe_size() != t.universe_size)
    throw std::invalid_argument("interior: set does not fit the space");
  WorldSet out(t.universe_size);
  for (const auto& o : t.opens)
    if (o.subset_of(x)) out = out | o;
  return out;
}

WorldSet closure(const GenTopology& t, const WorldSet& x) {
  return interior(t, x.complement()).complement();
}

bool is_nowhere_dense(const GenTopology& t, const WorldSet& a) {
  return interior(t, closure(t, a)).empty();
}

bool is_strongly_nowhere_dense(const GenTopology& t, const WorldSet& a) {
  if (a.universe_size() != t.universe_size)
    throw std::invalid_argument("set does not fit the space");
  for (const auto& g : t.opens) {
    if (g.empty()) continue;
    bool has_witness = false;
    for (const auto& h : t.opens) {
      if (!h.empty() && h.subset_of(g) && !h.intersects(a)) {
        has_witness = true;
        break;
      }
    }
    if (!has_witness) return false;
  }
  return true;
}

GenTopology example_1() {
  std::vector<WorldSet> base = {WorldSet::of(3, {0}), WorldSet::of(3, {1})};
  return close_under_unions(3, base);
}

GenTopology example_2() {
  std::vector<WorldSet> fam = {
      WorldSet(3),           WorldSet::of(3, {0}),    WorldSet::of(3, {2}),
      WorldSet::of(3, {0, 1}), WorldSet::of(3, {0, 2}), WorldSet::of(3, {1, 2}),
      WorldSet::full(3)};
  return GenTopology{3, canonical_family(fam)};
}

GenTopology forbidden_space(int universe_size, const WorldSet& x) {
  if (x.universe_size() != universe_size)
    throw std::invalid_argument("forbidden_space: set does not fit");
  if (x.empty())
    throw std::invalid_argument("forbidden_space: forbidden set is empty");
  WorldSet allowed = x.complement();
  std::vector<WorldSet> fam;
  // All subsets of W \ x, enumerated as submasks.
  std::uint64_t m = allowed.bits();
  std::uint64_t sub = m;
  while (true) {
    fam.push_back(WorldSet::from_bits(universe_size, sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
  return GenTopology{universe_size, canonical_family(fam)};
}

GenTopology chain_space(int length) {
  if (length < 1 || length >= WorldSet::kMaxWorlds)
    throw std::invalid_argument("chain_space: length out of range");
  int n = length + 1;
  std::vector<WorldSet> fam = {WorldSet(n)};
  WorldSet acc(n);
  for (int i = 0; i < length; ++i) {
    acc.set(i);
    fam.push_back(acc);
  }
  return GenTopology{n, canonical_family(fam)};
}

}  // namespace gentop
