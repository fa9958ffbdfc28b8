#include "gentop/ifs.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentop {

IfsCertificate validate_ifs(const GTFModel& m, NameTable names) {
  const auto& opens = m.topology.opens;
  if (opens.size() > 16)
    throw std::invalid_argument(
        "validate_ifs: more than 16 opens; the decomposition check "
        "enumerates all subfamilies");
  int n = m.topology.universe_size;
  WorldSet covered = m.topology.union_of_opens();
  IfsCertificate cert;
  for (int w = 0; w < n; ++w) {
    if (covered.test(w)) continue;
    const auto& fam = m.F[static_cast<std::size_t>(w)];
    auto in_fam = [&](const WorldSet& x) {
      return std::find(fam.begin(), fam.end(), x) != fam.end();
    };
    IfsWorldResult r;
    r.world = w;
    r.nonempty_ok = !fam.empty();
    if (!r.nonempty_ok) r.detail = "family is empty";
    for (const auto& x : fam) {
      for (const auto& y : opens) {
        if (x.subset_of(y) && !in_fam(y)) {
          r.superset_ok = false;
          r.detail = "family contains " + names.set(x) +
                     " but not its open superset " + names.set(y);
          break;
        }
      }
      if (!r.superset_ok) break;
    }
    // Every way of writing a family member as a union of opens must
    // use a part that is itself in the family.
    std::size_t k = opens.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
      WorldSet u(n);
      bool part_in_family = false;
      for (std::size_t i = 0; i < k; ++i)
        if (pick & (std::uint64_t{1} << i)) {
          u = u | opens[i];
          part_in_family |= in_fam(opens[i]);
        }
      if (in_fam(u) && !part_in_family) {
        r.partition_ok = false;
        r.detail = names.set(u) +
                   " decomposes into opens none of which is in the family "
                   "of " +
                   names.world(w);
        break;
      }
    }
    cert.orphan_results.push_back(std::move(r));
  }
  return cert;
}

StrongModel ifs_to_strong(const GTFModel& m) {
  if (m.topology.universe_size == 0)
    throw std::invalid_argument("ifs_to_strong: empty universe");
  IfsCertificate cert = validate_ifs(m);
  for (const auto& r : cert.orphan_results)
    if (!r.ok())
      throw std::invalid_argument("ifs_to_strong: model is not in-fact-strong (" +
                                  r.detail + ")");
  std::vector<WorldSet> tau = {WorldSet(m.topology.universe_size)};
  for (const auto& x : m.topology.opens) tau.push_back(inverse(m, x));
  return StrongModel{
      GenTopology{m.topology.universe_size, canonical_family(tau)},
      m.valuation};
}

GTFModel strong_to_ifs(const StrongModel& m) {
  if (!is_strong(m.topology))
    throw std::invalid_argument("strong_to_ifs: topology is not strong");
  return make_gtf_model(m.topology, {}, m.valuation);
}

}  // namespace gentop
