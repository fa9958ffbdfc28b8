#pragma once

#include <string>
#include <vector>

#include "gentop/gtf.hpp"

namespace gentop {

// Per-orphan results of the three in-fact-strong conditions: the
// family is closed under open supersets, every open decomposition of a
// family member has a part in the family, and the family is nonempty.
struct IfsWorldResult {
  int world = -1;
  bool superset_ok = true;
  bool partition_ok = true;
  bool nonempty_ok = true;
  std::string detail;

  bool ok() const { return superset_ok && partition_ok && nonempty_ok; }
};

struct IfsCertificate {
  std::vector<IfsWorldResult> orphan_results;

  bool ifs() const {
    for (const auto& r : orphan_results)
      if (!r.ok()) return false;
    return true;
  }
};

// Checks the conditions on every orphaned world (they hold by
// definition elsewhere). The decomposition condition enumerates all
// subfamilies of the opens, so topologies are capped at 16 opens.
IfsCertificate validate_ifs(const GTFModel& m, NameTable names = {});

// Generalized topological model with a strong topology; the modality
// of interest is the plain box.
struct StrongModel {
  GenTopology topology;
  Valuation valuation;
};

// τ := {∅} ∪ {X⁻¹ : X open}. For in-fact-strong bullet-read models
// this is a strong generalized topology, and box forcing over it
// agrees pointwise with bullet forcing over the input.
StrongModel ifs_to_strong(const GTFModel& m);

// The converse direction: a strong model is in-fact-strong once every
// world carries the opens containing it (there are no orphans).
GTFModel strong_to_ifs(const StrongModel& m);

}  // namespace gentop
