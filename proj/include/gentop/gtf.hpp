#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "gentop/formula.hpp"
#include "gentop/report.hpp"
#include "gentop/topology.hpp"

namespace gentop {

using Valuation = std::map<std::string, WorldSet>;

// Topology plus the per-world family of opens. For worlds inside ⋃μ
// the family is determined by the topology (all opens containing the
// world); for orphaned worlds it is an arbitrary subfamily of the
// opens, possibly empty, possibly containing ∅.
struct GTFFrame {
  GenTopology topology;
  std::vector<std::vector<WorldSet>> F;  // canonical order per world
};

struct GTFModel {
  GenTopology topology;
  std::vector<std::vector<WorldSet>> F;
  Valuation valuation;

  GTFFrame frame() const { return {topology, F}; }
};

// Opens containing w, in canonical order — the family that the
// definition forces on every world of ⋃μ.
std::vector<WorldSet> determined_family(const GenTopology& t, int w);

// Builds a model with determined families everywhere and the given
// families on orphaned worlds (keys must be orphan indices).
GTFModel make_gtf_model(GenTopology topology,
                        const std::map<int, std::vector<WorldSet>>& orphan_F,
                        Valuation valuation);

GTFModel model_on_frame(GTFFrame frame, Valuation valuation);

ValidationReport validate_gtf(const GTFModel& m, NameTable names = {});

// A⁻¹ = the worlds whose family contains the open a. Throws when a is
// not an open of the model's topology.
WorldSet inverse(const GTFModel& m, const WorldSet& a);

// Bottom-up truth-set evaluation with per-subformula memoization.
// Supports □/◇/• (and the propositional connectives); ■/◆ raise
// UnsupportedOperator.
class GTFEvaluator {
 public:
  explicit GTFEvaluator(const GTFModel& m);

  WorldSet truth_set(const FormulaPtr& f);
  bool forces(int w, const FormulaPtr& f);

 private:
  WorldSet eval(const FormulaPtr& f);

  const GTFModel& m_;
  std::unordered_map<const Formula*, WorldSet> memo_;
  std::vector<FormulaPtr> pinned_;  // keeps memo keys from being reused
  std::vector<WorldSet> open_inverse_;  // aligned with topology.opens
};

WorldSet truth_set(const GTFModel& m, const FormulaPtr& f);
bool forces(const GTFModel& m, int w, const FormulaPtr& f);

// Generalized topological neighbourhoods of w: the subsets of ⋃μ that
// contain some member of F_w.
std::vector<WorldSet> neighbourhoods(const GTFModel& m, int w);

// No world's family contains the empty set.
bool is_consistent(const GTFModel& m);

// Brute-force check of the four orphan-world regularities: universal
// truth on ⋃μ propagates to ◇ (when ∅ ∉ F_v) and to □ (when F_v ≠ ∅),
// nonempty families everywhere make □ global, and worlds with equal
// families agree on the box-rooted fragment.
ValidationReport check_regularities(const GTFModel& m,
                                    const std::vector<std::string>& vars = {
                                        "p", "q"},
                                    int max_nodes = 4, NameTable names = {});

}  // namespace gentop
