#pragma once

#include <unordered_map>
#include <vector>

#include "gentop/gtf.hpp"
#include "gentop/report.hpp"
#include "gentop/topology.hpp"

namespace gentop {

// Neighbourhood model. Families are superset-closed within ⋃N, so each
// one is stored as its antichain of ⊆-minimal members; membership of
// the full family is computed on demand against ⋃N.
struct GTNModel {
  int universe_size = 0;
  std::vector<std::vector<WorldSet>> minimal;  // antichain per world
  // ⋃N of the represented families. Kept explicitly: a non-minimal
  // member may reach beyond the union of the minimal sets, and the
  // closure is taken within this host.
  WorldSet n_union;
  Valuation valuation;

  WorldSet union_of_n() const { return n_union; }
  bool in_family(int w, const WorldSet& x) const;
  // Explicit expansion of one family; guarded against large ⋃N.
  std::vector<WorldSet> family_members(int w) const;
};

struct GTNLoadInfo {
  bool closure_added_sets = false;
};

// Reduces raw explicit families to antichain form. Superset closure
// within ⋃N is applied implicitly by the representation; `info`
// records whether that closure added sets absent from the input.
GTNModel make_gtn_model(int universe_size,
                        const std::vector<std::vector<WorldSet>>& families,
                        Valuation valuation, GTNLoadInfo* info = nullptr);

// Worlds lying in each of their own (nonempty collection of)
// neighbourhoods, and worlds lying in no neighbourhood at all.
WorldSet w1_worlds(const GTNModel& m);
WorldSet w2_worlds(const GTNModel& m);

ValidationReport validate_gtn(const GTNModel& m, NameTable names = {});

class GTNEvaluator {
 public:
  explicit GTNEvaluator(const GTNModel& m) : m_(m) {}

  WorldSet truth_set(const FormulaPtr& f);
  bool forces(int w, const FormulaPtr& f);

 private:
  WorldSet eval(const FormulaPtr& f);

  const GTNModel& m_;
  std::unordered_map<const Formula*, WorldSet> memo_;
  std::vector<FormulaPtr> pinned_;
};

WorldSet truth_set_gtn(const GTNModel& m, const FormulaPtr& f);
bool forces_gtn(const GTNModel& m, int w, const FormulaPtr& f);

// μ = {X ⊆ ⋃N : every member of X has X among its neighbourhoods}.
// Always a valid generalized topology whose union of opens is ⋃N.
GenTopology induced_topology(const GTNModel& m);

// Pointwise-equivalent model transformations. gtn_to_gtf keeps each
// family restricted to the induced opens (the construction behind the
// equivalence theorem); gtf_to_gtn takes generalized neighbourhoods.
GTFModel gtn_to_gtf(const GTNModel& m);
GTNModel gtf_to_gtn(const GTFModel& m);

}  // namespace gentop
