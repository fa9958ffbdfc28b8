#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "gentop/formula.hpp"
#include "gentop/gtf.hpp"
#include "gentop/report.hpp"
#include "gentop/topology.hpp"

namespace gentop {

// Two-modality model: □ is read directly off the topology, ■ routes
// Y1 worlds through the link function into ⋃μ and reads Y2 worlds
// against their raw neighbourhood family (truth-set membership).
struct GTFFModel {
  GenTopology topology;
  WorldSet y1;
  WorldSet y2;
  std::vector<int> link;  // f(w) for w ∈ Y1, -1 elsewhere
  WorldSet n_domain;      // worlds whose family is defined
  std::vector<std::vector<WorldSet>> N;  // arbitrary subsets of W
  Valuation valuation;
};

ValidationReport validate_gtff(const GTFFModel& m, NameTable names = {});

// GTFI additionally requires ⋃μ ⊆ Y1 with the link the identity there.
ValidationReport validate_gtfi(const GTFFModel& m, NameTable names = {});

class GTFFEvaluator {
 public:
  explicit GTFFEvaluator(const GTFFModel& m) : m_(m) {}

  WorldSet truth_set(const FormulaPtr& f);
  bool forces(int w, const FormulaPtr& f);

 private:
  WorldSet eval(const FormulaPtr& f);

  const GTFFModel& m_;
  std::unordered_map<const Formula*, WorldSet> memo_;
  std::vector<FormulaPtr> pinned_;
};

WorldSet truth_set_gtff(const GTFFModel& m, const FormulaPtr& f);
bool forces_gtff(const GTFFModel& m, int w, const FormulaPtr& f);

struct SchemaResult {
  SchemaId id;
  bool valid = true;
  int instances_checked = 0;
  FormulaPtr failing_instance;  // set when not valid
  int counter_world = -1;
};

struct AxiomReport {
  std::vector<SchemaResult> results;

  bool all_valid() const {
    for (const auto& r : results)
      if (!r.valid) return false;
    return true;
  }
};

// Validity of each schema over every instantiation of its
// metavariables with formulas enumerated up to the node bound.
AxiomReport axiom_report(const GTFFModel& m, std::span<const SchemaId> schemas,
                         const std::vector<std::string>& vars, int max_nodes);

enum class ExtRule { REBox, REBlackBox };

struct RuleReport {
  ExtRule rule;
  bool admissible = true;
  int pairs_checked = 0;
  FormulaPtr phi, psi;  // failing pair when not admissible
};

// For every enumerated pair with equal truth sets, the modalized truth
// sets must be equal as well.
RuleReport rule_admissibility(const GTFFModel& m, ExtRule rule,
                              const std::vector<std::string>& vars,
                              int max_nodes);

struct Section5Report {
  // Universal claims: counterexamples, if any.
  std::vector<std::pair<int, FormulaPtr>> black_to_box_failures;   // on ⋃μ
  std::vector<std::pair<int, FormulaPtr>> black_to_bdia_failures;  // on Y1
  // Existence searches: witnesses found.
  std::vector<std::pair<int, FormulaPtr>> black_to_dia_witnesses;  // Y1 \ ⋃μ
  std::vector<std::pair<int, FormulaPtr>> y2_black_to_bdia_witnesses;
  int formulas_checked = 0;
};

// World-level properties of GTFI models: ■φ→□φ on ⋃μ and ■φ→◆φ on Y1
// hold universally; failures of ■ψ→◇ψ on Y1\⋃μ and of ■φ→◆φ on Y2 are
// searched for and reported as witnesses.
Section5Report section5_properties(const GTFFModel& m,
                                   const std::vector<std::string>& vars,
                                   int max_nodes);

}  // namespace gentop
