#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gentop/gtf.hpp"
#include "gentop/report.hpp"

namespace gentop {

// Relation between the worlds of two models.
struct WorldRelation {
  int left_universe = 0;
  int right_universe = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted, duplicate-free

  bool contains(int w, int v) const;
  void insert(int w, int v);
};

// Checks the kind-specific back-and-forth conditions on every related
// pair, plus atomic harmony. Kind 0 quantifies over opens containing
// the related worlds, kind 1 over nonempty opens of the respective
// families with witnesses drawn from the other family, kind 2 over the
// same triggers with the matching done on the A⁻¹ sets.
ValidationReport is_bisimulation(int kind, const GTFModel& m1,
                                 const GTFModel& m2, const WorldRelation& rel,
                                 NameTable left_names = {},
                                 NameTable right_names = {});

// Greatest fixpoint: starts from full atomic harmony and removes pairs
// violating the forth/back conditions until stable. Empty result means
// no bisimulation of that kind exists.
std::optional<WorldRelation> largest_bisimulation(int kind, const GTFModel& m1,
                                                  const GTFModel& m2);

// Total function between the universes of two frames.
struct ModelMap {
  std::vector<int> to;  // indexed by left world

  int operator()(int w) const { return to[static_cast<std::size_t>(w)]; }
  int left_universe() const { return static_cast<int>(to.size()); }
};

struct MapProperties {
  bool continuous = false;
  bool open = false;
  bool f_continuous = false;
  bool f_open = false;
};

MapProperties map_properties(const ModelMap& f, const GTFFrame& left,
                             const GTFFrame& right);

// Builds the left model by pulling the right valuation back along the
// map, and returns it with the graph of the map. Kind 0 requires a
// continuous and open map, kind 1 an F-continuous and F-open one; a
// missing property raises std::invalid_argument naming it.
std::pair<GTFModel, WorldRelation> bisim_from_map(int kind, const ModelMap& f,
                                                  const GTFFrame& left,
                                                  const GTFModel& right);

enum class ModalLanguage { Box, Bullet };

struct EquivalenceReport {
  bool equivalent = true;
  FormulaPtr distinguishing;  // set when not equivalent
  int formulas_checked = 0;
};

// Brute-force comparison of two points over every formula of the
// chosen single-modality language up to the node bound.
EquivalenceReport modal_equivalence(const GTFModel& m1, int w,
                                    const GTFModel& m2, int v,
                                    const std::vector<std::string>& vars,
                                    int max_nodes, ModalLanguage language);

}  // namespace gentop
