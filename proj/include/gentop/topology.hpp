#pragma once

#include <span>
#include <vector>

#include "gentop/report.hpp"
#include "gentop/worldset.hpp"

namespace gentop {

// A generalized topology: a family of open sets containing the empty
// set and closed under unions. The whole universe need not be open,
// so the union of all opens may leave some worlds uncovered.
struct GenTopology {
  int universe_size = 0;
  // Canonically ordered (cardinality, then bit pattern), duplicate-free.
  std::vector<WorldSet> opens;

  bool contains(const WorldSet& x) const;
  WorldSet union_of_opens() const;
};

// Sorts, deduplicates and returns the family in canonical order.
std::vector<WorldSet> canonical_family(std::span<const WorldSet> family);

// Checks the two defining conditions on a finite family: membership of
// the empty set and closure under binary unions (equivalent to closure
// under arbitrary nonempty unions for finite families). Mismatched
// universe sizes are an input error, not a violation.
ValidationReport validate_topology(int universe_size,
                                   std::span<const WorldSet> family,
                                   NameTable names = {});

// Smallest generalized topology containing the base. Idempotent.
GenTopology close_under_unions(int universe_size,
                               std::span<const WorldSet> base);

// True iff the whole universe is open.
bool is_strong(const GenTopology& t);

// Union of all opens contained in x. Always a member of the topology.
WorldSet interior(const GenTopology& t, const WorldSet& x);

// Complement dual of the interior: W \ Int(W \ x).
WorldSet closure(const GenTopology& t, const WorldSet& x);

// Int(Cl(a)) empty.
bool is_nowhere_dense(const GenTopology& t, const WorldSet& a);

// Every nonempty open G contains a nonempty open H disjoint from a.
// Strictly stronger than is_nowhere_dense on generalized topologies.
bool is_strongly_nowhere_dense(const GenTopology& t, const WorldSet& a);

// The catalogue of small example spaces, usable as test fixtures and
// from the CLI generator.
GenTopology example_1();  // {∅,{a},{b},{a,b}} on three worlds
GenTopology example_2();  // strong seven-open space on three worlds
// All subsets of W \ x ("forbidden set" space); x must be nonempty.
GenTopology forbidden_space(int universe_size, const WorldSet& x);
// Nested chain {∅,{w0},{w0,w1},...} with `length` nonempty opens on a
// universe of length+1 worlds, so one world stays uncovered.
GenTopology chain_space(int length);

}  // namespace gentop
