#pragma once

#include <string>
#include <vector>

namespace gentop {

class WorldSet;

// A single failed check, identified by a short rule id plus a
// human-readable witness of the failure.
struct Violation {
  std::string rule;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }

  void add(std::string rule, std::string witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }

  std::string to_string() const;
};

// Maps world indices to display names. With no table attached, worlds
// print as w0, w1, ...
struct NameTable {
  const std::vector<std::string>* names = nullptr;

  std::string world(int w) const;
  std::string set(const WorldSet& ws) const;
};

}  // namespace gentop
