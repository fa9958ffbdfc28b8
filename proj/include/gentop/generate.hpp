#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gentop/gtf.hpp"
#include "gentop/gtff.hpp"
#include "gentop/gtn.hpp"
#include "gentop/ifs.hpp"

namespace gentop {

struct SearchConfig {
  std::uint64_t seed = 0;
  int max_worlds = 4;
  int max_opens = 8;
  int var_count = 2;
  int max_nodes = 5;
  long budget = 10000;
};

// Deterministic RNG wrapper; bounded draws avoid the distribution
// classes, whose output is not pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  WorldSet subset(int universe) {
    return WorldSet::from_bits(
        universe, next() & (universe == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << universe) - 1));
  }

 private:
  std::mt19937_64 eng_;
};

std::vector<std::string> default_variables(int count);

// All generalized topologies on a universe of n worlds (optionally
// capped by family size). Candidate families are scanned exhaustively,
// so n is capped at 4.
std::vector<GenTopology> enumerate_topologies(int n, int max_opens = -1);

// All subfamilies of the opens with at most max_size members.
std::vector<std::vector<WorldSet>> enumerate_subfamilies(
    const GenTopology& t, int max_size);

// Drives a callback over every GTF-model in the bounded population:
// all topologies on up to max_worlds worlds, all orphan families with
// at most orphan_max opens, all valuations of the given variables.
void for_each_gtf_model(int max_worlds, int max_opens, int orphan_max,
                        const std::vector<std::string>& vars,
                        const std::function<void(const GTFModel&)>& fn);

// Same drive over two-modality models; Y2 families carry at most
// family_max arbitrary subsets of the universe.
void for_each_gtff_model(int max_worlds, int max_opens, int family_max,
                         const std::vector<std::string>& vars, bool gtfi_only,
                         const std::function<void(const GTFFModel&)>& fn);

GenTopology random_topology(Rng& rng, int max_worlds, int max_base);
GTFModel random_gtf(Rng& rng, const SearchConfig& cfg, bool consistent);
StrongModel random_strong(Rng& rng, const SearchConfig& cfg);
GTNModel random_gtn(Rng& rng, const SearchConfig& cfg);
GTFFModel random_gtff(Rng& rng, const SearchConfig& cfg, bool gtfi);
// Orphan families of the shape {Y open : Y ∩ P ≠ ∅}, which satisfy the
// in-fact-strong conditions by construction.
GTFModel random_ifs(Rng& rng, const SearchConfig& cfg);

}  // namespace gentop
