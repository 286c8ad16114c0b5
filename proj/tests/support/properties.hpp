#pragma once

#include <string>
#include <vector>

// Randomized and exhaustive property checks shared by the unit tests and the
// acceptance runner.
namespace gem::testkit {

struct PropertyResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && checks > 0; }
};

PropertyResult dipole_insertions(int per_graph = 200, unsigned seed = 1);
PropertyResult component_counts_vs_flood_fill(unsigned seed = 2);
PropertyResult isomorphism_vs_brute_force(int trials = 120, unsigned seed = 3);
PropertyResult signature_law(int relabelings = 50, unsigned seed = 4);
PropertyResult combined_move_vs_dipoles();
PropertyResult singleton_glue_vs_dipole(unsigned seed = 5);

}  // namespace gem::testkit
