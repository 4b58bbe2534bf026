#pragma once

#include <optional>
#include <vector>

#include "sgcanon/colgraph.hpp"
#include "sgcanon/permutation.hpp"

namespace sgcanon {

// Vertex orbits under the automorphism group, plus the group's size.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // each sorted; sorted by first member
  long long automorphism_count = 0;
};

// Reference canonical form: minimum over all n! renamings of the renamed
// edge list, compared as sorted (from, to, colour-id) triples.  Exact but
// factorial; throws Error when vertex_count exceeds `limit`.
ColouredGraph canon_bruteforce(const ColouredGraph& g, int limit = 8);

// Reference isomorphism search over all n! candidate maps.  Returns an
// isomorphism g -> h when one exists, nullopt otherwise (including when the
// two graphs differ in size).  Throws Error above `limit`.
std::optional<Permutation> iso_bruteforce(const ColouredGraph& g,
                                          const ColouredGraph& h,
                                          int limit = 8);

// Isomorphism search that fixes the image of vertex 1 and propagates along
// edges; on rigid connected graphs each candidate image is checked in
// O(edges), so the whole search is O(n * edges).  Exact on rigid connected
// inputs; throws Error when either graph is not rigid/connected or exceeds
// `limit`.
std::optional<Permutation> iso_pruned(const ColouredGraph& g,
                                      const ColouredGraph& h,
                                      int limit = 200);

// All automorphisms of a rigid connected graph, via iso_pruned's
// propagation from each candidate image of vertex 1.  |result| <= n.
std::vector<Permutation> automorphisms_pruned(const ColouredGraph& g,
                                              int limit = 200);

// Orbit partition from automorphisms_pruned.
OrbitPartition orbits_bruteforce(const ColouredGraph& g, int limit = 200);

// Orbit partition from the full n! automorphism scan; validates the pruned
// version on small graphs.  Throws Error above `limit`.
OrbitPartition orbits_naive(const ColouredGraph& g, int limit = 8);

}  // namespace sgcanon
