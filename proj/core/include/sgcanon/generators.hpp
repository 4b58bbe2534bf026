#pragma once

#include <cstdint>

#include "sgcanon/colgraph.hpp"
#include "sgcanon/sitegraph.hpp"

namespace sgcanon {

// The three-vertex worked example used throughout the tests: two blue
// vertices and a red one, one symmetric bond and two asymmetric ones.
SiteGraph make_fig1();

// Four vertices on a blue directed 4-cycle with red bidirectional chords;
// rigid, two automorphisms, a single bisimulation class over real states.
ColouredGraph make_fig4a();

// Sixteen vertices: four blue 4-cycles stitched by red bidirectional pairs;
// rigid, with a reflection automorphism, and bisimulation-equivalent
// everywhere (one real class of 16).
ColouredGraph make_fig4b();

// Directed n-cycle.  With colour_count == 1 every edge shares one colour and
// the graph has n automorphisms; larger counts break the symmetry by
// cycling through that many colours.
ColouredGraph make_cycle(int n, int colour_count = 1);

// Directed path 1 -> 2 -> ... -> n with one edge colour; trivial
// automorphism group.
ColouredGraph make_chain(int n);

// Random rigid coloured tree on n vertices: random parent links, random
// edge orientation, colours drawn from a small palette under the constraint
// that no vertex repeats a colour among its out-edges or among its
// in-edges.  Deterministic in (n, seed).
ColouredGraph make_tree(int n, std::uint64_t seed, int max_children = 3);

// Random connected site graph: a bond spanning tree plus extra bonds,
// random protein naming, respecting one-bond-per-site.  Deterministic in
// its arguments.
SiteGraph make_random_site_graph(int n, int protein_count, int site_count,
                                 std::uint64_t seed);

}  // namespace sgcanon
