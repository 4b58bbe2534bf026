#pragma once

#include <vector>

#include "sgcanon/colour.hpp"
#include "sgcanon/error.hpp"
#include "sgcanon/permutation.hpp"

namespace sgcanon {

// A directed coloured edge.  Parallel edges between the same ordered vertex
// pair are allowed as long as their colours differ.
struct ColouredEdge {
  int from = 0;
  int to = 0;
  Colour colour;

  bool operator==(const ColouredEdge&) const = default;
};

// An edge-coloured directed graph on vertices 1..n.  Edges are stored sorted
// by (from, to, colour); adjacency lists are kept sorted by colour so that
// enumeration visits edges in colour order without re-sorting.
class ColouredGraph {
 public:
  ColouredGraph() = default;
  ColouredGraph(int vertex_count, std::vector<ColouredEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<ColouredEdge>& edges() const { return edges_; }

  // Edge indices leaving / entering v, each list sorted by edge colour.
  // Self-loops appear only in the out list.
  const std::vector<int>& out_edges(int v) const;
  const std::vector<int>& in_edges(int v) const;

  // Distinct colours in use, sorted by colour_compare; ids index this list.
  const std::vector<Colour>& colours() const { return colours_; }
  int colour_id(const Colour& c) const;  // -1 when absent

  // colour_id of every edge, aligned with edges().  Comparing ids orders
  // edge colours exactly like colour_compare.
  const std::vector<int>& edge_colour_ids() const { return edge_colour_ids_; }

  bool operator==(const ColouredGraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<ColouredEdge> edges_;       // sorted by (from, to, colour)
  std::vector<std::vector<int>> out_;     // per vertex, sorted by colour
  std::vector<std::vector<int>> in_;      // per vertex, sorted by colour
  std::vector<Colour> colours_;           // sorted, duplicate-free
  std::vector<int> edge_colour_ids_;      // aligned with edges_
};

// Violations of rigidity: a vertex with two out-edges (or two in-edges) of
// the same colour.
std::vector<Violation> check_rigidity(const ColouredGraph& g);

// Equivalent to check_rigidity(g).empty(), without building the report.
bool is_rigid(const ColouredGraph& g);

// Whether g is connected when edge directions are ignored.  The empty graph
// counts as disconnected.
bool is_connected(const ColouredGraph& g);

// The image of g under alpha: every edge (u, v, c) becomes
// (alpha(u), alpha(v), c).  Throws Error on size mismatch.
ColouredGraph apply_renaming(const ColouredGraph& g, const Permutation& alpha);

// Whether alpha maps g onto h, i.e. apply_renaming(g, alpha) == h.  Throws
// Error when alpha's size differs from g's.
bool is_isomorphism(const ColouredGraph& g, const ColouredGraph& h,
                    const Permutation& alpha);

}  // namespace sgcanon
