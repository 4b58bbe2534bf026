#pragma once

#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "sgcanon/colgraph.hpp"
#include "sgcanon/permutation.hpp"

namespace sgcanon {

// Result of a breadth-first edge enumeration from a fixed start vertex:
// `order` lists edge indices in discovery order (every edge exactly once),
// `renaming` maps each original vertex to its visit rank, and
// `edges_examined` counts adjacency-list entries inspected.
struct EdgeEnumeration {
  std::vector<int> order;
  Permutation renaming;
  std::size_t edges_examined = 0;
};

// Breadth-first enumeration: dequeue a vertex, walk its out-edges in colour
// order then its in-edges in colour order, assign each newly seen vertex the
// next rank and enqueue it.  Requires g connected with at least one vertex;
// throws Error otherwise.
EdgeEnumeration bfs_enumerate(const ColouredGraph& g, int start);

// An edge as seen through a renaming: endpoints renamed, colour kept.
struct AnnotatedEdge {
  int source = 0;
  int target = 0;
  Colour colour;

  bool operator==(const AnnotatedEdge&) const = default;
};

// Order on annotated edges: (source, target) lexicographically, then colour.
std::strong_ordering annotated_edge_compare(const AnnotatedEdge& a,
                                            const AnnotatedEdge& b);

// The enumeration's edges, renamed through its own renaming, in discovery
// order.
std::vector<AnnotatedEdge> converted_sequence(const ColouredGraph& g,
                                              const EdgeEnumeration& e);

// Lexicographic comparison of two enumerations' converted sequences.  Both
// enumerations must come from g (same edge count as g); equal sequences
// imply the two renamings produce the same renamed graph.
std::strong_ordering compare_converted(const ColouredGraph& g,
                                       const EdgeEnumeration& a,
                                       const EdgeEnumeration& b);

// Incremental form of bfs_enumerate: next() yields one discovered edge at a
// time (endpoints already renamed), then a Done carrying the fully renamed
// graph and the renaming.  Step-by-step output allows interleaving many
// enumerations and comparing their prefixes without finishing them.
class LazyEnumerator {
 public:
  struct Step {
    int edge_index = 0;   // index into the original graph's edge list
    AnnotatedEdge edge;   // endpoints renamed to visit ranks
  };
  struct Done {
    ColouredGraph graph;
    Permutation renaming;
  };

  // Requires g connected and non-empty; throws Error otherwise.  The graph
  // must outlive the enumerator.
  LazyEnumerator(const ColouredGraph& g, int start);

  int start() const { return start_; }
  bool finished() const { return finished_; }
  std::size_t edges_examined() const { return examined_; }

  // Yields the next discovered edge, or Done after the last edge.  Throws
  // Error when called again after Done.
  std::variant<Step, Done> next();

 private:
  const ColouredGraph* g_;
  int start_;
  bool finished_ = false;
  std::vector<int> rank_;        // 0 = unvisited, else visit rank
  int next_rank_ = 1;
  std::vector<int> queue_;       // every vertex enters once; head_ dequeues
  std::size_t queue_head_ = 0;
  std::vector<char> edge_seen_;
  std::size_t examined_ = 0;
  int current_vertex_ = 0;       // vertex whose lists are being walked
  bool walking_ = false;
  std::size_t out_pos_ = 0;
  std::size_t in_pos_ = 0;
};

}  // namespace sgcanon
