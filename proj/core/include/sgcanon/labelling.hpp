#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgcanon/colgraph.hpp"
#include "sgcanon/digest.hpp"
#include "sgcanon/permutation.hpp"

namespace sgcanon {

// A canonical labelling result: the renamed graph, the renaming that
// produced it, and its canonical byte serialisation with digest.
struct CanonicalForm {
  ColouredGraph graph;
  Permutation witness;
  std::string bytes;
  Sha256 digest;

  std::string digest_hex() const;
};

// Optional counters filled in by the labellers.
struct LabelStats {
  std::size_t outer_iterations = 0;   // pairwise: pending-set passes
  std::size_t parallel_rounds = 0;    // parallel: lockstep rounds run
  std::size_t rounds_to_unique = 0;   // parallel: rounds until one survivor
  std::vector<std::size_t> survivor_trace;  // parallel: survivors per round
  std::size_t refine_class_count = 0;       // combined: real classes found
  std::size_t least_class_size = 0;         // combined: |starts| used
};

// Canonical labelling by pairwise comparison of breadth-first enumerations.
// Runs the enumeration from every start in `starts` (default: all vertices),
// keeps the minimum under the converted-sequence order, and after each full
// pass prunes starts that a discovered automorphism proves redundant.
// Requires g rigid, connected and non-empty; throws Error otherwise.
CanonicalForm canon_pairwise(const ColouredGraph& g,
                             std::optional<std::vector<int>> starts = {},
                             LabelStats* stats = nullptr, bool prune = true);

// Canonical labelling by running all starts' enumerations in lockstep,
// keeping after each round only those whose newest renamed edge is minimal.
// Same preconditions and result as canon_pairwise.
CanonicalForm canon_parallel(const ColouredGraph& g,
                             std::optional<std::vector<int>> starts = {},
                             LabelStats* stats = nullptr);

enum class InnerLabeller { kPairwise, kParallel };

// Canonical labelling with a refinement front end: partition-refine the
// graph's states, take the least class over real states as the start set,
// and run the chosen inner labeller on it.  The result is canonical but may
// differ from the whole-vertex-set labellers' choice of form.
CanonicalForm canon_combined(const ColouredGraph& g,
                             InnerLabeller inner = InnerLabeller::kParallel,
                             LabelStats* stats = nullptr);

// Runs the pairwise and parallel labellers concurrently and returns the
// first to finish, cancelling the other.  A loser's error never wins: an
// error is thrown only when both labellers fail.
CanonicalForm canon_race(const ColouredGraph& g);

// Assembles the full result (renamed graph, bytes, digest) for a renaming.
CanonicalForm make_canonical_form(const ColouredGraph& g,
                                  const Permutation& witness);

}  // namespace sgcanon
