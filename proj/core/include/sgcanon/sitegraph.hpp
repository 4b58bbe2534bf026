#pragma once

#include <compare>
#include <vector>

#include "sgcanon/error.hpp"
#include "sgcanon/names.hpp"
#include "sgcanon/permutation.hpp"

namespace sgcanon {

// One end of a bond: a (vertex, site) pair.
struct SiteEndpoint {
  int vertex = 0;
  SiteName site;

  auto operator<=>(const SiteEndpoint&) const = default;
};

// An undirected bond between two sites.  Stored with the smaller endpoint
// first so bonds compare and serialise deterministically.
struct Bond {
  SiteEndpoint a;
  SiteEndpoint b;

  Bond() = default;
  Bond(SiteEndpoint x, SiteEndpoint y);

  auto operator<=>(const Bond&) const = default;
};

// A site graph: vertices 1..n named with proteins, plus site-labelled bonds.
// Construction normalises bond order and drops exact duplicates; semantic
// well-formedness is checked separately by validate() so that broken inputs
// can be reported in full.
class SiteGraph {
 public:
  SiteGraph() = default;
  SiteGraph(int vertex_count, std::vector<ProteinName> naming,
            std::vector<Bond> bonds);

  int vertex_count() const { return vertex_count_; }
  const ProteinName& protein(int v) const;
  const std::vector<ProteinName>& naming() const { return naming_; }
  const std::vector<Bond>& bonds() const { return bonds_; }

  bool operator==(const SiteGraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<ProteinName> naming_;
  std::vector<Bond> bonds_;  // sorted, duplicate-free
};

// All well-formedness violations: endpoints in range, endpoints of a bond
// distinct as (vertex, site) pairs, and no site used by two distinct bonds.
std::vector<Violation> validate(const SiteGraph& s);

// Whether the underlying vertex graph is connected (bonds between two
// distinct vertices connect them; a graph needs at least one vertex).
bool is_connected(const SiteGraph& s);

// Whether iota maps s onto t: bonds correspond exactly and protein names are
// preserved.  Throws Error if the two graphs differ in size or iota has the
// wrong size.
bool is_site_isomorphism(const SiteGraph& s, const SiteGraph& t,
                         const Permutation& iota);

// The image of s under iota.  Throws Error on size mismatch.
SiteGraph apply_site_permutation(const SiteGraph& s, const Permutation& iota);

}  // namespace sgcanon
