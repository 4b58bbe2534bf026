#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgcanon/names.hpp"

namespace sgcanon {

// An edge colour: an optional protein name together with a set of site
// pairs.  Self-loop colours carry a protein name (plus any same-vertex
// pairs); colours between distinct vertices carry pairs only.  At least one
// of the two parts is always present.
//
// Colours are immutable and share their representation, so copies are cheap
// and comparisons between copies of one colour short-circuit on identity.
class Colour {
 public:
  static Colour protein(ProteinName name);
  static Colour site_pairs(std::vector<SitePair> pairs);
  static Colour self_loop(ProteinName name, std::vector<SitePair> pairs);

  bool has_protein() const { return rep_->protein.has_value(); }
  const ProteinName& protein_name() const;
  const std::vector<SitePair>& pairs() const { return rep_->pairs; }

  bool operator==(const Colour& other) const;

 private:
  struct Rep {
    std::optional<ProteinName> protein;
    std::vector<SitePair> pairs;  // sorted, duplicate-free
  };

  explicit Colour(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;

  friend std::strong_ordering colour_compare(const Colour& a, const Colour& b);
};

// Total order on colours: protein-carrying colours first (by name, then
// pairs), pure pair-set colours after, pairs compared lexicographically.
std::strong_ordering colour_compare(const Colour& a, const Colour& b);

inline bool colour_less(const Colour& a, const Colour& b) {
  return colour_compare(a, b) < 0;
}

// Human-readable rendering, e.g. `B{(a,b),(beta,alpha)}` or `{(c,c)}`.
std::string describe(const Colour& c);

}  // namespace sgcanon
