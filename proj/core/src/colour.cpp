#include "sgcanon/colour.hpp"

#include <algorithm>
#include <utility>

#include "sgcanon/error.hpp"

namespace sgcanon {

namespace {

std::vector<SitePair> normalise_pairs(std::vector<SitePair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

Colour Colour::protein(ProteinName name) {
  return Colour(std::make_shared<const Rep>(Rep{std::move(name), {}}));
}

Colour Colour::site_pairs(std::vector<SitePair> pairs) {
  if (pairs.empty()) throw Error("a pure pair colour needs at least one pair");
  return Colour(std::make_shared<const Rep>(
      Rep{std::nullopt, normalise_pairs(std::move(pairs))}));
}

Colour Colour::self_loop(ProteinName name, std::vector<SitePair> pairs) {
  return Colour(std::make_shared<const Rep>(
      Rep{std::move(name), normalise_pairs(std::move(pairs))}));
}

const ProteinName& Colour::protein_name() const {
  if (!rep_->protein) throw Error("colour has no protein part");
  return *rep_->protein;
}

bool Colour::operator==(const Colour& other) const {
  return rep_ == other.rep_ || colour_compare(*this, other) == 0;
}

std::strong_ordering colour_compare(const Colour& a, const Colour& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  // Protein-carrying colours sort before pure pair colours.
  if (a.has_protein() != b.has_protein()) {
    return a.has_protein() ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  }
  if (a.has_protein()) {
    if (auto c = a.protein_name() <=> b.protein_name(); c != 0) return c;
  }
  return a.pairs() <=> b.pairs();
}

std::string describe(const Colour& c) {
  std::string out;
  if (c.has_protein()) out += c.protein_name().value();
  if (!c.pairs().empty() || !c.has_protein()) {
    out += "{";
    bool first = true;
    for (const SitePair& p : c.pairs()) {
      if (!first) out += ",";
      first = false;
      out += "(" + p.first.value() + "," + p.second.value() + ")";
    }
    out += "}";
  }
  return out;
}

}  // namespace sgcanon
