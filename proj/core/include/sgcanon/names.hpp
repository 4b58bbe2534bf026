#pragma once

#include <compare>
#include <string>
#include <utility>

#include "sgcanon/error.hpp"

namespace sgcanon {

// Protein and site names are non-empty tokens ordered byte-wise.  The two
// namespaces are disjoint by construction: the types never mix.

class ProteinName {
 public:
  ProteinName() = default;
  explicit ProteinName(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw Error("protein name must be a non-empty token");
  }

  const std::string& value() const { return value_; }

  auto operator<=>(const ProteinName&) const = default;

 private:
  std::string value_;
};

class SiteName {
 public:
  SiteName() = default;
  explicit SiteName(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw Error("site name must be a non-empty token");
  }

  const std::string& value() const { return value_; }

  auto operator<=>(const SiteName&) const = default;

 private:
  std::string value_;
};

// An ordered pair of site names, as used in edge colours.
using SitePair = std::pair<SiteName, SiteName>;

}  // namespace sgcanon
