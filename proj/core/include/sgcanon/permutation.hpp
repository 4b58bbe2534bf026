#pragma once

#include <vector>

#include "sgcanon/error.hpp"

namespace sgcanon {

// A bijection on the vertex set {1, ..., n}.  Used both for site-graph
// isomorphism witnesses and for coloured-graph renamings.
class Permutation {
 public:
  Permutation() = default;

  // images[v-1] is the image of vertex v; must be a bijection on 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }

  int operator()(int v) const;

  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// compose(outer, inner)(v) == outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace sgcanon
